#pragma once

// Finite covers, the compatibility conditions (i)-(iii), the kernel ideal of
// a homomorphism, one derivation step E -> E(E, R) and the resulting tower of
// semilattices together with exactness and stabilizer checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "indres/integer.hpp"
#include "indres/integer_matrix.hpp"
#include "indres/semilattice.hpp"

namespace indres {

  using MemberSet = std::vector<Element>;  // sorted, duplicate-free

  ////////////////////////////////////////////////////////////////////////////
  // Covers
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline MemberSet normalized(MemberSet m) {
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      return m;
    }

    inline std::string set_label(FiniteSemilattice const& E, MemberSet const& m) {
      std::string s = "[";
      for (std::size_t i = 0; i < m.size(); ++i) {
        s += (i == 0 ? "" : ", ") + E.label(m[i]);
      }
      return s + "]";
    }

  }  // namespace detail

  // Why F fails to be a finite cover of e, or nullopt if it is one.
  inline std::optional<std::string> cover_defect(FiniteSemilattice const& E,
                                                 Element                  e,
                                                 MemberSet const&         F) {
    if (e >= E.size() || e == E.zero()) {
      throw DomainError("finite cover: base must be a nonzero element");
    }
    if (F.empty()) {
      throw DomainError("finite cover: empty family");
    }
    for (Element f : F) {
      if (f >= E.size() || f == E.zero()) {
        throw DomainError("finite cover: members must be nonzero elements");
      }
      if (!E.leq(f, e)) {
        return "member " + E.label(f) + " is not below " + E.label(e);
      }
    }
    for (Element f : E.nonzero()) {
      if (!E.leq(f, e)) {
        continue;
      }
      bool met = false;
      for (Element fj : F) {
        if (E.product(f, fj) != E.zero()) {
          met = true;
          break;
        }
      }
      if (!met) {
        return "no member meets " + E.label(f);
      }
    }
    return std::nullopt;
  }

  inline bool is_finite_cover(FiniteSemilattice const& E,
                              Element                  e,
                              MemberSet const&         F) {
    return !cover_defect(E, e, F);
  }

  // e -> ordered list of finite covers of e.
  class CoverSystem {
   public:
    explicit CoverSystem(SemilatticePtr E)
        : _E(std::move(E)), _covers(_E->size()) {}

    SemilatticePtr const& semilattice() const noexcept {
      return _E;
    }

    // Adds a cover of e; a cover already present is ignored. Returns the
    // 0-based index of the cover in R(e).
    std::size_t add(Element e, MemberSet members) {
      if (e >= _E->size() || e == _E->zero()) {
        throw DomainError("cover system: base must be a nonzero element");
      }
      members = detail::normalized(std::move(members));
      if (members.empty()) {
        throw DomainError("cover system: empty cover for " + _E->label(e));
      }
      for (Element f : members) {
        if (f >= _E->size() || f == _E->zero()) {
          throw DomainError("cover system: cover of " + _E->label(e)
                            + " contains zero or an unknown element");
        }
      }
      auto& list = _covers[e];
      auto  it   = std::find(list.begin(), list.end(), members);
      if (it != list.end()) {
        return static_cast<std::size_t>(it - list.begin());
      }
      list.push_back(std::move(members));
      return list.size() - 1;
    }

    std::vector<MemberSet> const& covers(Element e) const {
      return _covers.at(e);
    }

    bool contains(Element e, MemberSet const& members) const {
      auto const& list = _covers.at(e);
      return std::find(list.begin(), list.end(), members) != list.end();
    }

    std::size_t sup_size() const {
      std::size_t m = 0;
      for (auto const& list : _covers) {
        m = std::max(m, list.size());
      }
      return m;
    }

    std::size_t total() const {
      std::size_t m = 0;
      for (auto const& list : _covers) {
        m += list.size();
      }
      return m;
    }

    friend bool operator==(CoverSystem const& a, CoverSystem const& b) {
      return *a._E == *b._E && a._covers == b._covers;
    }

   private:
    SemilatticePtr                      _E;
    std::vector<std::vector<MemberSet>> _covers;
  };

  // (d . R)^x: the nonzero products d f, f in R.
  inline MemberSet times(FiniteSemilattice const& E, Element d, MemberSet const& R) {
    MemberSet out;
    for (Element f : R) {
      Element const df = E.product(d, f);
      if (df != E.zero()) {
        out.push_back(df);
      }
    }
    return detail::normalized(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Conditions (i)-(iii)
  ////////////////////////////////////////////////////////////////////////////

  struct ConditionResult {
    bool        pass = true;
    std::string witness;

    void fail(std::string w) {
      if (pass) {
        pass    = false;
        witness = std::move(w);
      }
    }
  };

  struct ConditionReport {
    ConditionResult covers;  // every listed family is a finite cover
    ConditionResult cond_i;
    ConditionResult cond_ii;
    ConditionResult cond_iii;

    bool all() const noexcept {
      return covers.pass && cond_i.pass && cond_ii.pass && cond_iii.pass;
    }

    // The first failing witness, prefixed by its condition.
    std::string first_failure() const {
      if (!covers.pass) {
        return "cover fails: " + covers.witness;
      }
      if (!cond_i.pass) {
        return "(i) fails: " + cond_i.witness;
      }
      if (!cond_ii.pass) {
        return "(ii) fails: " + cond_ii.witness;
      }
      if (!cond_iii.pass) {
        return "(iii) fails: " + cond_iii.witness;
      }
      return "";
    }
  };

  namespace detail {

    inline void check_covers(CoverSystem const& R, ConditionResult& out) {
      FiniteSemilattice const& E = *R.semilattice();
      for (Element e : E.nonzero()) {
        for (std::size_t c = 0; c < R.covers(e).size() && out.pass; ++c) {
          if (auto why = cover_defect(E, e, R.covers(e)[c])) {
            out.fail("R(" + E.label(e) + ") #" + std::to_string(c + 1) + " "
                     + set_label(E, R.covers(e)[c]) + ": " + *why);
          }
        }
      }
    }

    inline void check_i(CoverSystem const& R, ConditionResult& out) {
      FiniteSemilattice const& E = *R.semilattice();
      for (Element d : E.nonzero()) {
        for (Element e : E.nonzero()) {
          Element const de = E.product(d, e);
          if (de == E.zero()) {
            continue;
          }
          for (std::size_t c = 0; c < R.covers(e).size(); ++c) {
            MemberSet const dR = times(E, d, R.covers(e)[c]);
            if (std::binary_search(dR.begin(), dR.end(), de)
                || R.contains(de, dR)) {
              continue;
            }
            out.fail("d=" + E.label(d) + ", e=" + E.label(e) + ", cover #"
                     + std::to_string(c + 1) + " of e: (d.R)^x = "
                     + set_label(E, dR) + " is not in R(" + E.label(de) + ")");
            return;
          }
        }
      }
    }

    inline void check_ii(CoverSystem const& R, ConditionResult& out) {
      SemilatticePtr const&    Ep = R.semilattice();
      FiniteSemilattice const& E  = *Ep;
      for (Element e : E.nonzero()) {
        auto const& covers = R.covers(e);
        std::size_t const m = covers.size();
        if (m > 20) {
          throw DomainError("condition (ii): too many covers at " + E.label(e));
        }
        std::vector<MemberSet> supports;
        for (auto const& cover : covers) {
          supports.push_back(join(Ep, cover).support());
        }
        for (std::uint32_t chosen = 1; chosen < (std::uint32_t(1) << m); ++chosen) {
          std::vector<std::size_t> idx;
          for (std::size_t i = 0; i < m; ++i) {
            if (chosen & (std::uint32_t(1) << i)) {
              idx.push_back(i);
            }
          }
          std::size_t const        r = idx.size();
          std::vector<std::size_t> pick(r, 0);
          bool                     empty = false;
          for (std::size_t i : idx) {
            empty = empty || supports[i].empty();
          }
          if (empty) {
            continue;
          }
          while (true) {
            for (std::size_t j = 0; j < r; ++j) {
              Element eps_j = e;
              for (std::size_t i = 0; i < r; ++i) {
                if (i != j) {
                  eps_j = E.product(eps_j, supports[idx[i]][pick[i]]);
                }
              }
              if (eps_j == E.zero()) {
                continue;
              }
              Element const eps = E.product(eps_j, supports[idx[j]][pick[j]]);
              if (!E.lt(eps, eps_j)) {
                std::ostringstream os;
                os << "e=" << E.label(e) << ", covers {";
                for (std::size_t i = 0; i < r; ++i) {
                  os << (i == 0 ? "" : ",") << idx[i] + 1;
                }
                os << "}, epsilons (";
                for (std::size_t i = 0; i < r; ++i) {
                  os << (i == 0 ? "" : ", ")
                     << E.label(supports[idx[i]][pick[i]]);
                }
                os << "), j=" << j + 1 << ": " << E.label(eps)
                   << " is not strictly below " << E.label(eps_j);
                out.fail(os.str());
                return;
              }
            }
            std::size_t pos = 0;
            while (pos < r && ++pick[pos] == supports[idx[pos]].size()) {
              pick[pos] = 0;
              ++pos;
            }
            if (pos == r) {
              break;
            }
          }
        }
      }
    }

    inline std::set<MemberSet> image_of_covers(GroupAction const&            action,
                                               GroupElement                  g,
                                               std::vector<MemberSet> const& covers) {
      std::set<MemberSet> out;
      for (auto const& cover : covers) {
        MemberSet image;
        for (Element f : cover) {
          image.push_back(action.apply(g, f));
        }
        out.insert(normalized(std::move(image)));
      }
      return out;
    }

    inline void check_iii(CoverSystem const& R,
                          GroupAction const& action,
                          ConditionResult&   out) {
      FiniteSemilattice const& E = *R.semilattice();
      for (GroupElement g = 0; g < action.order(); ++g) {
        for (Element e : E.nonzero()) {
          Element const ge  = action.apply(g, e);
          auto const    lhs = image_of_covers(action, g, R.covers(e));
          std::set<MemberSet> rhs(R.covers(ge).begin(), R.covers(ge).end());
          if (lhs != rhs) {
            out.fail("g=" + action.label(g) + ", e=" + E.label(e)
                     + ": tau_g(R(e)) != R(tau_g(e))");
            return;
          }
        }
      }
    }

    inline void check_same_semilattice(CoverSystem const& R,
                                       GroupAction const& action) {
      if (!(R.semilattice() == action.semilattice()
            || *R.semilattice() == *action.semilattice())) {
        throw DomainError("covers and action live over different semilattices");
      }
    }

  }  // namespace detail

  inline ConditionReport check_conditions(CoverSystem const& R,
                                          GroupAction const& action) {
    detail::check_same_semilattice(R, action);
    ConditionReport report;
    detail::check_covers(R, report.covers);
    detail::check_i(R, report.cond_i);
    detail::check_ii(R, report.cond_ii);
    detail::check_iii(R, action, report.cond_iii);
    return report;
  }

  inline ConditionReport check_conditions(CoverSystem const& R) {
    return check_conditions(R, GroupAction::trivial(R.semilattice()));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Kernel ideal of a homomorphism into functions on finitely many points
  ////////////////////////////////////////////////////////////////////////////

  // phi(e) is the set of points (bit i = point i) where the image of e is 1;
  // the target algebra is Z^points with pointwise operations.
  using PointSet = std::uint64_t;

  inline void check_homomorphism(FiniteSemilattice const&     E,
                                 std::vector<PointSet> const& phi) {
    if (phi.size() != E.size()) {
      throw DomainError("kernel_ideal: need one image per element");
    }
    if (phi[E.zero()] != 0) {
      throw DomainError("kernel_ideal: phi(0) != 0");
    }
    for (Element e = 0; e < E.size(); ++e) {
      for (Element f = 0; f < E.size(); ++f) {
        if (phi[E.product(e, f)] != (phi[e] & phi[f])) {
          throw DomainError("kernel_ideal: phi is not multiplicative at ("
                            + E.label(e) + ", " + E.label(f) + ")");
        }
      }
    }
  }

  // The matrix of phi: points x E^x.
  inline IntMatrix phi_matrix(FiniteSemilattice const&     E,
                              std::vector<PointSet> const& phi,
                              std::size_t                  points) {
    IntMatrix m(points, E.nonzero().size());
    for (std::size_t j = 0; j < E.nonzero().size(); ++j) {
      for (std::size_t p = 0; p < points; ++p) {
        if (phi[E.nonzero()[j]] & (PointSet(1) << p)) {
          m(p, j) = 1;
        }
      }
    }
    return m;
  }

  // E_phi: every nonzero e - join{e_j} with e_j strictly below e and
  // phi(e) = join phi(e_j). The empty family contributes e itself when
  // phi(e) = 0.
  inline std::vector<ZLin> kernel_ideal(SemilatticePtr const&        Ep,
                                        std::vector<PointSet> const& phi) {
    FiniteSemilattice const& E = *Ep;
    check_homomorphism(E, phi);
    std::vector<ZLin>                  out;
    std::set<ZLin::Terms>              seen;
    for (Element e : E.nonzero()) {
      std::vector<Element> below;
      for (Element f : E.nonzero()) {
        if (E.lt(f, e)) {
          below.push_back(f);
        }
      }
      if (below.size() > 24) {
        throw DomainError("kernel_ideal: down-set of " + E.label(e)
                          + " too large to enumerate");
      }
      for (std::uint32_t J = 0; J < (std::uint32_t(1) << below.size()); ++J) {
        PointSet             covered = 0;
        std::vector<Element> family;
        for (std::size_t i = 0; i < below.size(); ++i) {
          if (J & (std::uint32_t(1) << i)) {
            covered |= phi[below[i]];
            family.push_back(below[i]);
          }
        }
        if (covered != phi[e]) {
          continue;
        }
        ZLin z = ZLin::element(Ep, e);
        if (!family.empty()) {
          z -= join(Ep, family);
        }
        if (!z.is_zero() && seen.insert(z.terms()).second) {
          out.push_back(std::move(z));
        }
      }
    }
    return out;
  }

  // Coefficient vectors of ZLins as matrix columns over the basis E^x.
  inline IntMatrix columns_over(FiniteSemilattice const& E,
                                std::vector<ZLin> const& xs) {
    std::vector<std::size_t> position(E.size(), 0);
    for (std::size_t j = 0; j < E.nonzero().size(); ++j) {
      position[E.nonzero()[j]] = j;
    }
    IntMatrix m(E.nonzero().size(), xs.size());
    for (std::size_t c = 0; c < xs.size(); ++c) {
      for (auto const& [e, coeff] : xs[c].terms()) {
        m(position[e], c) = coeff;
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Derivation
  ////////////////////////////////////////////////////////////////////////////

  // e(S) for a non-empty set S of cover indices of R(base).
  struct DerivedElement {
    Element                  base;
    std::vector<std::size_t> selected;  // 0-based, sorted

    friend bool operator==(DerivedElement const&, DerivedElement const&) = default;
  };

  // prod_{R in S} (base - join R) in Z[E^x].
  inline ZLin expand(CoverSystem const& R, DerivedElement const& d) {
    SemilatticePtr const& E = R.semilattice();
    if (d.selected.empty()) {
      throw DomainError("expand: empty selection");
    }
    ZLin out = ZLin::element(E, d.base);
    for (std::size_t i : d.selected) {
      auto const& covers = R.covers(d.base);
      if (i >= covers.size()) {
        throw DomainError("expand: cover index out of range");
      }
      ZLin factor = ZLin::element(E, d.base) - join(E, covers[i]);
      out         = mul(out, factor);
    }
    return out;
  }

  struct DeriveOptions {
    // When set, (i)-(iii) are checked first and a failure throws. When unset,
    // zero expansions are dropped (and logged) instead.
    bool check = true;
  };

  struct DerivedLevel {
    SemilatticePtr E;
    CoverSystem    covers;
    GroupAction    action;
    // expansion[e'] is e' written in Z[E_parent^x]; empty for the zero.
    std::vector<ZLin> expansion;
    // Every (base, selection) pair whose expansion is e'.
    std::vector<std::vector<DerivedElement>> provenance;
    std::vector<std::string>                 log;
  };

  namespace detail {

    inline std::string derived_label(FiniteSemilattice const&        E,
                                     DerivedElement const&           d) {
      std::string s = E.label(d.base) + "[";
      for (std::size_t i = 0; i < d.selected.size(); ++i) {
        s += (i == 0 ? "" : ",") + std::to_string(d.selected[i] + 1);
      }
      return s + "]";
    }

    // Non-empty subsets of {0..m-1} in lexicographic order of their sorted
    // index lists.
    inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t m) {
      std::vector<std::vector<std::size_t>> out;
      for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask & (std::uint32_t(1) << i)) {
            s.push_back(i);
          }
        }
        out.push_back(std::move(s));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace detail

  inline DerivedLevel derive(CoverSystem const&   R,
                             GroupAction const&   action,
                             DeriveOptions const& options = {}) {
    detail::check_same_semilattice(R, action);
    if (options.check) {
      ConditionReport const report = check_conditions(R, action);
      if (!report.all()) {
        throw DomainError("derive: " + report.first_failure());
      }
    }
    SemilatticePtr const&    Ep = R.semilattice();
    FiniteSemilattice const& E  = *Ep;

    std::vector<std::string>                 labels{"0"};
    std::vector<ZLin>                        expansion{ZLin(Ep)};
    std::vector<std::vector<DerivedElement>> provenance{{}};
    std::map<ZLin::Terms, Element>           lookup;
    std::vector<std::string>                 log;

    for (Element e : E.nonzero()) {
      for (auto const& S : detail::nonempty_subsets(R.covers(e).size())) {
        DerivedElement d{e, S};
        ZLin           x = expand(R, d);
        if (x.is_zero()) {
          if (options.check) {
            throw DomainError("derive: e(S) vanishes for "
                              + detail::derived_label(E, d));
          }
          log.push_back("dropped zero expansion " + detail::derived_label(E, d));
          continue;
        }
        auto [it, inserted] = lookup.try_emplace(x.terms(), labels.size());
        if (!inserted) {
          log.push_back("collision: " + detail::derived_label(E, d) + " = "
                        + labels[it->second]);
          provenance[it->second].push_back(std::move(d));
          continue;
        }
        labels.push_back(detail::derived_label(E, d));
        provenance.push_back({std::move(d)});
        expansion.push_back(std::move(x));
      }
    }

    std::size_t const N = labels.size();
    auto find_element = [&](ZLin const& x, std::string const& what) -> Element {
      if (x.is_zero()) {
        return 0;
      }
      auto it = lookup.find(x.terms());
      if (it == lookup.end()) {
        throw DomainError("derive: " + what
                          + " is not an element of the derived semilattice");
      }
      return it->second;
    };

    std::vector<Element> table(N * N, 0);
    for (Element a = 1; a < N; ++a) {
      table[a * N + a] = a;
      for (Element b = a + 1; b < N; ++b) {
        Element const ab = find_element(mul(expansion[a], expansion[b]),
                                        labels[a] + " * " + labels[b]);
        table[a * N + b] = ab;
        table[b * N + a] = ab;
      }
    }
    auto Eprime = std::make_shared<FiniteSemilattice>(labels, 0, std::move(table));

    CoverSystem covers(Eprime);
    for (Element a = 1; a < N; ++a) {
      for (auto const& d : provenance[a]) {
        auto const& all = R.covers(d.base);
        for (std::size_t t = 0; t < all.size(); ++t) {
          if (std::binary_search(d.selected.begin(), d.selected.end(), t)) {
            continue;
          }
          MemberSet members;
          DerivedElement bigger = d;
          bigger.selected.insert(
              std::upper_bound(bigger.selected.begin(), bigger.selected.end(), t),
              t);
          ZLin const grown = expand(R, bigger);
          if (!grown.is_zero()) {
            members.push_back(find_element(grown, detail::derived_label(E, bigger)));
          }
          for (Element f : all[t]) {
            ZLin const fx = mul(expansion[a], f);
            if (!fx.is_zero()) {
              members.push_back(
                  find_element(fx, E.label(f) + " * " + labels[a]));
            }
          }
          if (members.empty()) {
            log.push_back("empty derived cover at " + labels[a]);
            continue;
          }
          covers.add(a, std::move(members));
        }
      }
    }

    std::vector<std::vector<Element>> tau(action.order(), std::vector<Element>(N, 0));
    for (GroupElement g = 0; g < action.order(); ++g) {
      for (Element a = 1; a < N; ++a) {
        tau[g][a] = find_element(action.act(g, expansion[a]),
                                 "tau_" + action.label(g) + "(" + labels[a] + ")");
      }
    }
    GroupAction derived_action = action.with_tau(Eprime, std::move(tau));

    return DerivedLevel{Eprime,
                        std::move(covers),
                        std::move(derived_action),
                        std::move(expansion),
                        std::move(provenance),
                        std::move(log)};
  }

  ////////////////////////////////////////////////////////////////////////////
  // Tower
  ////////////////////////////////////////////////////////////////////////////

  struct TowerLevel {
    SemilatticePtr E;
    CoverSystem    covers;
    GroupAction    action;
    // For k >= 1: expansions into level k-1, provenance, and the matrix of
    // pi_k : Z[E_k^x] -> Z[E_{k-1}^x] over the nonzero elements in order.
    std::vector<ZLin>                        expansion;
    std::vector<std::vector<DerivedElement>> provenance;
    IntMatrix                                pi;

    bool trivial() const {
      return E->nonzero().empty();
    }
  };

  class ResolutionTower {
   public:
    std::vector<TowerLevel>  levels;
    bool                     truncated = false;
    std::vector<std::string> log;

    // Smallest n with E_{n+1} = {0}; nullopt when the tower was truncated.
    std::optional<std::size_t> length() const {
      for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].trivial()) {
          return k == 0 ? 0 : k - 1;
        }
      }
      return std::nullopt;
    }
  };

  // Relation generators e - join R of a level, as columns over E^x.
  inline IntMatrix relation_matrix(CoverSystem const& R) {
    SemilatticePtr const& E = R.semilattice();
    std::vector<ZLin>     gens;
    for (Element e : E->nonzero()) {
      for (auto const& cover : R.covers(e)) {
        gens.push_back(ZLin::element(E, e) - join(E, cover));
      }
    }
    return columns_over(*E, gens);
  }

  inline ResolutionTower build_tower(CoverSystem const&   R,
                                     GroupAction const&   action,
                                     std::size_t          max_depth,
                                     DeriveOptions const& options = {}) {
    ResolutionTower tower;
    tower.levels.push_back(TowerLevel{R.semilattice(), R, action, {}, {}, {}});
    for (std::size_t step = 0; step < max_depth; ++step) {
      TowerLevel const& top = tower.levels.back();
      if (top.trivial()) {
        break;
      }
      DerivedLevel next = derive(top.covers, top.action, options);
      for (auto& line : next.log) {
        tower.log.push_back("level " + std::to_string(step + 1) + ": " + line);
      }
      std::vector<ZLin> nonzero_expansions(next.expansion.begin() + 1,
                                           next.expansion.end());
      IntMatrix pi = columns_over(*top.E, nonzero_expansions);
      tower.levels.push_back(TowerLevel{next.E,
                                        std::move(next.covers),
                                        std::move(next.action),
                                        std::move(next.expansion),
                                        std::move(next.provenance),
                                        std::move(pi)});
    }
    tower.truncated = !tower.levels.back().trivial();
    return tower;
  }

  inline ResolutionTower build_tower(CoverSystem const&   R,
                                     std::size_t          max_depth,
                                     DeriveOptions const& options = {}) {
    return build_tower(R, GroupAction::trivial(R.semilattice()), max_depth, options);
  }

  struct ExactnessReport {
    bool        checked = true;
    bool        exact   = true;
    std::string detail;
  };

  // Exactness of ... -> Z[E_{k+1}^x] -> Z[E_k^x] -> ... at level k:
  // for k = 0, im pi_1 = I_0 = span of the relations; for k >= 1,
  // ker pi_k = I_k = im pi_{k+1}, with the kernel computed independently.
  inline ExactnessReport verify_exactness(ResolutionTower const& tower,
                                          std::size_t            k) {
    ExactnessReport out;
    if (k >= tower.levels.size()) {
      if (tower.truncated) {
        out.checked = false;
        out.detail  = "level beyond the truncated tower";
      } else {
        out.detail = "level beyond the tower length";
      }
      return out;
    }
    TowerLevel const& level = tower.levels[k];
    if (level.trivial()) {
      out.detail = "trivial level";
      return out;
    }
    IntMatrix const relations = relation_matrix(level.covers);
    std::optional<IntMatrix> image;
    if (k + 1 < tower.levels.size()) {
      image = tower.levels[k + 1].pi;
    }
    if (k == 0) {
      if (!image) {
        out.checked = false;
        out.detail  = "next level not built";
        return out;
      }
      if (!same_column_lattice(relations, *image)) {
        out.exact  = false;
        out.detail = "im pi_1 != span of the relations at level 0";
      }
      return out;
    }
    IntMatrix const kernel = integer_kernel(level.pi);
    if (!same_column_lattice(kernel, relations)) {
      out.exact  = false;
      out.detail = "ker pi_" + std::to_string(k) + " != I_" + std::to_string(k);
      return out;
    }
    if (!image) {
      out.checked = false;
      out.detail  = "ker pi_k = I_k; next level not built";
      return out;
    }
    if (!(level.pi * *image).is_zero()) {
      out.exact  = false;
      out.detail = "pi_" + std::to_string(k) + " pi_" + std::to_string(k + 1)
                   + " != 0";
      return out;
    }
    if (!same_column_lattice(kernel, *image)) {
      out.exact  = false;
      out.detail = "ker pi_" + std::to_string(k) + " != im pi_"
                   + std::to_string(k + 1);
    }
    return out;
  }

  struct StabilizerReport {
    bool                     holds = true;
    std::vector<std::string> witnesses;  // one line per violation
  };

  // Stab(e') is contained in Stab(base of e') and in the subgroup generated
  // by all stabilizers of nonzero elements of E_0.
  inline StabilizerReport stabilizer_check(ResolutionTower const& tower) {
    StabilizerReport out;
    TowerLevel const& bottom = tower.levels.front();
    std::vector<GroupElement> gens;
    for (Element e : bottom.E->nonzero()) {
      for (GroupElement g : bottom.action.stabilizer(e)) {
        gens.push_back(g);
      }
    }
    auto const stab_group = bottom.action.generated_subgroup(gens);
    auto subset = [](std::vector<GroupElement> const& a,
                     std::vector<GroupElement> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (std::size_t k = 1; k < tower.levels.size(); ++k) {
      TowerLevel const& level  = tower.levels[k];
      TowerLevel const& parent = tower.levels[k - 1];
      for (Element e : level.E->nonzero()) {
        auto const   s    = level.action.stabilizer(e);
        Element const base = level.provenance[e].front().base;
        if (!subset(s, parent.action.stabilizer(base))) {
          out.holds = false;
          out.witnesses.push_back("level " + std::to_string(k) + ": Stab("
                                  + level.E->label(e) + ") not in Stab("
                                  + parent.E->label(base) + ")");
        }
        if (!subset(s, stab_group)) {
          out.holds = false;
          out.witnesses.push_back("level " + std::to_string(k) + ": Stab("
                                  + level.E->label(e)
                                  + ") not in the stabilizer subgroup");
        }
      }
    }
    return out;
  }

  // If tau_g fixes e - join(family) (family strictly below e) then tau_g
  // fixes e. Returns a violating g, if any.
  inline std::optional<GroupElement>
  fix_maximal_idem_violation(GroupAction const&          action,
                             Element                     e,
                             std::vector<Element> const& family) {
    SemilatticePtr const& E = action.semilattice();
    for (Element f : family) {
      if (!E->lt(f, e)) {
        throw DomainError("fix_maximal_idem: family must lie strictly below e");
      }
    }
    ZLin x = ZLin::element(E, e);
    if (!family.empty()) {
      x -= join(E, family);
    }
    for (GroupElement g = 0; g < action.order(); ++g) {
      if (action.act(g, x) == x && action.apply(g, e) != e) {
        return g;
      }
    }
    return std::nullopt;
  }

}  // namespace indres
