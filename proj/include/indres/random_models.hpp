#pragma once

// Seeded generators for the property suites: finite Gamma-semilattices of
// subsets with condition-passing cover systems, and orbit models with valid
// sharp tables and M matrices satisfying the factorization invariant.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "indres/integer_matrix.hpp"
#include "indres/mu.hpp"
#include "indres/orbit_model.hpp"
#include "indres/resolution.hpp"
#include "indres/semilattice.hpp"

namespace indres {

  using Rng = std::mt19937_64;

  namespace detail {

    using GroundPerm = std::vector<int>;

    inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    inline std::uint64_t perm_mask(GroundPerm const& p, std::uint64_t mask) {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (mask & (std::uint64_t(1) << i)) {
          out |= std::uint64_t(1) << p[i];
        }
      }
      return out;
    }

    inline GroundPerm compose(GroundPerm const& g, GroundPerm const& h) {
      GroundPerm out(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) {
        out[i] = g[static_cast<std::size_t>(h[i])];
      }
      return out;
    }

    inline GroundPerm cycle(int s, std::vector<int> const& points) {
      GroundPerm p(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) {
        p[static_cast<std::size_t>(i)] = i;
      }
      for (std::size_t i = 0; i < points.size(); ++i) {
        p[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
      }
      return p;
    }

    // Closure of generators under composition; empty if larger than limit.
    inline std::vector<GroundPerm> generate_group(int                            s,
                                                  std::vector<GroundPerm> const& gens,
                                                  std::size_t                    limit) {
      std::vector<GroundPerm> group{cycle(s, {})};
      for (std::size_t i = 0; i < group.size(); ++i) {
        for (auto const& g : gens) {
          GroundPerm p = compose(g, group[i]);
          if (std::find(group.begin(), group.end(), p) == group.end()) {
            group.push_back(std::move(p));
            if (group.size() > limit) {
              return {};
            }
          }
        }
      }
      return group;
    }

    // A random permutation group of order <= limit on s points: trivial,
    // cyclic, a product of two cycles or S_3.
    inline std::vector<GroundPerm> random_group(Rng& rng, int s, std::size_t limit) {
      std::vector<int> pts(static_cast<std::size_t>(s));
      for (int i = 0; i < s; ++i) {
        pts[static_cast<std::size_t>(i)] = i;
      }
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<GroundPerm> gens;
      switch (uniform(rng, 0, 4)) {
        case 0:
          break;
        case 1:
        case 2: {
          std::size_t const k = uniform(rng, 2, static_cast<std::size_t>(s));
          gens.push_back(cycle(s, {pts.begin(), pts.begin() + static_cast<long>(k)}));
          break;
        }
        case 3: {
          if (s >= 4) {
            std::size_t const k = uniform(rng, 2, static_cast<std::size_t>(s) - 2);
            std::size_t const l = uniform(rng, 2, static_cast<std::size_t>(s) - k);
            GroundPerm const a = cycle(s, {pts.begin(), pts.begin() + static_cast<long>(k)});
            GroundPerm const b = cycle(
                s, {pts.begin() + static_cast<long>(k),
                    pts.begin() + static_cast<long>(k + l)});
            if (uniform(rng, 0, 1) == 0) {
              gens.push_back(compose(a, b));
            } else {
              gens.push_back(a);
              gens.push_back(b);
            }
          }
          break;
        }
        default:
          if (s >= 3) {
            gens.push_back(cycle(s, {pts[0], pts[1]}));
            gens.push_back(cycle(s, {pts[0], pts[1], pts[2]}));
          }
          break;
      }
      auto group = generate_group(s, gens, limit);
      if (group.empty()) {
        return generate_group(s, {}, limit);
      }
      return group;
    }

    inline std::string subset_label(std::uint64_t mask) {
      if (mask == 0) {
        return "0";
      }
      std::string s = "{";
      bool        first = true;
      for (int i = 0; i < 64; ++i) {
        if (mask & (std::uint64_t(1) << i)) {
          s += (first ? "" : ",") + std::to_string(i + 1);
          first = false;
        }
      }
      return s + "}";
    }

    // (i)-closure: adds (d.R)^x to R(de) until every instance of (i) holds.
    // Returns false once some R(e) exceeds max_sup.
    inline bool close_under_i(CoverSystem& R, std::size_t max_sup) {
      FiniteSemilattice const& E = *R.semilattice();
      bool changed = true;
      while (changed) {
        changed = false;
        for (Element d : E.nonzero()) {
          for (Element e : E.nonzero()) {
            Element const de = E.product(d, e);
            if (de == E.zero()) {
              continue;
            }
            auto const covers = R.covers(e);
            for (auto const& cover : covers) {
              MemberSet const dR = times(E, d, cover);
              if (std::binary_search(dR.begin(), dR.end(), de)
                  || R.contains(de, dR)) {
                continue;
              }
              R.add(de, dR);
              changed = true;
              if (R.covers(de).size() > max_sup) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }

  }  // namespace detail

  struct InstanceOptions {
    std::size_t max_elements = 12;
    std::size_t max_sup      = 3;
    std::size_t max_group    = 6;
    std::size_t max_ground   = 6;
    bool        allow_group  = true;
  };

  struct RandomInstance {
    CoverSystem covers;
    GroupAction action;
  };

  // One attempt; nullopt when the sample is rejected.
  inline std::optional<RandomInstance> try_random_instance(Rng&                   rng,
                                                           InstanceOptions const& opt) {
    // Three shapes: random seed subsets; the blocks of a few random
    // partitions of the ground set; or a grid whose rows and (possibly
    // merged) columns both cover the full set.
    std::size_t const mode = detail::uniform(rng, 0, 2);
    int               s    = static_cast<int>(detail::uniform(rng, 2, opt.max_ground));
    std::vector<std::vector<std::uint64_t>> partitions;
    std::vector<detail::GroundPerm>         group;
    if (mode == 2) {
      static constexpr int shapes[3][2] = {{2, 2}, {2, 3}, {3, 2}};
      auto const [a, b] = shapes[detail::uniform(rng, 0, 2)];
      s = a * b;
      std::vector<std::uint64_t> rows(static_cast<std::size_t>(a), 0);
      std::vector<std::uint64_t> cols(static_cast<std::size_t>(b), 0);
      for (int r = 0; r < a; ++r) {
        for (int c = 0; c < b; ++c) {
          rows[static_cast<std::size_t>(r)] |= std::uint64_t(1) << (r * b + c);
          cols[static_cast<std::size_t>(c)] |= std::uint64_t(1) << (r * b + c);
        }
      }
      if (b == 3 && detail::uniform(rng, 0, 1) == 1) {
        cols = {cols[0] | cols[1], cols[2]};
      }
      partitions = {rows, cols};
      std::vector<detail::GroundPerm> gens;
      if (opt.allow_group) {
        detail::GroundPerm row_shift(static_cast<std::size_t>(s)), col_shift(row_shift),
            transpose(row_shift);
        for (int r = 0; r < a; ++r) {
          for (int c = 0; c < b; ++c) {
            auto const x = static_cast<std::size_t>(r * b + c);
            row_shift[x] = ((r + 1) % a) * b + c;
            col_shift[x] = r * b + (c + 1) % b;
            transpose[x] = c * a + r;
          }
        }
        if (detail::uniform(rng, 0, 1) == 1) {
          gens.push_back(row_shift);
        }
        if (detail::uniform(rng, 0, 1) == 1) {
          gens.push_back(col_shift);
        }
        if (a == b && detail::uniform(rng, 0, 1) == 1) {
          gens.push_back(transpose);
        }
      }
      group = detail::generate_group(s, gens, opt.max_group);
      if (group.empty()) {
        group = detail::generate_group(s, {}, 1);
      }
    } else {
      group = opt.allow_group ? detail::random_group(rng, s, opt.max_group)
                              : detail::generate_group(s, {}, 1);
    }

    std::set<std::uint64_t> family;
    std::uint64_t const     full = (std::uint64_t(1) << s) - 1;
    if (mode == 0) {
      for (std::size_t i = detail::uniform(rng, 1, 3); i > 0; --i) {
        std::uint64_t const m = detail::uniform(rng, 1, full);
        for (auto const& g : group) {
          family.insert(detail::perm_mask(g, m));
        }
      }
    } else if (mode == 1) {
      for (std::size_t i = detail::uniform(rng, 1, 3); i > 0; --i) {
        std::size_t const parts = detail::uniform(rng, 2, static_cast<std::size_t>(s));
        std::vector<std::uint64_t> blocks(parts, 0);
        for (int x = 0; x < s; ++x) {
          blocks[detail::uniform(rng, 0, parts - 1)] |= std::uint64_t(1) << x;
        }
        std::erase(blocks, std::uint64_t(0));
        if (blocks.size() >= 2) {
          partitions.push_back(blocks);
        }
      }
    }
    for (auto const& blocks : partitions) {
      family.insert(full);
      for (auto const& g : group) {
        for (auto m : blocks) {
          family.insert(detail::perm_mask(g, m));
        }
      }
    }
    family.insert(0);
    bool grew = true;
    while (grew && family.size() <= opt.max_elements) {
      grew = false;
      std::vector<std::uint64_t> const current(family.begin(), family.end());
      for (auto a : current) {
        for (auto b : current) {
          grew = family.insert(a & b).second || grew;
        }
      }
    }
    if (family.size() > opt.max_elements || family.size() < 3) {
      return std::nullopt;
    }
    std::vector<std::uint64_t> masks(family.begin(), family.end());
    std::sort(masks.begin(), masks.end(), [](auto a, auto b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b)
                                                  : a < b;
    });
    std::map<std::uint64_t, Element> index;
    std::vector<std::string>          labels;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      index[masks[i]] = i;
      labels.push_back(detail::subset_label(masks[i]));
    }
    std::size_t const    N = masks.size();
    std::vector<Element> table(N * N);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t b = 0; b < N; ++b) {
        table[a * N + b] = index.at(masks[a] & masks[b]);
      }
    }
    auto E = std::make_shared<FiniteSemilattice>(labels, 0, std::move(table));

    std::vector<std::vector<Element>> tau;
    std::vector<std::string>          group_labels;
    for (std::size_t g = 0; g < group.size(); ++g) {
      std::vector<Element> t(N);
      for (std::size_t a = 0; a < N; ++a) {
        t[a] = index.at(detail::perm_mask(group[g], masks[a]));
      }
      tau.push_back(std::move(t));
      group_labels.push_back("g" + std::to_string(g));
    }
    std::vector<GroupElement> mult(group.size() * group.size());
    for (std::size_t g = 0; g < group.size(); ++g) {
      for (std::size_t h = 0; h < group.size(); ++h) {
        auto const gh = detail::compose(group[g], group[h]);
        mult[g * group.size() + h]
            = static_cast<GroupElement>(std::find(group.begin(), group.end(), gh)
                                        - group.begin());
      }
    }
    GroupAction action(E, group_labels, std::move(mult), std::move(tau));

    CoverSystem R(E);
    for (auto const& blocks : partitions) {
      for (GroupElement g = 0; g < action.order(); ++g) {
        MemberSet image;
        for (auto m : blocks) {
          image.push_back(action.apply(g, index.at(m)));
        }
        R.add(index.at(full), image);
      }
    }
    std::size_t const cover_seeds = mode == 0 ? detail::uniform(rng, 1, 3) : 0;
    for (std::size_t c = 0; c < cover_seeds; ++c) {
      Element const        e = E->nonzero()[detail::uniform(rng, 0, E->nonzero().size() - 1)];
      std::vector<Element> below;
      for (Element f : E->nonzero()) {
        if (E->lt(f, e)) {
          below.push_back(f);
        }
      }
      if (below.empty()) {
        continue;
      }
      for (int attempt = 0; attempt < 20; ++attempt) {
        MemberSet F;
        for (Element f : below) {
          if (detail::uniform(rng, 0, 1) == 1) {
            F.push_back(f);
          }
        }
        if (F.empty() || !is_finite_cover(*E, e, F)) {
          continue;
        }
        for (GroupElement g = 0; g < action.order(); ++g) {
          MemberSet image;
          for (Element f : F) {
            image.push_back(action.apply(g, f));
          }
          R.add(action.apply(g, e), image);
        }
        break;
      }
    }
    if (R.total() == 0 || R.sup_size() > opt.max_sup
        || !detail::close_under_i(R, opt.max_sup)) {
      return std::nullopt;
    }
    if (!check_conditions(R, action).all()) {
      return std::nullopt;
    }
    return RandomInstance{std::move(R), std::move(action)};
  }

  inline RandomInstance random_instance(Rng& rng, InstanceOptions const& opt = {}) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
      if (auto inst = try_random_instance(rng, opt)) {
        return std::move(*inst);
      }
    }
    throw DomainError("random_instance: no instance found");
  }

  ////////////////////////////////////////////////////////////////////////////
  // Orbit models
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Row-injective, and omega#j is defined and independent of the
    // extraction order for all omega and j outside omega.
    inline bool valid_sharp_table(SharpTable const& t) {
      int const n = t.n();
      if (t.row_injectivity_witness()) {
        return false;
      }
      for (int q = 1; q <= n; ++q) {
        for (int r = 1; r <= n; ++r) {
          if (r == q) {
            continue;
          }
          for (int j = 1; j <= n; ++j) {
            if (j == q || j == r) {
              continue;
            }
            int const qr = t.at(q, r), qj = t.at(q, j);
            int const rq = t.at(r, q), rj = t.at(r, j);
            if (qr == qj || rq == rj) {
              return false;
            }
            if (t.at(qr, qj) != t.at(rq, rj)) {
              return false;
            }
          }
        }
      }
      try {
        for (std::uint32_t omega = 1; omega < (std::uint32_t(1) << n); ++omega) {
          for (int j = 1; j <= n; ++j) {
            if (omega & (std::uint32_t(1) << (j - 1))) {
              continue;
            }
            if (sharp_all_orders(mask_to_part(omega), j, t).size() != 1) {
              return false;
            }
          }
        }
      } catch (DomainError const&) {
        return false;
      }
      return true;
    }

    inline void enumerate_tables(int                      n,
                                 int                      i,
                                 SharpTable&              t,
                                 std::vector<SharpTable>& out) {
      if (i > n) {
        if (valid_sharp_table(t)) {
          out.push_back(t);
        }
        return;
      }
      std::vector<int> others;
      for (int j = 1; j <= n; ++j) {
        if (j != i) {
          others.push_back(j);
        }
      }
      // Injective assignments others -> {1..n}.
      std::vector<int> values(others.size(), 1);
      auto             rec = [&](auto&& self, std::size_t pos, std::uint32_t used) -> void {
        if (pos == others.size()) {
          for (std::size_t p = 0; p < others.size(); ++p) {
            t.set(i, others[p], values[p]);
          }
          enumerate_tables(n, i + 1, t, out);
          return;
        }
        for (int v = 1; v <= n; ++v) {
          if (used & (std::uint32_t(1) << v)) {
            continue;
          }
          values[pos] = v;
          self(self, pos + 1, used | (std::uint32_t(1) << v));
        }
      };
      rec(rec, 0, 0);
    }

  }  // namespace detail

  // Every valid sharp table on n letters, enumerated once and cached.
  inline std::vector<SharpTable> const& valid_sharp_tables(int n) {
    static std::mutex                                mutex;
    static std::map<int, std::vector<SharpTable>>   cache;
    std::lock_guard<std::mutex>                      lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
      if (n < 1 || n > 4) {
        throw DomainError("valid_sharp_tables: n must lie in 1..4");
      }
      std::vector<SharpTable> out;
      SharpTable              t(n);
      detail::enumerate_tables(n, 1, t, out);
      it = cache.emplace(n, std::move(out)).first;
    }
    return it->second;
  }

  namespace detail {

    // Random unimodular matrix with its inverse, from elementary operations.
    inline std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t b) {
      IntMatrix U = IntMatrix::identity(b), Uinv = IntMatrix::identity(b);
      if (b < 2) {
        if (uniform(rng, 0, 1) == 1) {
          U.negate_row(0);
          Uinv.negate_col(0);
        }
        return {U, Uinv};
      }
      std::size_t const steps = uniform(rng, 1, 2 * b);
      for (std::size_t s = 0; s < steps; ++s) {
        std::size_t const i = uniform(rng, 0, b - 1);
        std::size_t       j = uniform(rng, 0, b - 2);
        if (j >= i) {
          ++j;
        }
        Integer const k = uniform(rng, 0, 1) == 0 ? Integer(1) : Integer(-1);
        // U <- (I + k E_ij) U, Uinv <- Uinv (I - k E_ij)
        U.add_row_multiple(i, j, k);
        Uinv.add_col_multiple(j, i, -k);
      }
      return {U, Uinv};
    }

    // Scalars d_1..d_n in {-1, 0, 1, 2} satisfying the factorization
    // invariant as a one-orbit model.
    inline std::vector<long long> factorizing_scalars(Rng& rng, SharpTable const& t) {
      int const n = t.n();
      for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<IntMatrix> M;
        std::vector<long long> d;
        for (int i = 0; i < n; ++i) {
          d.push_back(static_cast<long long>(uniform(rng, 0, 3)) - 1);
          M.push_back(IntMatrix{{d.back()}});
        }
        OrbitModel const probe({"x"}, std::move(M), t);
        if (!probe.factorization_witness()) {
          return d;
        }
      }
      return std::vector<long long>(static_cast<std::size_t>(n), 1);
    }

  }  // namespace detail

  // A random orbit model on n letters with b orbits. M is either one random
  // matrix repeated, or unimodularly conjugated diagonal matrices whose
  // coordinates satisfy the factorization invariant.
  // Random M_i for a fixed sharp table.
  inline OrbitModel random_orbit_model(Rng& rng, SharpTable const& t, std::size_t b) {
    int const                n = t.n();
    std::vector<std::string> orbits;
    for (std::size_t c = 0; c < b; ++c) {
      orbits.push_back("o" + std::to_string(c + 1));
    }
    std::vector<IntMatrix> M;
    if (detail::uniform(rng, 0, 2) == 0) {
      IntMatrix A(b, b);
      for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          A(i, j) = static_cast<long long>(detail::uniform(rng, 0, 2)) - 1;
        }
      }
      M.assign(static_cast<std::size_t>(n), A);
    } else {
      std::vector<std::vector<long long>> scalars;
      for (std::size_t c = 0; c < b; ++c) {
        scalars.push_back(detail::factorizing_scalars(rng, t));
      }
      auto const [U, Uinv] = detail::random_unimodular(rng, b);
      for (int i = 0; i < n; ++i) {
        IntMatrix D(b, b);
        for (std::size_t c = 0; c < b; ++c) {
          D(c, c) = scalars[c][static_cast<std::size_t>(i)];
        }
        M.push_back(U * D * Uinv);
      }
    }
    OrbitModel model(std::move(orbits), std::move(M), t);
    if (auto w = model.factorization_witness()) {
      throw DomainError("random_orbit_model: " + *w);
    }
    return model;
  }

  inline OrbitModel random_orbit_model(Rng& rng, int n, std::size_t b) {
    auto const& tables = valid_sharp_tables(n);
    return random_orbit_model(rng, tables[detail::uniform(rng, 0, tables.size() - 1)], b);
  }

}  // namespace indres
