#pragma once

// Finite semilattices with zero, their integral semigroup rings Z[E^x], and
// group actions on them.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indres/integer.hpp"

namespace indres {

  using Element      = std::size_t;
  using GroupElement = std::size_t;

  ////////////////////////////////////////////////////////////////////////////
  // FiniteSemilattice
  ////////////////////////////////////////////////////////////////////////////

  // A commutative idempotent semigroup with an absorbing zero, stored as a
  // full product table. Elements are indices into the label list; the label
  // order is the canonical total order used everywhere downstream.
  class FiniteSemilattice {
   public:
    enum class Validation { full, skip_associativity };

    FiniteSemilattice(std::vector<std::string> labels,
                      Element                  zero,
                      std::vector<Element>     table,
                      Validation               validation = Validation::full)
        : _labels(std::move(labels)), _zero(zero), _table(std::move(table)) {
      validate(validation);
      for (Element e = 0; e < size(); ++e) {
        if (e != _zero) {
          _nonzero.push_back(e);
        }
      }
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    Element zero() const noexcept {
      return _zero;
    }

    std::string const& label(Element e) const {
      return _labels.at(e);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<Element> find(std::string_view lbl) const {
      auto it = std::find(_labels.begin(), _labels.end(), lbl);
      if (it == _labels.end()) {
        return std::nullopt;
      }
      return static_cast<Element>(it - _labels.begin());
    }

    Element product(Element e, Element f) const {
      return _table[e * size() + f];
    }

    // Natural partial order: e <= f iff ef = e.
    bool leq(Element e, Element f) const {
      return product(e, f) == e;
    }

    bool lt(Element e, Element f) const {
      return e != f && leq(e, f);
    }

    // E^x in canonical order.
    std::vector<Element> const& nonzero() const noexcept {
      return _nonzero;
    }

    std::vector<Element> const& table() const noexcept {
      return _table;
    }

    friend bool operator==(FiniteSemilattice const& a,
                           FiniteSemilattice const& b) {
      return a._labels == b._labels && a._zero == b._zero
             && a._table == b._table;
    }

   private:
    void validate(Validation validation) const {
      std::size_t const n = size();
      if (_zero >= n) {
        throw DomainError("semilattice: zero index out of range");
      }
      if (_table.size() != n * n) {
        throw DomainError("semilattice: product table must have "
                          + std::to_string(n * n) + " entries, found "
                          + std::to_string(_table.size()));
      }
      for (Element v : _table) {
        if (v >= n) {
          throw DomainError("semilattice: product value out of range");
        }
      }
      for (Element e = 0; e < n; ++e) {
        if (product(e, e) != e) {
          throw DomainError("semilattice: not idempotent at " + _labels[e]);
        }
        if (product(_zero, e) != _zero || product(e, _zero) != _zero) {
          throw DomainError("semilattice: zero does not absorb " + _labels[e]);
        }
        for (Element f = 0; f < n; ++f) {
          if (product(e, f) != product(f, e)) {
            throw DomainError("semilattice: not commutative at ("
                              + _labels[e] + ", " + _labels[f] + ")");
          }
        }
      }
      if (validation == Validation::skip_associativity) {
        return;
      }
      for (Element e = 0; e < n; ++e) {
        for (Element f = 0; f < n; ++f) {
          Element const ef = product(e, f);
          for (Element g = 0; g < n; ++g) {
            if (product(ef, g) != product(e, product(f, g))) {
              throw DomainError("semilattice: not associative at ("
                                + _labels[e] + ", " + _labels[f] + ", "
                                + _labels[g] + ")");
            }
          }
        }
      }
    }

    std::vector<std::string> _labels;
    Element                  _zero;
    std::vector<Element>     _table;
    std::vector<Element>     _nonzero;
  };

  using SemilatticePtr = std::shared_ptr<FiniteSemilattice const>;

  // The semilattice of all subsets of {1, ..., n} under intersection, with
  // the empty set as zero. Labels are "{}" style strings such as "{1,2}",
  // except that the empty set is labelled "0".
  inline SemilatticePtr subset_semilattice(std::size_t n) {
    std::size_t const        count = std::size_t(1) << n;
    std::vector<std::string> labels;
    for (std::size_t mask = 0; mask < count; ++mask) {
      if (mask == 0) {
        labels.emplace_back("0");
        continue;
      }
      std::string s = "{";
      bool        first = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t(1) << i)) {
          s += (first ? "" : ",") + std::to_string(i + 1);
          first = false;
        }
      }
      labels.push_back(s + "}");
    }
    std::vector<Element> table(count * count);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        table[a * count + b] = a & b;
      }
    }
    return std::make_shared<FiniteSemilattice>(
        std::move(labels), 0, std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////////
  // ZLin: elements of Z[E^x] in reduced form
  ////////////////////////////////////////////////////////////////////////////

  class ZLin {
   public:
    using Terms = std::map<Element, Integer>;

    explicit ZLin(SemilatticePtr ambient) : _ambient(std::move(ambient)) {}

    static ZLin element(SemilatticePtr ambient, Element e, Integer coeff = 1) {
      ZLin x(std::move(ambient));
      x.add_term(e, std::move(coeff));
      return x;
    }

    SemilatticePtr const& ambient() const noexcept {
      return _ambient;
    }

    Terms const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    std::size_t size() const noexcept {
      return _terms.size();
    }

    Integer coefficient(Element e) const {
      auto it = _terms.find(e);
      return it == _terms.end() ? Integer(0) : it->second;
    }

    // Adds c*e; zero coefficients and the zero element never get stored.
    void add_term(Element e, Integer const& c) {
      if (e >= _ambient->size()) {
        throw DomainError("ZLin: element index out of range");
      }
      if (e == _ambient->zero() || c == 0) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    std::vector<Element> support() const {
      std::vector<Element> out;
      out.reserve(_terms.size());
      for (auto const& [e, c] : _terms) {
        out.push_back(e);
      }
      return out;
    }

    ZLin& operator+=(ZLin const& other) {
      check_same_ambient(other);
      for (auto const& [e, c] : other._terms) {
        add_term(e, c);
      }
      return *this;
    }

    ZLin& operator-=(ZLin const& other) {
      check_same_ambient(other);
      for (auto const& [e, c] : other._terms) {
        add_term(e, -c);
      }
      return *this;
    }

    ZLin& operator*=(Integer const& k) {
      if (k == 0) {
        _terms.clear();
        return *this;
      }
      for (auto& [e, c] : _terms) {
        c *= k;
      }
      return *this;
    }

    friend ZLin operator+(ZLin a, ZLin const& b) {
      return a += b;
    }

    friend ZLin operator-(ZLin a, ZLin const& b) {
      return a -= b;
    }

    friend ZLin operator-(ZLin a) {
      return a *= Integer(-1);
    }

    friend ZLin operator*(Integer const& k, ZLin a) {
      return a *= k;
    }

    friend bool operator==(ZLin const& a, ZLin const& b) {
      return a.same_ambient(b) && a._terms == b._terms;
    }

    bool same_ambient(ZLin const& other) const noexcept {
      return _ambient == other._ambient || *_ambient == *other._ambient;
    }

    void check_same_ambient(ZLin const& other) const {
      if (!same_ambient(other)) {
        throw DomainError("ZLin: operands live over different semilattices");
      }
    }

    // Rendered as e.g. "{1,2} - {1} - {2}"; the zero element renders as "0".
    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::ostringstream os;
      bool               first = true;
      for (auto const& [e, c] : _terms) {
        Integer const mag = abs(c);
        if (first) {
          os << (c < 0 ? "-" : "");
        } else {
          os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1) {
          os << mag << "*";
        }
        os << _ambient->label(e);
        first = false;
      }
      return os.str();
    }

   private:
    SemilatticePtr _ambient;
    Terms          _terms;
  };

  // Product in Z[E^x]: bilinear extension of the semilattice product, with
  // products landing on 0 dropped.
  inline ZLin mul(ZLin const& x, ZLin const& y) {
    x.check_same_ambient(y);
    FiniteSemilattice const& E = *x.ambient();
    ZLin                     out(x.ambient());
    for (auto const& [e, a] : x.terms()) {
      for (auto const& [f, b] : y.terms()) {
        Element const ef = E.product(e, f);
        if (ef != E.zero()) {
          out.add_term(ef, a * b);
        }
      }
    }
    return out;
  }

  // x * f for a single semilattice element f.
  inline ZLin mul(ZLin const& x, Element f) {
    FiniteSemilattice const& E = *x.ambient();
    ZLin                     out(x.ambient());
    for (auto const& [e, a] : x.terms()) {
      out.add_term(E.product(e, f), a);
    }
    return out;
  }

  // The smallest idempotent of Z[E^x] dominating every input. Accumulated as
  // z v e = z + e - ze, which agrees with the inclusion-exclusion sum.
  inline ZLin join(SemilatticePtr const& E, std::span<Element const> es) {
    if (es.empty()) {
      throw DomainError("join: empty family");
    }
    ZLin z(E);
    for (Element e : es) {
      if (e == E->zero()) {
        throw DomainError("join: zero element in family");
      }
      if (e >= E->size()) {
        throw DomainError("join: element index out of range");
      }
      ZLin const ze = mul(z, e);
      z.add_term(e, 1);
      z -= ze;
    }
    return z;
  }

  inline ZLin join(SemilatticePtr const& E, std::vector<Element> const& es) {
    return join(E, std::span<Element const>(es));
  }

  ////////////////////////////////////////////////////////////////////////////
  // GroupAction
  ////////////////////////////////////////////////////////////////////////////

  // A finite group given by its multiplication table, acting on a finite
  // semilattice by automorphisms tau_g.
  class GroupAction {
   public:
    GroupAction(SemilatticePtr                    E,
                std::vector<std::string>          group,
                std::vector<GroupElement>         multiplication,
                std::vector<std::vector<Element>> tau)
        : _E(std::move(E)),
          _group(std::move(group)),
          _mult(std::move(multiplication)),
          _tau(std::move(tau)) {
      validate_group();
      validate_action();
    }

    // The trivial group acting trivially.
    static GroupAction trivial(SemilatticePtr E) {
      std::vector<Element> id(E->size());
      for (Element e = 0; e < id.size(); ++e) {
        id[e] = e;
      }
      return GroupAction(std::move(E), {"1"}, {0}, {std::move(id)});
    }

    // Derives the multiplication table by composing the permutations tau_g
    // (gh acts as tau_g after tau_h). Requires the action to be faithful.
    static GroupAction from_permutations(SemilatticePtr                    E,
                                         std::vector<std::string>          group,
                                         std::vector<std::vector<Element>> tau) {
      std::size_t const         m = tau.size();
      std::vector<GroupElement> mult(m * m);
      for (GroupElement g = 0; g < m; ++g) {
        for (GroupElement h = 0; h < m; ++h) {
          std::vector<Element> comp(E->size());
          for (Element e = 0; e < comp.size(); ++e) {
            comp[e] = tau[g].at(tau[h].at(e));
          }
          auto it = std::find(tau.begin(), tau.end(), comp);
          if (it == tau.end()) {
            throw DomainError("group action: tau_" + group.at(g) + " o tau_"
                              + group.at(h)
                              + " is not among the listed automorphisms");
          }
          mult[g * m + h] = static_cast<GroupElement>(it - tau.begin());
        }
      }
      for (std::size_t g = 0; g < m; ++g) {
        for (std::size_t h = g + 1; h < m; ++h) {
          if (tau[g] == tau[h]) {
            throw DomainError(
                "group action: not faithful; supply a multiplication table");
          }
        }
      }
      return GroupAction(
          std::move(E), std::move(group), std::move(mult), std::move(tau));
    }

    SemilatticePtr const& semilattice() const noexcept {
      return _E;
    }

    std::size_t order() const noexcept {
      return _group.size();
    }

    std::string const& label(GroupElement g) const {
      return _group.at(g);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _group;
    }

    std::vector<GroupElement> const& multiplication_table() const noexcept {
      return _mult;
    }

    GroupElement identity() const noexcept {
      return _identity;
    }

    GroupElement multiply(GroupElement g, GroupElement h) const {
      return _mult[g * order() + h];
    }

    GroupElement inverse(GroupElement g) const {
      for (GroupElement h = 0; h < order(); ++h) {
        if (multiply(g, h) == _identity) {
          return h;
        }
      }
      throw DomainError("group: element without inverse");
    }

    Element apply(GroupElement g, Element e) const {
      check_element(g);
      return _tau[g][e];
    }

    std::vector<std::vector<Element>> const& tau() const noexcept {
      return _tau;
    }

    // Applies tau_g termwise; tau_g is a bijection of E^x so the result is
    // already reduced.
    ZLin act(GroupElement g, ZLin const& x) const {
      check_element(g);
      if (!(x.ambient() == _E || *x.ambient() == *_E)) {
        throw DomainError("act: element lives over a different semilattice");
      }
      ZLin out(x.ambient());
      for (auto const& [e, c] : x.terms()) {
        out.add_term(_tau[g][e], c);
      }
      return out;
    }

    // Stab(e) as a sorted list of group elements.
    std::vector<GroupElement> stabilizer(Element e) const {
      std::vector<GroupElement> out;
      for (GroupElement g = 0; g < order(); ++g) {
        if (_tau[g][e] == e) {
          out.push_back(g);
        }
      }
      return out;
    }

    // Subgroup generated by a set of elements, as a sorted list.
    std::vector<GroupElement>
    generated_subgroup(std::vector<GroupElement> const& gens) const {
      std::vector<bool>         in(order(), false);
      std::vector<GroupElement> members{_identity};
      in[_identity] = true;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (GroupElement s : gens) {
          GroupElement const p = multiply(members[i], s);
          if (!in[p]) {
            in[p] = true;
            members.push_back(p);
          }
        }
      }
      std::sort(members.begin(), members.end());
      return members;
    }

    // The same group acting on another semilattice.
    GroupAction with_tau(SemilatticePtr                    E,
                         std::vector<std::vector<Element>> tau) const {
      return GroupAction(std::move(E), _group, _mult, std::move(tau));
    }

   private:
    void check_element(GroupElement g) const {
      if (g >= order()) {
        throw DomainError("group action: unknown group element "
                          + std::to_string(g));
      }
    }

    void validate_group() {
      std::size_t const m = _group.size();
      if (m == 0) {
        throw DomainError("group: empty");
      }
      if (_mult.size() != m * m) {
        throw DomainError("group: multiplication table has wrong size");
      }
      for (GroupElement v : _mult) {
        if (v >= m) {
          throw DomainError("group: multiplication value out of range");
        }
      }
      std::optional<GroupElement> id;
      for (GroupElement g = 0; g < m && !id; ++g) {
        bool ok = true;
        for (GroupElement h = 0; h < m && ok; ++h) {
          ok = _mult[g * m + h] == h && _mult[h * m + g] == h;
        }
        if (ok) {
          id = g;
        }
      }
      if (!id) {
        throw DomainError("group: no identity element");
      }
      _identity = *id;
      for (GroupElement g = 0; g < m; ++g) {
        for (GroupElement h = 0; h < m; ++h) {
          for (GroupElement k = 0; k < m; ++k) {
            if (_mult[_mult[g * m + h] * m + k]
                != _mult[g * m + _mult[h * m + k]]) {
              throw DomainError("group: multiplication not associative");
            }
          }
        }
        (void) inverse(g);
      }
    }

    void validate_action() const {
      FiniteSemilattice const& E = *_E;
      std::size_t const        n = E.size();
      if (_tau.size() != order()) {
        throw DomainError("group action: need one automorphism per element");
      }
      for (GroupElement g = 0; g < order(); ++g) {
        auto const& t = _tau[g];
        if (t.size() != n) {
          throw DomainError("group action: tau_" + _group[g]
                            + " is not defined on every element");
        }
        std::vector<bool> hit(n, false);
        for (Element e = 0; e < n; ++e) {
          if (t[e] >= n || hit[t[e]]) {
            throw DomainError("group action: tau_" + _group[g]
                              + " is not a bijection");
          }
          hit[t[e]] = true;
        }
        if (t[E.zero()] != E.zero()) {
          throw DomainError("group action: tau_" + _group[g]
                            + " does not fix zero");
        }
        for (Element e = 0; e < n; ++e) {
          for (Element f = 0; f < n; ++f) {
            if (t[E.product(e, f)] != E.product(t[e], t[f])) {
              throw DomainError("group action: tau_" + _group[g]
                                + " is not multiplicative at (" + E.label(e)
                                + ", " + E.label(f) + ")");
            }
          }
        }
      }
      for (GroupElement g = 0; g < order(); ++g) {
        for (GroupElement h = 0; h < order(); ++h) {
          auto const& tgh = _tau[multiply(g, h)];
          for (Element e = 0; e < n; ++e) {
            if (_tau[g][_tau[h][e]] != tgh[e]) {
              throw DomainError("group action: tau_" + _group[g] + " o tau_"
                                + _group[h] + " != tau of the product");
            }
          }
        }
      }
      for (Element e = 0; e < n; ++e) {
        if (_tau[_identity][e] != e) {
          throw DomainError("group action: identity acts nontrivially");
        }
      }
    }

    SemilatticePtr                    _E;
    std::vector<std::string>          _group;
    std::vector<GroupElement>         _mult;
    std::vector<std::vector<Element>> _tau;
    GroupElement                      _identity = 0;
  };

}  // namespace indres
