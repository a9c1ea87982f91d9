#pragma once

// Index combinatorics for the chain complexes: tuples of disjoint subsets of
// {1..n} (Q^n_k), sorted singleton tuples (N^n_k), the partial product *,
// the # calculus driven by a sharp table, and permutation signs.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "indres/integer.hpp"

namespace indres {

  using Part = std::vector<int>;  // sorted, 1-based

  // A k-tuple of pairwise disjoint non-empty subsets of {1..n}.
  class Mu {
   public:
    Mu() = default;

    Mu(int n, std::vector<Part> parts) : _n(n), _parts(std::move(parts)) {
      for (auto& p : _parts) {
        std::sort(p.begin(), p.end());
      }
      validate();
    }

    int n() const noexcept {
      return _n;
    }

    std::size_t k() const noexcept {
      return _parts.size();
    }

    std::vector<Part> const& parts() const noexcept {
      return _parts;
    }

    // 1-based access, matching mu_i.
    Part const& part(std::size_t i) const {
      if (i < 1 || i > k()) {
        throw DomainError("Mu: part index out of range");
      }
      return _parts[i - 1];
    }

    bool contains(int p) const {
      for (auto const& part : _parts) {
        if (std::binary_search(part.begin(), part.end(), p)) {
          return true;
        }
      }
      return false;
    }

    bool is_singleton_tuple() const {
      return std::all_of(_parts.begin(), _parts.end(), [](Part const& p) {
        return p.size() == 1;
      });
    }

    // Bitmask of every element appearing in some part.
    std::uint32_t support_mask() const {
      std::uint32_t m = 0;
      for (auto const& part : _parts) {
        for (int p : part) {
          m |= std::uint32_t(1) << (p - 1);
        }
      }
      return m;
    }

    // mu^i: delete part i.
    Mu without(std::size_t i) const {
      (void) part(i);
      std::vector<Part> parts = _parts;
      parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i - 1));
      return Mu(_n, std::move(parts));
    }

    // mu(i; rho): enlarge part i by rho.
    Mu enlarge(std::size_t i, Part const& rho) const {
      (void) part(i);
      std::vector<Part> parts = _parts;
      parts[i - 1].insert(parts[i - 1].end(), rho.begin(), rho.end());
      return Mu(_n, std::move(parts));
    }

    // mu|p: append the singleton {p}.
    Mu append(int p) const {
      std::vector<Part> parts = _parts;
      parts.push_back({p});
      return Mu(_n, std::move(parts));
    }

    // mu,p: merge p into the last part (for the empty tuple this is just p).
    Mu merge_last(int p) const {
      if (_parts.empty()) {
        return append(p);
      }
      return enlarge(k(), {p});
    }

    std::string to_string() const {
      if (_parts.empty()) {
        return "∅";
      }
      std::ostringstream os;
      for (std::size_t i = 0; i < _parts.size(); ++i) {
        os << (i == 0 ? "" : "|");
        for (std::size_t j = 0; j < _parts[i].size(); ++j) {
          os << (j == 0 ? "" : ",") << _parts[i][j];
        }
      }
      return os.str();
    }

    // Parses "10,3|4,5,8|7|1,2"; "" and "∅" give the empty tuple.
    static Mu parse(int n, std::string_view text) {
      std::vector<Part> parts;
      if (text.empty() || text == "∅") {
        return Mu(n, {});
      }
      Part              current;
      std::string       number;
      auto flush_number = [&]() {
        if (number.empty()) {
          throw ParseError("Mu: empty entry in \"" + std::string(text) + "\"");
        }
        current.push_back(std::stoi(number));
        number.clear();
      };
      for (char c : text) {
        if (c >= '0' && c <= '9') {
          number += c;
        } else if (c == ',') {
          flush_number();
        } else if (c == '|') {
          flush_number();
          parts.push_back(std::move(current));
          current.clear();
        } else if (c != ' ') {
          throw ParseError("Mu: unexpected character in \"" + std::string(text)
                           + "\"");
        }
      }
      flush_number();
      parts.push_back(std::move(current));
      try {
        return Mu(n, std::move(parts));
      } catch (DomainError const& e) {
        throw ParseError(e.what());
      }
    }

    // Ordered by k first, then lexicographically on parts.
    friend std::strong_ordering operator<=>(Mu const& a, Mu const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      if (auto c = a.k() <=> b.k(); c != 0) {
        return c;
      }
      return a._parts <=> b._parts;
    }

    friend bool operator==(Mu const& a, Mu const& b) {
      return a._n == b._n && a._parts == b._parts;
    }

   private:
    void validate() const {
      if (_n < 0 || _n > 31) {
        throw DomainError("Mu: n must lie in [0, 31]");
      }
      std::uint32_t seen = 0;
      for (auto const& part : _parts) {
        if (part.empty()) {
          throw DomainError("Mu: empty part");
        }
        for (int p : part) {
          if (p < 1 || p > _n) {
            throw DomainError("Mu: entry " + std::to_string(p)
                              + " outside {1.." + std::to_string(_n) + "}");
          }
          std::uint32_t const bit = std::uint32_t(1) << (p - 1);
          if (seen & bit) {
            throw DomainError("Mu: parts are not disjoint (" + std::to_string(p)
                              + " repeats)");
          }
          seen |= bit;
        }
      }
    }

    int               _n = 0;
    std::vector<Part> _parts;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline Part mask_to_part(std::uint32_t mask) {
      Part out;
      for (int p = 1; mask != 0; ++p, mask >>= 1) {
        if (mask & 1) {
          out.push_back(p);
        }
      }
      return out;
    }

    inline void enumerate_Q_rec(int                n,
                                std::size_t        k,
                                std::uint32_t      used,
                                std::vector<Part>& current,
                                std::vector<Mu>&   out) {
      if (current.size() == k) {
        out.emplace_back(n, current);
        return;
      }
      std::uint32_t const all = (std::uint32_t(1) << n) - 1;
      std::vector<Part>   options;
      for (std::uint32_t m = 1; m <= all; ++m) {
        if ((m & used) == 0) {
          options.push_back(mask_to_part(m));
        }
      }
      std::sort(options.begin(), options.end());
      for (auto const& part : options) {
        std::uint32_t mask = 0;
        for (int p : part) {
          mask |= std::uint32_t(1) << (p - 1);
        }
        current.push_back(part);
        enumerate_Q_rec(n, k, used | mask, current, out);
        current.pop_back();
      }
    }

  }  // namespace detail

  // Q^n_k in lexicographic order of the parts.
  inline std::vector<Mu> enumerate_Q(int n, std::size_t k) {
    std::vector<Mu> out;
    if (n < 0 || k > static_cast<std::size_t>(n)) {
      return out;
    }
    std::vector<Part> current;
    detail::enumerate_Q_rec(n, k, 0, current, out);
    return out;
  }

  // N^n_k: singleton parts in increasing order, lexicographic.
  inline std::vector<Mu> enumerate_N(int n, std::size_t k) {
    std::vector<Mu> out;
    if (n < 0 || k > static_cast<std::size_t>(n)) {
      return out;
    }
    std::vector<int> choice(k);
    auto             rec = [&](auto&& self, std::size_t pos, int next) -> void {
      if (pos == k) {
        std::vector<Part> parts;
        for (int c : choice) {
          parts.push_back({c});
        }
        out.emplace_back(n, std::move(parts));
        return;
      }
      for (int v = next; v <= n; ++v) {
        choice[pos] = v;
        self(self, pos + 1, v + 1);
      }
    };
    rec(rec, 0, 1);
    return out;
  }

  // The commutative partial product; nullopt when some element would occur
  // twice.
  inline std::optional<Mu> star(Mu const& mu, Mu const& nu) {
    if (mu.n() != nu.n()) {
      throw DomainError("star: tuples over different n");
    }
    if (mu.k() > nu.k()) {
      return star(nu, mu);
    }
    if (mu.k() == 0) {
      return nu;
    }
    std::vector<Part> parts = nu.parts();
    for (std::size_t i = 0; i < mu.k(); ++i) {
      parts[i].insert(parts[i].end(), mu.parts()[i].begin(), mu.parts()[i].end());
    }
    std::uint32_t seen = 0;
    for (auto const& part : parts) {
      for (int p : part) {
        std::uint32_t const bit = std::uint32_t(1) << (p - 1);
        if (seen & bit) {
          return std::nullopt;
        }
        seen |= bit;
      }
    }
    return Mu(mu.n(), std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Sharp tables and the # calculus
  ////////////////////////////////////////////////////////////////////////////

  // Partial map (i, j) -> i#j for i != j, 1-based.
  class SharpTable {
   public:
    SharpTable() = default;

    explicit SharpTable(int n)
        : _n(n), _table(static_cast<std::size_t>(n) * n) {}

    int n() const noexcept {
      return _n;
    }

    void set(int i, int j, int value) {
      check_pair(i, j);
      if (value < 1 || value > _n) {
        throw DomainError("sharp table: value out of range");
      }
      _table[index(i, j)] = value;
    }

    std::optional<int> get(int i, int j) const {
      check_pair(i, j);
      return _table[index(i, j)];
    }

    int at(int i, int j) const {
      auto v = get(i, j);
      if (!v) {
        throw DomainError("sharp table: missing entry " + std::to_string(i)
                          + "#" + std::to_string(j));
      }
      return *v;
    }

    bool is_total() const {
      for (int i = 1; i <= _n; ++i) {
        for (int j = 1; j <= _n; ++j) {
          if (i != j && !_table[index(i, j)]) {
            return false;
          }
        }
      }
      return true;
    }

    // Row-injectivity: i#j != i#k for pairwise distinct i, j, k. Returns a
    // violating triple if any.
    std::optional<std::array<int, 3>> row_injectivity_witness() const {
      for (int i = 1; i <= _n; ++i) {
        for (int j = 1; j <= _n; ++j) {
          for (int k = j + 1; k <= _n; ++k) {
            if (i == j || i == k) {
              continue;
            }
            auto a = get(i, j);
            auto b = get(i, k);
            if (a && b && *a == *b) {
              return std::array<int, 3>{i, j, k};
            }
          }
        }
      }
      return std::nullopt;
    }

    // The table with every entry i#j = j.
    static SharpTable trivial(int n) {
      SharpTable t(n);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i != j) {
            t.set(i, j, j);
          }
        }
      }
      return t;
    }

    friend bool operator==(SharpTable const&, SharpTable const&) = default;

   private:
    std::size_t index(int i, int j) const {
      return static_cast<std::size_t>(i - 1) * _n + (j - 1);
    }

    void check_pair(int i, int j) const {
      if (i < 1 || i > _n || j < 1 || j > _n || i == j) {
        throw DomainError("sharp table: invalid pair (" + std::to_string(i)
                          + ", " + std::to_string(j) + ")");
      }
    }

    int                             _n = 0;
    std::vector<std::optional<int>> _table;
  };

  namespace detail {

    inline std::vector<int> sorted_unique(std::vector<int> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    inline bool contains(std::vector<int> const& sorted, int x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    }

  }  // namespace detail

  // i#rho = {i#p : p in rho}, with i not in rho.
  inline std::vector<int> sharp_set(int i, std::vector<int> const& rho,
                                    SharpTable const& t) {
    std::vector<int> out;
    out.reserve(rho.size());
    for (int p : rho) {
      out.push_back(t.at(i, p));
    }
    auto sorted = detail::sorted_unique(out);
    if (sorted.size() != out.size()) {
      throw DomainError("sharp: table is not row-injective");
    }
    return sorted;
  }

  // omega#j = (q#(omega \ {q}))#(q#j), extracting q = min(omega) each time.
  inline int sharp(std::vector<int> omega, int j, SharpTable const& t) {
    omega = detail::sorted_unique(std::move(omega));
    while (!omega.empty()) {
      if (detail::contains(omega, j)) {
        throw DomainError("sharp: " + std::to_string(j)
                          + " lies in the extracted set");
      }
      int const        q = omega.front();
      std::vector<int> rest(omega.begin() + 1, omega.end());
      omega = sharp_set(q, rest, t);
      j     = t.at(q, j);
    }
    return j;
  }

  // Every value of omega#j obtainable over all extraction orders.
  inline std::set<int> sharp_all_orders(std::vector<int> omega,
                                        int              j,
                                        SharpTable const& t) {
    omega = detail::sorted_unique(std::move(omega));
    if (omega.empty()) {
      return {j};
    }
    std::set<int> out;
    for (int q : omega) {
      std::vector<int> rest;
      for (int p : omega) {
        if (p != q) {
          rest.push_back(p);
        }
      }
      auto sub = sharp_all_orders(sharp_set(q, rest, t), t.at(q, j), t);
      out.insert(sub.begin(), sub.end());
    }
    return out;
  }

  // omega#mu = omega#mu_1 | ... | omega#mu_k, with omega#mu_i elementwise.
  inline Mu sharp_mu(std::vector<int> const& omega,
                     Mu const&               mu,
                     SharpTable const&       t) {
    if (omega.empty()) {
      return mu;
    }
    std::vector<Part> parts;
    for (auto const& part : mu.parts()) {
      Part image;
      for (int p : part) {
        image.push_back(sharp(omega, p, t));
      }
      parts.push_back(std::move(image));
    }
    return Mu(mu.n(), std::move(parts));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////////

  // A permutation of {1..k} as the list (sigma(1), ..., sigma(k)).
  using Permutation = std::vector<int>;

  inline std::size_t inversions(Permutation const& sigma) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < sigma.size(); ++a) {
      for (std::size_t b = a + 1; b < sigma.size(); ++b) {
        if (sigma[a] > sigma[b]) {
          ++count;
        }
      }
    }
    return count;
  }

  inline int sign(Permutation const& sigma) {
    return inversions(sigma) % 2 == 0 ? 1 : -1;
  }

  // sigma(mu) = (mu_sigma(1) | ... | mu_sigma(k)).
  inline Mu permute(Permutation const& sigma, Mu const& mu) {
    if (sigma.size() != mu.k()) {
      throw DomainError("permute: permutation size differs from tuple length");
    }
    std::vector<Part> parts;
    parts.reserve(sigma.size());
    for (int s : sigma) {
      parts.push_back(mu.part(static_cast<std::size_t>(s)));
    }
    return Mu(mu.n(), std::move(parts));
  }

  inline std::vector<Permutation> all_permutations(std::size_t k) {
    Permutation p(k);
    for (std::size_t i = 0; i < k; ++i) {
      p[i] = static_cast<int>(i + 1);
    }
    std::vector<Permutation> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  // The permutation rho with rho(mu_i # mu^i) sorted increasingly; mu must
  // consist of singletons.
  inline Permutation rho_mu_i(Mu const& mu, std::size_t i, SharpTable const& t) {
    if (!mu.is_singleton_tuple()) {
      throw DomainError("rho: tuple must consist of singletons");
    }
    Mu const    lambda = sharp_mu(mu.part(i), mu.without(i), t);
    std::size_t k      = lambda.k();
    Permutation rho(k);
    for (std::size_t j = 0; j < k; ++j) {
      rho[j] = static_cast<int>(j + 1);
    }
    std::sort(rho.begin(), rho.end(), [&](int a, int b) {
      return lambda.part(a)[0] < lambda.part(b)[0];
    });
    for (std::size_t j = 1; j < k; ++j) {
      if (lambda.part(rho[j - 1])[0] == lambda.part(rho[j])[0]) {
        throw DomainError("rho: repeated value in " + lambda.to_string());
      }
    }
    return rho;
  }

  // a_0 = 0, a_k = a_{k-1} + k - 1.
  inline long long a_seq(std::size_t k) {
    return static_cast<long long>(k) * (static_cast<long long>(k) - 1) / 2;
  }

}  // namespace indres
