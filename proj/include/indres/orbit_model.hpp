#pragma once

// The orbit-level data (M_i operators and the sharp table) of a free action
// with uniformly indexed covers, and the two chain complexes built from it:
// C over Q^n_k and the smaller C~ over N^n_k, plus the chain map C~ -> C.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indres/chain_complex.hpp"
#include "indres/integer.hpp"
#include "indres/integer_matrix.hpp"
#include "indres/mu.hpp"

namespace indres {

  class OrbitModel {
   public:
    using Mask = std::uint32_t;

    OrbitModel(std::vector<std::string> orbits,
               std::vector<IntMatrix>   M,
               SharpTable               sharp)
        : _orbits(std::move(orbits)), _M(std::move(M)), _sharp(std::move(sharp)) {
      std::size_t const b = _orbits.size();
      if (b == 0) {
        throw DomainError("orbit model: empty orbit basis");
      }
      if (static_cast<int>(_M.size()) != _sharp.n()) {
        throw DomainError("orbit model: need one M_i per cover index");
      }
      if (_sharp.n() > 16) {
        throw DomainError("orbit model: at most 16 covers per element");
      }
      for (auto const& m : _M) {
        if (m.rows() != b || m.cols() != b) {
          throw DomainError("orbit model: M_i must be square of orbit size");
        }
      }
      if (!_sharp.is_total()) {
        throw DomainError("orbit model: sharp table is incomplete");
      }
      if (auto w = _sharp.row_injectivity_witness()) {
        throw DomainError("orbit model: sharp table not row-injective at ("
                          + std::to_string((*w)[0]) + ", "
                          + std::to_string((*w)[1]) + ", "
                          + std::to_string((*w)[2]) + ")");
      }
      compute_m_omega();
    }

    // A single orbit with every M_i the 1x1 identity (free transitive case).
    static OrbitModel single_orbit(SharpTable sharp, std::string label = "P") {
      std::vector<IntMatrix> M(static_cast<std::size_t>(sharp.n()),
                               IntMatrix::identity(1));
      return OrbitModel({std::move(label)}, std::move(M), std::move(sharp));
    }

    int n() const noexcept {
      return _sharp.n();
    }

    std::size_t orbit_count() const noexcept {
      return _orbits.size();
    }

    std::vector<std::string> const& orbits() const noexcept {
      return _orbits;
    }

    SharpTable const& sharp() const noexcept {
      return _sharp;
    }

    // M_i, 1-based.
    IntMatrix const& M(int i) const {
      return _M.at(static_cast<std::size_t>(i - 1));
    }

    std::vector<IntMatrix> const& Ms() const noexcept {
      return _M;
    }

    // M_omega, computed through the factorization with p = min(omega).
    IntMatrix const& m_omega(Mask omega) const {
      return _m_omega.at(omega);
    }

    IntMatrix const& m_omega(std::vector<int> const& omega) const {
      return m_omega(to_mask(omega));
    }

    static Mask to_mask(std::vector<int> const& set) {
      Mask m = 0;
      for (int p : set) {
        m |= Mask(1) << (p - 1);
      }
      return m;
    }

    // Checks M_rho = M_{p#(rho \ p)} M_p for every rho and every p in rho.
    std::optional<std::string> factorization_witness() const {
      Mask const all = (Mask(1) << n()) - 1;
      for (Mask rho = 1; rho <= all; ++rho) {
        if (std::popcount(rho) < 2) {
          continue;
        }
        for (int p = 1; p <= n(); ++p) {
          if (!(rho & (Mask(1) << (p - 1)))) {
            continue;
          }
          IntMatrix const candidate
              = m_omega(rest_image(p, rho)) * M(p);
          if (!(candidate == m_omega(rho))) {
            return "M_" + mask_string(rho) + " != M_{" + std::to_string(p)
                   + "#(rest)} M_" + std::to_string(p);
          }
        }
      }
      return std::nullopt;
    }

    // Order independence of omega#j for every omega and j outside it.
    std::optional<std::string> sharp_order_witness() const {
      Mask const all = (Mask(1) << n()) - 1;
      for (Mask omega = 1; omega <= all; ++omega) {
        for (int j = 1; j <= n(); ++j) {
          if (omega & (Mask(1) << (j - 1))) {
            continue;
          }
          auto values = sharp_all_orders(detail::mask_to_part(omega), j, _sharp);
          if (values.size() != 1) {
            return "{" + mask_string(omega) + "}#" + std::to_string(j)
                   + " depends on the extraction order";
          }
        }
      }
      return std::nullopt;
    }

    static std::string mask_string(Mask m) {
      std::string s;
      for (int p : detail::mask_to_part(m)) {
        s += (s.empty() ? "" : ",") + std::to_string(p);
      }
      return s;
    }

   private:
    // p#(rho \ {p}) as a mask.
    Mask rest_image(int p, Mask rho) const {
      Mask out = 0;
      for (int q = 1; q <= n(); ++q) {
        if (q != p && (rho & (Mask(1) << (q - 1)))) {
          out |= Mask(1) << (_sharp.at(p, q) - 1);
        }
      }
      return out;
    }

    void compute_m_omega() {
      Mask const all = (Mask(1) << n()) - 1;
      _m_omega.assign(static_cast<std::size_t>(all) + 1, IntMatrix());
      _m_omega[0] = IntMatrix::identity(orbit_count());
      for (int size = 1; size <= n(); ++size) {
        for (Mask rho = 1; rho <= all; ++rho) {
          if (std::popcount(rho) != size) {
            continue;
          }
          int const p = std::countr_zero(rho) + 1;
          Mask const rest = rest_image(p, rho);
          if (std::popcount(rest) != size - 1) {
            throw DomainError("orbit model: sharp image collapsed");
          }
          _m_omega[rho] = _m_omega[rest] * M(p);
        }
      }
    }

    std::vector<std::string> _orbits;
    std::vector<IntMatrix>   _M;
    SharpTable               _sharp;
    std::vector<IntMatrix>   _m_omega;
  };

  namespace detail {

    // Basis of degree k: one block of orbit_count() entries per tuple.
    struct Graded {
      std::vector<Mu>                 tuples;
      std::map<Mu, std::size_t>       index;

      explicit Graded(std::vector<Mu> t) : tuples(std::move(t)) {
        for (std::size_t i = 0; i < tuples.size(); ++i) {
          index.emplace(tuples[i], i);
        }
      }

      std::size_t at(Mu const& mu) const {
        auto it = index.find(mu);
        if (it == index.end()) {
          throw DomainError("chain complex: " + mu.to_string()
                            + " is not a basis tuple");
        }
        return it->second;
      }
    };

    inline std::vector<std::string> block_labels(OrbitModel const& model,
                                                 std::vector<Mu> const& tuples) {
      std::vector<std::string> out;
      for (auto const& mu : tuples) {
        for (auto const& orbit : model.orbits()) {
          out.push_back(mu.k() == 0 ? orbit
                                    : orbit + "(" + mu.to_string() + ")");
        }
      }
      return out;
    }

    // D[block nu, column (mu, c)] += sign * (matrix column c).
    inline void add_column_block(IntMatrix&       D,
                                 std::size_t      nu,
                                 std::size_t      col,
                                 std::size_t      c,
                                 IntMatrix const& matrix,
                                 int              sign) {
      std::size_t const b = matrix.rows();
      for (std::size_t r = 0; r < b; ++r) {
        if (matrix(r, c) != 0) {
          D(nu * b + r, col) += sign * matrix(r, c);
        }
      }
    }

    inline std::vector<std::vector<int>> subsets_of(Part const& part) {
      std::vector<std::vector<int>> out;
      std::size_t const             m = part.size();
      for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask & (std::size_t(1) << i)) {
            s.push_back(part[i]);
          }
        }
        out.push_back(std::move(s));
      }
      return out;
    }

    inline std::vector<int> set_minus(Part const& a, std::vector<int> const& b) {
      std::vector<int> out;
      for (int x : a) {
        if (std::find(b.begin(), b.end(), x) == b.end()) {
          out.push_back(x);
        }
      }
      return out;
    }

    inline int parity_sign(std::size_t m) {
      return m % 2 == 0 ? 1 : -1;
    }

  }  // namespace detail

  // How the terms e(mu^k(i;p)), p in rho, multiply out in the boundary of C.
  // expanded: every assignment of the points of rho to the parts of mu^k.
  // as_displayed: only the assignments sending all of rho to a single part,
  // as in the closed formula usually quoted. The two agree whenever rho is a
  // singleton or mu^k has one part (n <= 3), and only expanded gives a
  // complex in general.
  enum class CFormula { expanded, as_displayed };

  namespace detail {

    inline std::vector<Mu> spread(Mu const& head, Part const& rho, CFormula formula) {
      std::size_t const parts = head.k();
      std::vector<Mu>   out;
      if (formula == CFormula::as_displayed || rho.size() == 1) {
        for (std::size_t i = 1; i <= parts; ++i) {
          out.push_back(head.enlarge(i, rho));
        }
        return out;
      }
      std::vector<std::size_t> target(rho.size(), 1);
      while (true) {
        Mu m = head;
        for (std::size_t p = 0; p < rho.size(); ++p) {
          m = m.enlarge(target[p], Part{rho[p]});
        }
        out.push_back(std::move(m));
        std::size_t pos = 0;
        while (pos < rho.size() && ++target[pos] > parts) {
          target[pos] = 1;
          ++pos;
        }
        if (pos == rho.size()) {
          break;
        }
      }
      return out;
    }

  }  // namespace detail

  // The complex C: degree k is free on Q^n_k x orbits, for k = 0..min(up_to, n).
  inline ChainComplex build_C(OrbitModel const& model,
                              int               up_to   = -1,
                              CFormula          formula = CFormula::expanded) {
    int const         n   = model.n();
    int const         top = up_to < 0 ? n : std::min(up_to, n);
    std::size_t const b   = model.orbit_count();

    std::vector<detail::Graded> graded;
    for (int k = 0; k <= top; ++k) {
      graded.emplace_back(enumerate_Q(n, static_cast<std::size_t>(k)));
    }
    std::vector<std::vector<std::string>> basis;
    std::vector<IntMatrix>                boundaries;
    for (int k = 0; k <= top; ++k) {
      auto const& src = graded[static_cast<std::size_t>(k)];
      basis.push_back(detail::block_labels(model, src.tuples));
      if (k == 0) {
        boundaries.emplace_back(0, src.tuples.size() * b);
        continue;
      }
      auto const& dst = graded[static_cast<std::size_t>(k - 1)];
      IntMatrix   D(dst.tuples.size() * b, src.tuples.size() * b);
      for (std::size_t mi = 0; mi < src.tuples.size(); ++mi) {
        Mu const&   mu   = src.tuples[mi];
        Part const& last = mu.part(mu.k());
        Mu const    head = mu.without(mu.k());
        for (std::size_t c = 0; c < b; ++c) {
          std::size_t const col = mi * b + c;
          for (auto const& omega : detail::subsets_of(last)) {
            int const sgn = detail::parity_sign(omega.size());
            std::size_t const nu
                = k == 1 ? 0 : dst.at(sharp_mu(omega, head, model.sharp()));
            detail::add_column_block(D, nu, col, c, model.m_omega(omega), sgn);
          }
          if (k == 1) {
            continue;
          }
          for (auto const& rho : detail::subsets_of(last)) {
            if (rho.empty()) {
              continue;
            }
            for (auto const& omega :
                 detail::subsets_of(detail::set_minus(last, rho))) {
              int const sgn = detail::parity_sign(rho.size() + omega.size());
              for (Mu const& spread : detail::spread(head, rho, formula)) {
                std::size_t const nu
                    = dst.at(sharp_mu(omega, spread, model.sharp()));
                detail::add_column_block(
                    D, nu, col, c, model.m_omega(omega), sgn);
              }
            }
          }
        }
      }
      boundaries.push_back(std::move(D));
    }
    return ChainComplex(std::move(basis), std::move(boundaries));
  }

  // The complex C~: degree k is free on N^n_k x orbits, k = 0..n.
  inline ChainComplex build_Ctilde(OrbitModel const& model) {
    int const         n = model.n();
    std::size_t const b = model.orbit_count();
    IntMatrix const   I = IntMatrix::identity(b);

    std::vector<detail::Graded> graded;
    for (int k = 0; k <= n; ++k) {
      graded.emplace_back(enumerate_N(n, static_cast<std::size_t>(k)));
    }
    std::vector<std::vector<std::string>> basis;
    std::vector<IntMatrix>                boundaries;
    for (int k = 0; k <= n; ++k) {
      auto const& src = graded[static_cast<std::size_t>(k)];
      basis.push_back(detail::block_labels(model, src.tuples));
      if (k == 0) {
        boundaries.emplace_back(0, src.tuples.size() * b);
        continue;
      }
      auto const& dst = graded[static_cast<std::size_t>(k - 1)];
      IntMatrix   D(dst.tuples.size() * b, src.tuples.size() * b);
      for (std::size_t mi = 0; mi < src.tuples.size(); ++mi) {
        Mu const& mu = src.tuples[mi];
        for (std::size_t i = 1; i <= mu.k(); ++i) {
          int const         s      = detail::parity_sign(i + 1);
          std::size_t const plain  = dst.at(mu.without(i));
          Permutation const rho    = rho_mu_i(mu, i, model.sharp());
          Mu const          lambda = permute(
              rho, sharp_mu(mu.part(i), mu.without(i), model.sharp()));
          std::size_t const moved = dst.at(lambda);
          int const twist = s * detail::parity_sign(inversions(rho) + 1);
          for (std::size_t c = 0; c < b; ++c) {
            std::size_t const col = mi * b + c;
            detail::add_column_block(D, plain, col, c, I, s);
            detail::add_column_block(
                D, moved, col, c, model.M(mu.part(i)[0]), twist);
          }
        }
      }
      boundaries.push_back(std::move(D));
    }
    return ChainComplex(std::move(basis), std::move(boundaries));
  }

  // f_k : C~_k -> C_k for k = 0..n; f_0 is the identity.
  inline std::vector<IntMatrix> chain_map_f(OrbitModel const& model) {
    int const                n = model.n();
    std::size_t const        b = model.orbit_count();
    std::vector<IntMatrix>   f;
    for (int k = 0; k <= n; ++k) {
      auto const           kk = static_cast<std::size_t>(k);
      detail::Graded const q(enumerate_Q(n, kk));
      auto const           ns = enumerate_N(n, kk);
      IntMatrix            F(q.tuples.size() * b, ns.size() * b);
      auto const           perms = all_permutations(kk);
      for (std::size_t mi = 0; mi < ns.size(); ++mi) {
        for (auto const& sigma : perms) {
          int const sgn = detail::parity_sign(
              inversions(sigma) + static_cast<std::size_t>(a_seq(kk)));
          std::size_t const row_block = q.at(permute(sigma, ns[mi]));
          for (std::size_t c = 0; c < b; ++c) {
            F(row_block * b + c, mi * b + c) += sgn;
          }
        }
      }
      f.push_back(std::move(F));
    }
    return f;
  }

  // First k with boundary_C(k) f_k != f_{k-1} d_k, if any.
  inline std::optional<std::size_t>
  chain_map_violation(ChainComplex const&           Ct,
                      ChainComplex const&           C,
                      std::vector<IntMatrix> const& f) {
    for (std::size_t k = 1; k < f.size(); ++k) {
      if (!(C.boundary(k) * f[k] == f[k - 1] * Ct.boundary(k))) {
        return k;
      }
    }
    return std::nullopt;
  }

  struct HomologyComparison {
    std::vector<HomologyGroup> h_C;
    std::vector<HomologyGroup> h_Ctilde;
    bool                       groups_equal = false;
    bool                       chain_map    = false;
    // f_* is an isomorphism exactly when the mapping cone is acyclic.
    bool                       quasi_isomorphism = false;
  };

  inline HomologyComparison compare_homology(OrbitModel const& model) {
    ChainComplex const  C  = build_C(model);
    ChainComplex const  Ct = build_Ctilde(model);
    auto const          f  = chain_map_f(model);
    HomologyComparison  out;
    std::size_t const   top = static_cast<std::size_t>(model.n()) + 1;
    out.h_C                 = homology_all(C, top);
    out.h_Ctilde            = homology_all(Ct, top);
    out.groups_equal        = out.h_C == out.h_Ctilde;
    out.chain_map           = !chain_map_violation(Ct, C, f);
    if (out.chain_map) {
      ChainComplex const cone = mapping_cone(Ct, C, f);
      out.quasi_isomorphism   = true;
      for (auto const& h : homology_all(cone, top + 1)) {
        out.quasi_isomorphism = out.quasi_isomorphism && h.is_zero();
      }
    }
    return out;
  }

}  // namespace indres
