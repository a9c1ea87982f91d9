#pragma once

// Bounded chain complexes of finitely generated free abelian groups and their
// integral (co)homology.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "indres/integer.hpp"
#include "indres/integer_matrix.hpp"
#include "indres/smith.hpp"

namespace indres {

  // Z^free_rank + Z/d_1 + ... + Z/d_m with d_1 | ... | d_m, all d_i > 1.
  struct HomologyGroup {
    std::size_t          free_rank = 0;
    std::vector<Integer> torsion;

    bool is_zero() const noexcept {
      return free_rank == 0 && torsion.empty();
    }

    // "0", "ℤ", "ℤ^2", "ℤ ⊕ ℤ/2", "ℤ/2 ⊕ ℤ/4", ...
    std::string to_string() const {
      if (is_zero()) {
        return "0";
      }
      std::ostringstream os;
      bool               first = true;
      if (free_rank == 1) {
        os << "ℤ";
        first = false;
      } else if (free_rank > 1) {
        os << "ℤ^" << free_rank;
        first = false;
      }
      for (auto const& d : torsion) {
        os << (first ? "" : " ⊕ ") << "ℤ/" << d;
        first = false;
      }
      return os.str();
    }

    friend bool operator==(HomologyGroup const&, HomologyGroup const&) = default;
  };

  // Degrees 0..top(); boundary(k) maps degree k to degree k-1 and is a
  // rank(k-1) x rank(k) matrix. boundary(0) is the zero map to 0.
  class ChainComplex {
   public:
    ChainComplex() = default;

    ChainComplex(std::vector<std::vector<std::string>> basis,
                 std::vector<IntMatrix>                boundaries)
        : _basis(std::move(basis)), _boundaries(std::move(boundaries)) {
      if (_basis.size() != _boundaries.size()) {
        throw DomainError("chain complex: need one boundary per degree");
      }
      for (std::size_t k = 0; k < _basis.size(); ++k) {
        std::size_t const rows = k == 0 ? 0 : _basis[k - 1].size();
        if (_boundaries[k].rows() != rows
            || _boundaries[k].cols() != _basis[k].size()) {
          throw DomainError("chain complex: boundary " + std::to_string(k)
                            + " has the wrong shape");
        }
      }
    }

    // Number of stored degrees (top degree + 1).
    std::size_t length() const noexcept {
      return _basis.size();
    }

    std::size_t rank(std::size_t k) const noexcept {
      return k < _basis.size() ? _basis[k].size() : 0;
    }

    std::vector<std::string> const& basis(std::size_t k) const {
      return _basis.at(k);
    }

    // The boundary out of degree k; zero matrices outside the stored range.
    IntMatrix boundary(std::size_t k) const {
      if (k < _boundaries.size()) {
        return _boundaries[k];
      }
      return IntMatrix(rank(k - 1), 0);
    }

    std::vector<IntMatrix> const& boundaries() const noexcept {
      return _boundaries;
    }

    // First degree k >= 2 with boundary(k-1) * boundary(k) != 0.
    std::optional<std::size_t> square_zero_violation() const {
      for (std::size_t k = 2; k < _boundaries.size(); ++k) {
        if (!(_boundaries[k - 1] * _boundaries[k]).is_zero()) {
          return k;
        }
      }
      return std::nullopt;
    }

    bool is_complex() const {
      return !square_zero_violation();
    }

    long long euler_characteristic() const {
      long long chi = 0;
      for (std::size_t k = 0; k < _basis.size(); ++k) {
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(_basis[k].size());
      }
      return chi;
    }

   private:
    std::vector<std::vector<std::string>> _basis;
    std::vector<IntMatrix>                _boundaries;
  };

  namespace detail {

    inline std::vector<Integer> torsion_of(SmithResult const& s) {
      std::vector<Integer> out;
      for (auto const& d : s.invariant_factors) {
        if (d > 1) {
          out.push_back(d);
        }
      }
      return out;
    }

  }  // namespace detail

  // H_k for every k in [0, up_to]; degrees beyond the complex give 0.
  inline std::vector<HomologyGroup> homology_all(ChainComplex const& cx,
                                                 std::size_t         up_to) {
    std::vector<SmithResult> snf;
    for (std::size_t k = 0; k <= up_to + 1; ++k) {
      snf.push_back(smith_normal_form(cx.boundary(k)));
    }
    std::vector<HomologyGroup> out;
    for (std::size_t k = 0; k <= up_to; ++k) {
      HomologyGroup h;
      h.free_rank = cx.rank(k) - snf[k].rank() - snf[k + 1].rank();
      h.torsion   = detail::torsion_of(snf[k + 1]);
      out.push_back(std::move(h));
    }
    return out;
  }

  inline HomologyGroup homology(ChainComplex const& cx, std::size_t k) {
    SmithResult const in  = smith_normal_form(cx.boundary(k));
    SmithResult const out = smith_normal_form(cx.boundary(k + 1));
    HomologyGroup     h;
    h.free_rank = cx.rank(k) - in.rank() - out.rank();
    h.torsion   = detail::torsion_of(out);
    return h;
  }

  // H^k of the dual complex: ker(delta^k) / im(delta^{k-1}) with
  // delta^k = boundary(k+1)^T.
  inline HomologyGroup cohomology(ChainComplex const& cx, std::size_t k) {
    SmithResult const next = smith_normal_form(cx.boundary(k + 1).transpose());
    SmithResult const prev = smith_normal_form(cx.boundary(k).transpose());
    HomologyGroup     h;
    h.free_rank = cx.rank(k) - next.rank() - prev.rank();
    h.torsion   = detail::torsion_of(prev);
    return h;
  }

  inline std::vector<HomologyGroup> cohomology_all(ChainComplex const& cx,
                                                   std::size_t         up_to) {
    std::vector<HomologyGroup> out;
    for (std::size_t k = 0; k <= up_to; ++k) {
      out.push_back(cohomology(cx, k));
    }
    return out;
  }

  // Mapping cone of f: A -> B, with Cone_k = A_{k-1} + B_k and differential
  // (a, b) -> (-d a, f a + d b). The cone is acyclic iff f is a
  // quasi-isomorphism.
  inline ChainComplex mapping_cone(ChainComplex const&           a,
                                   ChainComplex const&           b,
                                   std::vector<IntMatrix> const& f) {
    std::size_t const top = std::max(a.length() + 1, b.length());
    auto              f_at = [&](std::size_t k) {
      if (k < f.size()) {
        return f[k];
      }
      return IntMatrix(b.rank(k), a.rank(k));
    };
    std::vector<std::vector<std::string>> basis(top);
    for (std::size_t k = 0; k < top; ++k) {
      if (k >= 1) {
        for (auto const& s : (k - 1 < a.length() ? a.basis(k - 1)
                                                 : std::vector<std::string>{})) {
          basis[k].push_back("a:" + s);
        }
      }
      for (auto const& s :
           (k < b.length() ? b.basis(k) : std::vector<std::string>{})) {
        basis[k].push_back("b:" + s);
      }
    }
    std::vector<IntMatrix> d(top);
    for (std::size_t k = 0; k < top; ++k) {
      std::size_t const a_src = k >= 1 ? a.rank(k - 1) : 0;
      std::size_t const a_dst = k >= 2 ? a.rank(k - 2) : 0;
      std::size_t const rows  = k == 0 ? 0 : basis[k - 1].size();
      IntMatrix         m(rows, basis[k].size());
      if (k >= 1) {
        if (k >= 2) {
          m.add_block(0, 0, a.boundary(k - 1), -1);
        }
        m.add_block(a_dst, 0, f_at(k - 1));
        m.add_block(a_dst, a_src, b.boundary(k));
      }
      d[k] = std::move(m);
    }
    return ChainComplex(std::move(basis), std::move(d));
  }

}  // namespace indres
