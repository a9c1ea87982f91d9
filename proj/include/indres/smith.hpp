#pragma once

// Smith normal form over the integers, with optional unimodular transforms.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "indres/integer.hpp"
#include "indres/integer_matrix.hpp"

namespace indres {

  struct SmithResult {
    // d_1 | d_2 | ... | d_r, all positive, r = rank.
    std::vector<Integer> invariant_factors;
    // Present only when requested: U * A * V == S.
    std::optional<IntMatrix> U;
    std::optional<IntMatrix> V;
    std::optional<IntMatrix> S;

    std::size_t rank() const noexcept {
      return invariant_factors.size();
    }
  };

  namespace detail {

    class SmithReducer {
     public:
      SmithReducer(IntMatrix a, bool track)
          : _s(std::move(a)), _track(track) {
        if (_track) {
          _u = IntMatrix::identity(_s.rows());
          _v = IntMatrix::identity(_s.cols());
        }
      }

      SmithResult run() {
        std::size_t const m = _s.rows();
        std::size_t const n = _s.cols();
        std::size_t       t = 0;
        while (t < m && t < n) {
          if (!move_min_to(t)) {
            break;
          }
          while (!clear_cross(t) || !fix_divisibility(t)) {
          }
          if (_s(t, t) < 0) {
            negate_row(t);
          }
          ++t;
        }
        SmithResult out;
        for (std::size_t i = 0; i < t; ++i) {
          out.invariant_factors.push_back(_s(i, i));
        }
        if (_track) {
          out.U = std::move(_u);
          out.V = std::move(_v);
          out.S = std::move(_s);
        }
        return out;
      }

     private:
      // Moves a nonzero entry of least absolute value in the trailing block
      // to (t, t). Returns false if the block is zero.
      bool move_min_to(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        bool        found = false;
        for (std::size_t i = t; i < _s.rows(); ++i) {
          for (std::size_t j = t; j < _s.cols(); ++j) {
            if (_s(i, j) != 0 && (!found || abs(_s(i, j)) < abs(_s(bi, bj)))) {
              bi    = i;
              bj    = j;
              found = true;
              if (abs(_s(i, j)) == 1) {
                break;
              }
            }
          }
          if (found && abs(_s(bi, bj)) == 1) {
            break;
          }
        }
        if (found) {
          swap_rows(t, bi);
          swap_cols(t, bj);
        }
        return found;
      }

      // Reduces row t and column t modulo the pivot. Returns true once both
      // are zero apart from the pivot; otherwise a smaller remainder was moved
      // into the pivot position and the caller repeats.
      bool clear_cross(std::size_t t) {
        bool done = true;
        for (std::size_t i = t + 1; i < _s.rows(); ++i) {
          if (_s(i, t) != 0) {
            add_row_multiple(i, t, -floor_div(_s(i, t), _s(t, t)));
          }
        }
        for (std::size_t j = t + 1; j < _s.cols(); ++j) {
          if (_s(t, j) != 0) {
            add_col_multiple(j, t, -floor_div(_s(t, j), _s(t, t)));
          }
        }
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < _s.rows(); ++i) {
          if (_s(i, t) != 0) {
            done = false;
            if (abs(_s(i, t)) < abs(_s(bi, bj))) {
              bi = i;
              bj = t;
            }
          }
        }
        for (std::size_t j = t + 1; j < _s.cols(); ++j) {
          if (_s(t, j) != 0) {
            done = false;
            if (abs(_s(t, j)) < abs(_s(bi, bj))) {
              bi = t;
              bj = j;
            }
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        return done;
      }

      // With row and column t cleared, makes the pivot divide every entry of
      // the trailing block. Returns false if a row was added to row t.
      bool fix_divisibility(std::size_t t) {
        for (std::size_t i = t + 1; i < _s.rows(); ++i) {
          for (std::size_t j = t + 1; j < _s.cols(); ++j) {
            if (_s(i, j) % _s(t, t) != 0) {
              add_row_multiple(t, i, 1);
              return false;
            }
          }
        }
        return true;
      }

      static Integer floor_div(Integer const& a, Integer const& b) {
        return detail::floor_div(a, b);
      }

      void swap_rows(std::size_t a, std::size_t b) {
        _s.swap_rows(a, b);
        if (_track) {
          _u.swap_rows(a, b);
        }
      }

      void swap_cols(std::size_t a, std::size_t b) {
        _s.swap_cols(a, b);
        if (_track) {
          _v.swap_cols(a, b);
        }
      }

      void add_row_multiple(std::size_t dst, std::size_t src, Integer const& k) {
        _s.add_row_multiple(dst, src, k);
        if (_track) {
          _u.add_row_multiple(dst, src, k);
        }
      }

      void add_col_multiple(std::size_t dst, std::size_t src, Integer const& k) {
        _s.add_col_multiple(dst, src, k);
        if (_track) {
          _v.add_col_multiple(dst, src, k);
        }
      }

      void negate_row(std::size_t i) {
        _s.negate_row(i);
        if (_track) {
          _u.negate_row(i);
        }
      }

      IntMatrix _s;
      IntMatrix _u;
      IntMatrix _v;
      bool      _track;
    };

  }  // namespace detail

  inline SmithResult smith_normal_form(IntMatrix const& a,
                                       bool             with_transforms = false) {
    return detail::SmithReducer(a, with_transforms).run();
  }

}  // namespace indres
