#pragma once

// Dense integer matrices with exact arithmetic, plus Hermite normal form,
// integer kernels and rank. Vectors are columns: a map Z^n -> Z^m is an
// m x n matrix.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "indres/integer.hpp"

namespace indres {

  class IntMatrix {
   public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
      _rows = rows.size();
      _cols = _rows == 0 ? 0 : rows.begin()->size();
      _data.reserve(_rows * _cols);
      for (auto const& r : rows) {
        if (r.size() != _cols) {
          throw DomainError("IntMatrix: ragged initializer");
        }
        for (long long v : r) {
          _data.emplace_back(v);
        }
      }
    }

    static IntMatrix identity(std::size_t n) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }

    std::size_t cols() const noexcept {
      return _cols;
    }

    Integer& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }

    Integer const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    std::vector<Integer> const& data() const noexcept {
      return _data;
    }

    bool is_zero() const {
      return std::all_of(
          _data.begin(), _data.end(), [](Integer const& x) { return x == 0; });
    }

    IntMatrix transpose() const {
      IntMatrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    // this[r0.., c0..] += scale * block
    void add_block(std::size_t      r0,
                   std::size_t      c0,
                   IntMatrix const& block,
                   Integer const&   scale = 1) {
      if (r0 + block.rows() > _rows || c0 + block.cols() > _cols) {
        throw DomainError("IntMatrix: block out of range");
      }
      if (scale == 0) {
        return;
      }
      for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) {
          if (block(i, j) != 0) {
            (*this)(r0 + i, c0 + j) += scale * block(i, j);
          }
        }
      }
    }

    IntMatrix block(std::size_t r0,
                    std::size_t c0,
                    std::size_t nr,
                    std::size_t nc) const {
      IntMatrix out(nr, nc);
      for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) {
          out(i, j) = (*this)(r0 + i, c0 + j);
        }
      }
      return out;
    }

    std::vector<Integer> row(std::size_t i) const {
      return {_data.begin() + i * _cols, _data.begin() + (i + 1) * _cols};
    }

    std::vector<Integer> col(std::size_t j) const {
      std::vector<Integer> out(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        out[i] = (*this)(i, j);
      }
      return out;
    }

    static IntMatrix from_rows(std::vector<std::vector<Integer>> const& rows,
                               std::size_t                              cols) {
      IntMatrix m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
          throw DomainError("IntMatrix: row of wrong length");
        }
        for (std::size_t j = 0; j < cols; ++j) {
          m(i, j) = rows[i][j];
        }
      }
      return m;
    }

    static IntMatrix from_cols(std::vector<std::vector<Integer>> const& cols,
                               std::size_t                              rows) {
      return from_rows(cols, rows).transpose();
    }

    // Elementary operations.
    void swap_rows(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        std::swap((*this)(a, j), (*this)(b, j));
      }
    }

    void swap_cols(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }

    // row dst += k * row src
    void add_row_multiple(std::size_t dst, std::size_t src, Integer const& k) {
      if (k == 0) {
        return;
      }
      for (std::size_t j = 0; j < _cols; ++j) {
        if ((*this)(src, j) != 0) {
          (*this)(dst, j) += k * (*this)(src, j);
        }
      }
    }

    // col dst += k * col src
    void add_col_multiple(std::size_t dst, std::size_t src, Integer const& k) {
      if (k == 0) {
        return;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        if ((*this)(i, src) != 0) {
          (*this)(i, dst) += k * (*this)(i, src);
        }
      }
    }

    void negate_row(std::size_t i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

    void negate_col(std::size_t j) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
      if (a._cols != b._rows) {
        throw DomainError("IntMatrix: dimension mismatch in product");
      }
      IntMatrix out(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          Integer const& aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            if (b(k, j) != 0) {
              out(i, j) += aik * b(k, j);
            }
          }
        }
      }
      return out;
    }

    friend IntMatrix operator+(IntMatrix a, IntMatrix const& b) {
      a.check_same_shape(b);
      for (std::size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] += b._data[i];
      }
      return a;
    }

    friend IntMatrix operator-(IntMatrix a, IntMatrix const& b) {
      a.check_same_shape(b);
      for (std::size_t i = 0; i < a._data.size(); ++i) {
        a._data[i] -= b._data[i];
      }
      return a;
    }

    friend IntMatrix operator*(Integer const& k, IntMatrix a) {
      for (auto& x : a._data) {
        x *= k;
      }
      return a;
    }

    friend bool operator==(IntMatrix const& a, IntMatrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    friend std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
      os << "[";
      for (std::size_t i = 0; i < m._rows; ++i) {
        os << (i == 0 ? "[" : " [");
        for (std::size_t j = 0; j < m._cols; ++j) {
          os << (j == 0 ? "" : ", ") << m(i, j);
        }
        os << "]";
      }
      return os << "]";
    }

   private:
    void check_same_shape(IntMatrix const& b) const {
      if (_rows != b._rows || _cols != b._cols) {
        throw DomainError("IntMatrix: shape mismatch");
      }
    }

    std::size_t          _rows = 0;
    std::size_t          _cols = 0;
    std::vector<Integer> _data;
  };

  namespace detail {

    // Truncating division rounded towards -infinity.
    inline Integer floor_div(Integer const& a, Integer const& b) {
      Integer q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    // Brings the first `ncols` columns of m into row echelon form using only
    // unimodular row operations on all of m. Returns the pivot column of
    // every pivot row; pivots end up positive.
    inline std::vector<std::size_t> row_echelon(IntMatrix&  m,
                                                std::size_t ncols) {
      std::vector<std::size_t> pivots;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        while (true) {
          // smallest nonzero |entry| in column c at or below row r
          std::size_t best = m.rows();
          for (std::size_t i = r; i < m.rows(); ++i) {
            if (m(i, c) != 0 && (best == m.rows() || abs(m(i, c)) < abs(m(best, c)))) {
              best = i;
            }
          }
          if (best == m.rows()) {
            break;
          }
          m.swap_rows(r, best);
          bool clean = true;
          for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) != 0) {
              m.add_row_multiple(i, r, -floor_div(m(i, c), m(r, c)));
              if (m(i, c) != 0) {
                clean = false;
              }
            }
          }
          if (clean) {
            if (m(r, c) < 0) {
              m.negate_row(r);
            }
            pivots.push_back(c);
            ++r;
            break;
          }
        }
      }
      return pivots;
    }

  }  // namespace detail

  inline std::size_t rank(IntMatrix m) {
    return detail::row_echelon(m, m.cols()).size();
  }

  // Hermite normal form of the row lattice: the unique generating set in
  // echelon form with positive pivots and entries above each pivot reduced
  // into [0, pivot). Zero rows are dropped.
  inline IntMatrix hermite_normal_form(IntMatrix m) {
    auto const pivots = detail::row_echelon(m, m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::size_t const c = pivots[r];
      for (std::size_t i = 0; i < r; ++i) {
        m.add_row_multiple(i, r, -detail::floor_div(m(i, c), m(r, c)));
      }
    }
    return m.block(0, 0, pivots.size(), m.cols());
  }

  // Basis (as columns) of the integer kernel {x : A x = 0}, in Hermite normal
  // form. The kernel of an integer matrix is always a saturated sublattice.
  inline IntMatrix integer_kernel(IntMatrix const& a) {
    std::size_t const n = a.cols();
    std::size_t const m = a.rows();
    IntMatrix         aug(n, m + n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        aug(i, j) = a(j, i);
      }
      aug(i, m + i) = 1;
    }
    auto const                        pivots = detail::row_echelon(aug, m);
    std::vector<std::vector<Integer>> basis;
    for (std::size_t i = pivots.size(); i < n; ++i) {
      std::vector<Integer> v(n);
      for (std::size_t j = 0; j < n; ++j) {
        v[j] = aug(i, m + j);
      }
      basis.push_back(std::move(v));
    }
    if (basis.empty()) {
      return IntMatrix(n, 0);
    }
    return hermite_normal_form(IntMatrix::from_rows(basis, n)).transpose();
  }

  // Whether the column spans of a and b coincide as subgroups of Z^rows.
  inline bool same_column_lattice(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows()) {
      throw DomainError("same_column_lattice: ambient dimensions differ");
    }
    return hermite_normal_form(a.transpose())
           == hermite_normal_form(b.transpose());
  }

  // Determinant by fraction-free (Bareiss) elimination.
  inline Integer determinant(IntMatrix m) {
    if (m.rows() != m.cols()) {
      throw DomainError("determinant: matrix is not square");
    }
    std::size_t const n = m.rows();
    Integer           sign = 1;
    Integer           prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t swap = k + 1;
        while (swap < n && m(swap, k) == 0) {
          ++swap;
        }
        if (swap == n) {
          return 0;
        }
        m.swap_rows(k, swap);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
  }

}  // namespace indres
