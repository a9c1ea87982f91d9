#include <catch_amalgamated.hpp>

#include <random>

#include "indres/integer_matrix.hpp"
#include "indres/smith.hpp"

using namespace indres;

namespace {

  IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    IntMatrix                          m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = d(rng);
      }
    }
    return m;
  }

  Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
      Integer t = a % b;
      a         = b;
      b         = t;
    }
    return a;
  }

  // gcd of all k x k minors, by brute force over row and column subsets.
  Integer determinantal_divisor(IntMatrix const& m, std::size_t k) {
    Integer                  g = 0;
    std::vector<std::size_t> rows, cols;
    auto choose = [](std::size_t n, std::size_t k) {
      std::vector<std::vector<std::size_t>> out;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) {
          continue;
        }
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            s.push_back(i);
          }
        }
        out.push_back(s);
      }
      return out;
    };
    for (auto const& rs : choose(m.rows(), k)) {
      for (auto const& cs : choose(m.cols(), k)) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            sub(i, j) = m(rs[i], cs[j]);
          }
        }
        g = gcd(g, determinant(sub));
      }
    }
    return g;
  }

}  // namespace

TEST_CASE("smith normal form of small examples") {
  REQUIRE(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).invariant_factors
          == std::vector<Integer>{1, 6});
  REQUIRE(smith_normal_form(IntMatrix{{-2}, {2}}).invariant_factors == std::vector<Integer>{2});
  REQUIRE(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).invariant_factors.empty());
  REQUIRE(smith_normal_form(IntMatrix(0, 3)).invariant_factors.empty());
  REQUIRE(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).invariant_factors
          == std::vector<Integer>{2, 6, 12});
}

TEST_CASE("smith transforms are unimodular and diagonalize") {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 60; ++it) {
    std::size_t const r = 1 + it % 4;
    std::size_t const c = 1 + (it / 4) % 4;
    IntMatrix const   A = random_matrix(rng, r, c, 6);
    SmithResult const s = smith_normal_form(A, true);
    REQUIRE(s.U.has_value());
    REQUIRE(*s.U * A * *s.V == *s.S);
    REQUIRE(abs(determinant(*s.U)) == 1);
    REQUIRE(abs(determinant(*s.V)) == 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (i != j) {
          REQUIRE((*s.S)(i, j) == 0);
        }
      }
    }
    for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      REQUIRE(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    }
  }
}

TEST_CASE("invariant factors match determinantal divisors") {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 40; ++it) {
    IntMatrix const A    = random_matrix(rng, 3, 4, 5);
    auto const      d    = smith_normal_form(A).invariant_factors;
    Integer         prod = 1;
    REQUIRE(d.size() == rank(A));
    for (std::size_t k = 1; k <= 3; ++k) {
      Integer const dk = determinantal_divisor(A, k);
      if (k <= d.size()) {
        prod *= d[k - 1];
        REQUIRE(dk == prod);
      } else {
        REQUIRE(dk == 0);
      }
    }
  }
}

TEST_CASE("integer kernel") {
  IntMatrix const A{{1, 2, 3}, {2, 4, 6}};
  IntMatrix const K = integer_kernel(A);
  REQUIRE(K.rows() == 3);
  REQUIRE(K.cols() == 2);
  REQUIRE((A * K).is_zero());
  // Saturation: (1,0,0) is not in the kernel but 2*(1,-?,?) cases are.
  REQUIRE(same_column_lattice(K, IntMatrix{{-2, -3}, {1, 0}, {0, 1}}));

  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    IntMatrix const B = random_matrix(rng, 2, 4, 3);
    IntMatrix const N = integer_kernel(B);
    REQUIRE((B * N).is_zero());
    REQUIRE(N.cols() == 4 - rank(B));
    // Every small integer kernel vector is an integer combination of N.
    for (int x = -2; x <= 2; ++x) {
      for (int y = -2; y <= 2; ++y) {
        for (int z = -2; z <= 2; ++z) {
          for (int w = -2; w <= 2; ++w) {
            IntMatrix v{{x}, {y}, {z}, {w}};
            if (!(B * v).is_zero()) {
              continue;
            }
            IntMatrix aug(4, N.cols() + 1);
            aug.add_block(0, 0, N);
            aug.add_block(0, N.cols(), v);
            REQUIRE(same_column_lattice(aug, N));
          }
        }
      }
    }
  }
}

TEST_CASE("hermite normal form and determinant") {
  IntMatrix const H = hermite_normal_form(IntMatrix{{2, 4}, {3, 7}});
  REQUIRE(H == IntMatrix{{1, 1}, {0, 2}});
  REQUIRE(determinant(IntMatrix{{2, 4}, {3, 7}}) == 2);
  REQUIRE(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  REQUIRE(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  REQUIRE(rank(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
}

TEST_CASE("matrix arithmetic") {
  IntMatrix const A{{1, 2}, {3, 4}};
  REQUIRE(A * IntMatrix::identity(2) == A);
  REQUIRE(A.transpose() == IntMatrix{{1, 3}, {2, 4}});
  REQUIRE(A + A == IntMatrix{{2, 4}, {6, 8}});
  REQUIRE((A - A).is_zero());
  REQUIRE_THROWS_AS(A * IntMatrix(3, 1), DomainError);
}
