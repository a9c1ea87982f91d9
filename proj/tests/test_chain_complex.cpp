#include <catch_amalgamated.hpp>

#include "indres/chain_complex.hpp"

using namespace indres;

namespace {

  std::vector<std::string> names(std::size_t n, char const* prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(prefix + std::to_string(i));
    }
    return out;
  }

  // Cellular chains of RP^2: one cell in each degree, boundaries 0 and 2.
  ChainComplex rp2() {
    return ChainComplex({names(1, "v"), names(1, "e"), names(1, "f")},
                        {IntMatrix(0, 1), IntMatrix{{0}}, IntMatrix{{2}}});
  }

  // Circle with two vertices and two edges.
  ChainComplex circle() {
    return ChainComplex({names(2, "v"), names(2, "e")},
                        {IntMatrix(0, 2), IntMatrix{{-1, 1}, {1, -1}}});
  }

}  // namespace

TEST_CASE("homology of RP^2") {
  auto const h = homology_all(rp2(), 3);
  REQUIRE(h[0].to_string() == "ℤ");
  REQUIRE(h[1].to_string() == "ℤ/2");
  REQUIRE(h[2].is_zero());
  REQUIRE(h[3].is_zero());
  auto const c = cohomology_all(rp2(), 3);
  REQUIRE(c[0].to_string() == "ℤ");
  REQUIRE(c[1].is_zero());
  REQUIRE(c[2].to_string() == "ℤ/2");
}

TEST_CASE("homology of a circle") {
  auto const h = homology_all(circle(), 2);
  REQUIRE(h[0].free_rank == 1);
  REQUIRE(h[1].free_rank == 1);
  REQUIRE(h[0].torsion.empty());
  REQUIRE(h[2].is_zero());
  REQUIRE(circle().euler_characteristic() == 0);
}

TEST_CASE("homology group rendering") {
  HomologyGroup h;
  REQUIRE(h.to_string() == "0");
  h.free_rank = 2;
  h.torsion   = {2, 6};
  REQUIRE(h.to_string() == "ℤ^2 ⊕ ℤ/2 ⊕ ℤ/6");
}

TEST_CASE("shape and square-zero checks") {
  REQUIRE_THROWS_AS(ChainComplex({names(1, "v"), names(1, "e")}, {IntMatrix(0, 1), IntMatrix{{1, 1}}}),
                    DomainError);
  ChainComplex const bad({names(1, "a"), names(1, "b"), names(1, "c")},
                         {IntMatrix(0, 1), IntMatrix{{1}}, IntMatrix{{1}}});
  REQUIRE(bad.square_zero_violation() == std::optional<std::size_t>{2});
  REQUIRE_FALSE(bad.is_complex());
  REQUIRE(rp2().is_complex());
}

TEST_CASE("mapping cone of the identity is acyclic") {
  ChainComplex const X = rp2();
  std::vector<IntMatrix> id;
  for (std::size_t k = 0; k < X.length(); ++k) {
    id.push_back(IntMatrix::identity(X.rank(k)));
  }
  ChainComplex const cone = mapping_cone(X, X, id);
  REQUIRE(cone.is_complex());
  for (auto const& h : homology_all(cone, cone.length())) {
    REQUIRE(h.is_zero());
  }
}

TEST_CASE("mapping cone of multiplication by two detects the failure") {
  ChainComplex const X({names(1, "v")}, {IntMatrix(0, 1)});
  ChainComplex const cone = mapping_cone(X, X, {IntMatrix{{2}}});
  auto const         h    = homology_all(cone, 2);
  REQUIRE(h[0].to_string() == "ℤ/2");
}
