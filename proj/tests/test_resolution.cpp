#include <catch_amalgamated.hpp>

#include "indres/random_models.hpp"
#include "indres/resolution.hpp"

using namespace indres;

namespace {

  Element at(SemilatticePtr const& E, char const* label) {
    auto e = E->find(label);
    REQUIRE(e.has_value());
    return *e;
  }

  // Boolean lattice on {1,2} with {1,2} covered by its atoms.
  CoverSystem boolean2() {
    auto const  E = subset_semilattice(2);
    CoverSystem R(E);
    R.add(at(E, "{1,2}"), {at(E, "{1}"), at(E, "{2}")});
    return R;
  }

  // Boolean lattice on {1,2,3}: the top covered by the atoms, plus the
  // covers that (i) forces on the two-element sets.
  CoverSystem boolean3() {
    auto const  E = subset_semilattice(3);
    CoverSystem R(E);
    R.add(at(E, "{1,2,3}"), {at(E, "{1}"), at(E, "{2}"), at(E, "{3}")});
    R.add(at(E, "{1,2}"), {at(E, "{1}"), at(E, "{2}")});
    R.add(at(E, "{1,3}"), {at(E, "{1}"), at(E, "{3}")});
    R.add(at(E, "{2,3}"), {at(E, "{2}"), at(E, "{3}")});
    return R;
  }

}  // namespace

TEST_CASE("finite covers") {
  auto const E = subset_semilattice(2);
  Element const a = at(E, "{1}"), b = at(E, "{2}"), t = at(E, "{1,2}");
  REQUIRE(is_finite_cover(*E, t, {a, b}));
  REQUIRE_FALSE(is_finite_cover(*E, t, {a}));
  REQUIRE(is_finite_cover(*E, t, {t}));
  REQUIRE_FALSE(is_finite_cover(*E, a, {b}));
  REQUIRE_THROWS_AS(is_finite_cover(*E, E->zero(), {a}), DomainError);
  REQUIRE_THROWS_AS(is_finite_cover(*E, t, {}), DomainError);
}

TEST_CASE("cover systems normalize and deduplicate") {
  auto const  E = subset_semilattice(2);
  CoverSystem R(E);
  Element const a = at(E, "{1}"), b = at(E, "{2}"), t = at(E, "{1,2}");
  REQUIRE(R.add(t, {b, a, a}) == 0);
  REQUIRE(R.add(t, {a, b}) == 0);
  REQUIRE(R.covers(t).size() == 1);
  REQUIRE(R.covers(t).front() == MemberSet{a, b});
  REQUIRE(R.sup_size() == 1);
  REQUIRE(times(*E, a, {a, b}) == MemberSet{a});
}

TEST_CASE("boolean 2: one derived element, length 1") {
  CoverSystem const     R     = boolean2();
  ResolutionTower const tower = build_tower(R, 8);
  REQUIRE(check_conditions(R).all());
  REQUIRE(tower.levels.size() == 3);
  REQUIRE(tower.length() == std::optional<std::size_t>{1});
  TowerLevel const& l1 = tower.levels[1];
  REQUIRE(l1.E->nonzero().size() == 1);
  Element const d = l1.E->nonzero().front();
  REQUIRE(l1.E->label(d) == "{1,2}[1]");
  REQUIRE(l1.expansion[d].to_string() == "-{1} - {2} + {1,2}");
  REQUIRE(l1.pi == IntMatrix{{-1}, {-1}, {1}});
  for (std::size_t k = 0; k < tower.levels.size(); ++k) {
    auto const x = verify_exactness(tower, k);
    REQUIRE(x.checked);
    REQUIRE(x.exact);
  }
}

TEST_CASE("boolean 3 tower") {
  CoverSystem const R = boolean3();
  REQUIRE(check_conditions(R).all());
  ResolutionTower const tower = build_tower(R, 8);
  REQUIRE(tower.length().has_value());
  REQUIRE(*tower.length() <= R.sup_size());
  for (std::size_t k = 0; k < tower.levels.size(); ++k) {
    REQUIRE(verify_exactness(tower, k).exact);
  }
}

TEST_CASE("condition (i) witness") {
  auto const  E = subset_semilattice(3);
  CoverSystem R(E);
  R.add(at(E, "{1,2,3}"), {at(E, "{1}"), at(E, "{2}"), at(E, "{3}")});
  ConditionReport const c = check_conditions(R);
  REQUIRE(c.covers.pass);
  REQUIRE_FALSE(c.cond_i.pass);
  REQUIRE(c.first_failure().rfind("(i) fails:", 0) == 0);
}

TEST_CASE("self covers fail (ii)") {
  auto const  E = subset_semilattice(1);
  CoverSystem R(E);
  R.add(at(E, "{1}"), {at(E, "{1}")});
  ConditionReport const c = check_conditions(R);
  REQUIRE_FALSE(c.cond_ii.pass);
  REQUIRE(c.first_failure().rfind("(ii) fails:", 0) == 0);
  REQUIRE_THROWS_AS(derive(R, GroupAction::trivial(E)), DomainError);
  DerivedLevel const level = derive(R, GroupAction::trivial(E), DeriveOptions{false});
  REQUIRE(level.E->nonzero().empty());
  REQUIRE_FALSE(level.log.empty());
}

TEST_CASE("condition (iii) needs invariant covers") {
  auto const    E = subset_semilattice(2);
  Element const a = at(E, "{1}"), b = at(E, "{2}"), t = at(E, "{1,2}");
  std::vector<Element> id{0, 1, 2, 3};
  std::vector<Element> swap(4);
  swap[0] = 0;
  swap[a] = b;
  swap[b] = a;
  swap[t] = t;
  GroupAction const G = GroupAction::from_permutations(E, {"1", "s"}, {id, swap});
  CoverSystem R = boolean2();
  REQUIRE(check_conditions(R, G).all());
  // A cover of {1,2} whose image under the swap of 2 and 3 is missing.
  auto const  E3 = subset_semilattice(3);
  CoverSystem R3(E3);
  Element const x = at(E3, "{1,2}");
  R3.add(x, {at(E3, "{1}"), at(E3, "{2}")});
  std::vector<Element> id3(8), sw3(8);
  for (Element e = 0; e < 8; ++e) {
    id3[e] = e;
    std::size_t const m = e;
    sw3[e] = (m & 1) | ((m & 2) << 1) | ((m & 4) >> 1);
  }
  GroupAction const G3 = GroupAction::from_permutations(E3, {"1", "s"}, {id3, sw3});
  ConditionReport const c = check_conditions(R3, G3);
  REQUIRE_FALSE(c.cond_iii.pass);
}

TEST_CASE("kernel ideal spans the integer kernel") {
  // phi: subsets of {1,2,3} -> Z^2, points 1 and 2 only.
  auto const            E = subset_semilattice(3);
  std::vector<PointSet> phi(E->size());
  for (Element e = 0; e < E->size(); ++e) {
    phi[e] = static_cast<PointSet>(e & 3);
  }
  auto const      ideal = kernel_ideal(E, phi);
  IntMatrix const A     = phi_matrix(*E, phi, 2);
  IntMatrix const K     = integer_kernel(A);
  REQUIRE((A * columns_over(*E, ideal)).is_zero());
  REQUIRE(same_column_lattice(columns_over(*E, ideal), K));
  REQUIRE(K.cols() == 7 - rank(A));

  std::vector<PointSet> bad(E->size(), 1);
  bad[E->zero()] = 0;
  bad[1]         = 0;
  REQUIRE_THROWS_AS(kernel_ideal(E, bad), DomainError);
}

TEST_CASE("random instances: exactness, length and stabilizers") {
  Rng rng(5);
  for (int it = 0; it < 25; ++it) {
    RandomInstance const inst = random_instance(rng);
    REQUIRE(check_conditions(inst.covers, inst.action).all());
    ResolutionTower const tower = build_tower(inst.covers, inst.action, 8);
    REQUIRE(tower.length().has_value());
    REQUIRE(*tower.length() <= inst.covers.sup_size());
    for (std::size_t k = 0; k < tower.levels.size(); ++k) {
      auto const x = verify_exactness(tower, k);
      REQUIRE(x.checked);
      REQUIRE(x.exact);
    }
    for (std::size_t k = 1; k < tower.levels.size(); ++k) {
      REQUIRE(check_conditions(tower.levels[k].covers, tower.levels[k].action).all());
    }
    REQUIRE(stabilizer_check(tower).holds);
  }
}

TEST_CASE("random instances are deterministic per seed") {
  Rng a(9), b(9);
  for (int it = 0; it < 5; ++it) {
    auto const x = random_instance(a);
    auto const y = random_instance(b);
    REQUIRE(x.covers == y.covers);
    REQUIRE(x.action.tau() == y.action.tau());
  }
}
