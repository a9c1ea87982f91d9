#include <catch_amalgamated.hpp>

#include "indres/io.hpp"
#include "indres/random_models.hpp"

using namespace indres;

namespace {

  std::string data(char const* name) {
    return std::string(INDRES_DATA_DIR) + "/" + name;
  }

  std::string parse_error(Json const& j) {
    try {
      parse_semilattice(j);
    } catch (ParseError const& e) {
      return e.what();
    }
    return "";
  }

}  // namespace

TEST_CASE("semilattice files round-trip") {
  Rng rng(1);
  for (int it = 0; it < 10; ++it) {
    RandomInstance const inst = random_instance(rng);
    FiniteSemilattice const& E = *inst.covers.semilattice();
    Json const j = semilattice_json(E, &inst.action, &inst.covers);
    SemilatticeInstance const back = parse_semilattice(Json::parse(j.dump()));
    REQUIRE(*back.E == E);
    REQUIRE(back.action.tau() == inst.action.tau());
    REQUIRE(back.covers.has_value());
    REQUIRE(semilattice_json(*back.E, &back.action, &*back.covers) == j);
  }
}

TEST_CASE("omitted products are filled in") {
  Json const j = Json::parse(R"({
    "elements": ["0", "x", "y"],
    "product": [["x", "y", "x"]]
  })");
  SemilatticeInstance const inst = parse_semilattice(j);
  REQUIRE(inst.E->leq(*inst.E->find("x"), *inst.E->find("y")));
  REQUIRE(inst.action.order() == 1);
  REQUIRE_FALSE(inst.covers.has_value());
}

TEST_CASE("parse errors carry locations") {
  REQUIRE(parse_error(Json::parse(R"({"elements": ["a"], "product": []})"))
              .find("$.elements") != std::string::npos);
  REQUIRE(parse_error(Json::parse(R"({"elements": ["0", "a", "b"], "product": []})"))
              .find("missing product of (a, b)") != std::string::npos);
  REQUIRE(parse_error(Json::parse(R"({"elements": ["0", "a"], "product": [["a", "q", "a"]]})"))
              .find("$.product[0][1]: unknown element \"q\"") != std::string::npos);
  REQUIRE(parse_error(Json::parse(R"({"elements": ["0", "a"], "product": [["a", "a"]]})"))
              .find("$.product[0]: expected 3 entries") != std::string::npos);
  REQUIRE(parse_error(Json::parse(R"({"elements": ["0", "a", "b"],
      "product": [["a", "b", "a"]], "covers": {"b": [["c"]]}})"))
              .find("$.covers.b[0][0]") != std::string::npos);
  REQUIRE_THROWS_AS(read_json(data("does-not-exist.json")), ParseError);
}

TEST_CASE("presentations round-trip and must be total") {
  SigmaMap const s = SigmaMap::flip({"a", "b"});
  Json const     j = presentation_json(s);
  REQUIRE(presentation_json(parse_presentation(Json::parse(j.dump(2)))).dump(2) == j.dump(2));
  Json partial = j;
  partial["sigma"].erase(partial["sigma"].begin());
  REQUIRE_THROWS_WITH(parse_presentation(partial), Catch::Matchers::ContainsSubstring("missing pair (a,a)"));
  Json twice = j;
  twice["sigma"].push_back(j["sigma"][0]);
  REQUIRE_THROWS_WITH(parse_presentation(twice), Catch::Matchers::ContainsSubstring("listed twice"));
}

TEST_CASE("sample data files parse") {
  SigmaMap const flip = parse_presentation(read_json(data("flip.json")));
  REQUIRE(validate_sigma(flip).all());
  SigmaMap const bad = parse_presentation(read_json(data("bad-diagonal.json")));
  REQUIRE(validate_sigma(bad).first_failure() == "(*) fails at a");

  SemilatticeInstance const grid = parse_semilattice(read_json(data("grid.json")));
  REQUIRE(grid.action.order() == 2);
  REQUIRE(check_conditions(*grid.covers, grid.action).all());

  SemilatticeInstance const b2 = parse_semilattice(read_json(data("boolean2.json")));
  CoverSystem const covers = parse_covers(read_json(data("boolean2-covers.json")), b2.E, "covers");
  REQUIRE(covers.sup_size() == 1);

  OrbitModel const m = parse_orbit_model(read_json(data("orbit-n2.json")));
  REQUIRE(m.n() == 2);
  REQUIRE(m.sharp() == SharpTable::trivial(2));
}

TEST_CASE("orbit model files validate shape") {
  Json j = read_json(data("orbit-n2.json"));
  j["M"].erase(j["M"].begin());
  REQUIRE_THROWS_WITH(parse_orbit_model(j), Catch::Matchers::ContainsSubstring("$.M"));
}

TEST_CASE("reports are deterministic and round-trip") {
  SemilatticeInstance const grid  = parse_semilattice(read_json(data("grid.json")));
  ResolutionTower const     a     = build_tower(*grid.covers, grid.action, 8);
  ResolutionTower const     b     = build_tower(*grid.covers, grid.action, 8);
  std::string const         dumpA = tower_json(a).dump(2);
  REQUIRE(dumpA == tower_json(b).dump(2));
  REQUIRE(Json::parse(dumpA).dump(2) == dumpA);
  REQUIRE(tower_json(a)["length"] == 2);
}

TEST_CASE("large integers are written as strings") {
  IntMatrix m(1, 2);
  m(0, 0) = 7;
  m(0, 1) = Integer("123456789012345678901234567890");
  Json const j = matrix_json(m);
  REQUIRE(j["data"][0] == 7);
  REQUIRE(j["data"][1] == "123456789012345678901234567890");
}
