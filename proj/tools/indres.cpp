// indres: command-line front end.
//
//   indres check <file> [covers]
//   indres homology <file> [--cross-check-C] [--cohomology]
//   indres census --size N
//   indres resolve <semilattice> [covers] --depth D
//   indres verify [instance] [--seed S] [--count N]
//
// Exit status: 0 pass, 1 violation found, 2 malformed input or inconclusive
// at the given bounds.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indres/indres.hpp"

namespace {

  using namespace indres;

  enum Status : int { pass = 0, violation = 1, inconclusive = 2 };

  struct Config {
    std::string   format       = "text";
    std::size_t   length_bound = 4;
    std::size_t   max_steps    = 0;
    std::size_t   depth        = 8;
    std::uint64_t seed         = 0;
    std::size_t   count        = 50;
    std::size_t   size         = 2;
    bool          cross_check  = false;
    bool          cohomology   = false;
    std::string   input;
    std::string   second;
  };

  // Collects a text rendering and a JSON mirror; one of them is printed.
  struct Report {
    std::ostringstream text;
    Json               json = Json::object();
    int                status = pass;

    void fail(std::string const& witness) {
      text << "violation: " << witness << "\n";
      json["violations"].push_back(witness);
      status = std::max(status, static_cast<int>(violation));
    }

    void undecided(std::string const& why) {
      text << "inconclusive: " << why << "\n";
      json["inconclusive"].push_back(why);
      if (status == pass) {
        status = inconclusive;
      }
    }

    int emit(Config const& cfg) {
      json["status"] = status == pass ? "pass" : status == violation ? "violation" : "inconclusive";
      if (cfg.format == "json") {
        std::cout << json.dump(2) << "\n";
      } else {
        std::cout << text.str();
      }
      return status;
    }
  };

  enum class Kind { presentation, orbit_model, semilattice, covers };

  Kind kind_of(Json const& j, std::string const& path) {
    if (j.is_object()) {
      if (j.contains("alphabet")) {
        return Kind::presentation;
      }
      if (j.contains("orbits")) {
        return Kind::orbit_model;
      }
      if (j.contains("elements")) {
        return Kind::semilattice;
      }
      if (j.contains("covers")) {
        return Kind::covers;
      }
    }
    throw ParseError(path + ": not a presentation, orbit model or semilattice file");
  }

  std::string sigma_lines(SigmaMap const& s) {
    std::string out;
    for (Letter a = 0; a < static_cast<Letter>(s.size()); ++a) {
      for (Letter b = 0; b < static_cast<Letter>(s.size()); ++b) {
        auto const [c, d] = s.at(a, b);
        out += "  sigma(" + s.label(a) + "," + s.label(b) + ") = (" + s.label(c) + ","
               + s.label(d) + ")\n";
      }
    }
    return out;
  }

  void render_homology(Report& r, std::vector<HomologyGroup> const& hs, std::string const& key,
                       bool upper, std::string const& suffix = "") {
    for (std::size_t k = 0; k < hs.size(); ++k) {
      r.text << "H" << (upper ? "^" : "_") << k << suffix << " ≅ " << hs[k].to_string() << "\n";
    }
    r.json[key] = homology_json(hs);
  }

  void render_sharp(Report& r, SharpTable const& t) {
    r.text << "sharp table:";
    for (int i = 1; i <= t.n(); ++i) {
      for (int j = 1; j <= t.n(); ++j) {
        if (i != j) {
          r.text << " " << i << "#" << j << "=" << t.at(i, j);
        }
      }
    }
    r.text << "\n";
    r.json["sharp"] = sharp_json(t);
  }

  // A semilattice file plus, optionally, a separate covers file.
  SemilatticeInstance load_instance(Config const& cfg, Json const& j) {
    SemilatticeInstance inst = parse_semilattice(j, cfg.input);
    if (!cfg.second.empty()) {
      inst.covers = parse_covers(read_json(cfg.second), inst.E, cfg.second);
    }
    if (!inst.covers) {
      throw ParseError(cfg.input + ": no covers given");
    }
    return inst;
  }

  // (*)-(****) then (a)(b)(c); false when a failure was reported.
  bool check_sigma(Report& r, SigmaMap const& s, Config const& cfg) {
    SigmaReport const v = validate_sigma(s);
    r.json["sigma_conditions"] = sigma_report_json(v);
    if (!v.all()) {
      r.fail(v.first_failure());
      return false;
    }
    r.text << "sigma conditions (*) (**) (***) (****): hold\n";
    AbcReport const abc = check_abc(s, cfg.length_bound, cfg.max_steps);
    r.json["abc"]       = abc_json(abc);
    for (auto const* c : {&abc.a, &abc.b, &abc.c}) {
      if (!c->pass) {
        r.fail(c->witness);
      }
    }
    if (abc.inconclusive) {
      r.undecided("right reversing exceeded the step bound below length "
                  + std::to_string(cfg.length_bound));
    }
    if (abc.all()) {
      r.text << "(a) (b) (c): hold up to length " << cfg.length_bound << "\n";
    }
    return abc.all();
  }

  void render_conditions(Report& r, ConditionReport const& c) {
    r.json["conditions"] = conditions_json(c);
    if (c.all()) {
      r.text << "covers and conditions (i) (ii) (iii): hold\n";
    } else {
      r.fail(c.first_failure());
    }
  }

  int run_check(Config const& cfg) {
    Report     r;
    Json const j = read_json(cfg.input);
    switch (kind_of(j, cfg.input)) {
      case Kind::presentation: {
        SigmaMap const s = parse_presentation(j, cfg.input);
        r.json["kind"]   = "presentation";
        r.text << "presentation on " << s.size() << " generators\n";
        if (check_sigma(r, s, cfg)) {
          render_sharp(r, sharp_from_lcm(s, cfg.max_steps));
        }
        break;
      }
      case Kind::orbit_model: {
        OrbitModel const m = parse_orbit_model(j, cfg.input);
        r.json["kind"]     = "orbit_model";
        r.text << "orbit model with n = " << m.n() << ", " << m.orbit_count() << " orbits\n";
        if (auto w = m.sharp().row_injectivity_witness()) {
          r.fail("sharp table not injective in row " + std::to_string((*w)[0]));
        }
        if (auto w = m.sharp_order_witness()) {
          r.fail(*w);
        }
        if (auto w = m.factorization_witness()) {
          r.fail(*w);
        }
        if (r.status == pass) {
          r.text << "sharp table and M factorization: hold\n";
        }
        break;
      }
      case Kind::semilattice: {
        SemilatticeInstance const inst = load_instance(cfg, j);
        r.json["kind"]                 = "semilattice";
        r.text << "semilattice with " << inst.E->size() << " elements, group of order "
               << inst.action.order() << "\n";
        render_conditions(r, check_conditions(*inst.covers, inst.action));
        break;
      }
      case Kind::covers:
        throw ParseError(cfg.input + ": a covers file needs its semilattice file first");
    }
    return r.emit(cfg);
  }

  int run_homology(Config const& cfg) {
    Report     r;
    Json const j = read_json(cfg.input);
    Kind const kind = kind_of(j, cfg.input);
    std::optional<OrbitModel> model;
    if (kind == Kind::presentation) {
      SigmaMap const s = parse_presentation(j, cfg.input);
      r.json["kind"]   = "presentation";
      if (!check_sigma(r, s, cfg)) {
        return r.emit(cfg);
      }
      model.emplace(OrbitModel::single_orbit(sharp_from_lcm(s, cfg.max_steps)));
    } else if (kind == Kind::orbit_model) {
      r.json["kind"] = "orbit_model";
      model.emplace(parse_orbit_model(j, cfg.input));
      if (auto w = model->factorization_witness()) {
        r.fail(*w);
        return r.emit(cfg);
      }
    } else {
      throw ParseError(cfg.input + ": homology needs a presentation or orbit model file");
    }
    render_sharp(r, model->sharp());
    ChainComplex const ct  = build_Ctilde(*model);
    std::size_t const  top = static_cast<std::size_t>(model->n()) + 1;
    if (auto k = ct.square_zero_violation()) {
      r.fail("C~ is not a complex in degree " + std::to_string(*k));
      return r.emit(cfg);
    }
    r.json["complex"] = complex_json(ct);
    render_homology(r, homology_all(ct, top), "homology", false);
    if (cfg.cohomology) {
      render_homology(r, cohomology_all(ct, top), "cohomology", true);
    }
    if (cfg.cross_check) {
      HomologyComparison const h = compare_homology(*model);
      render_homology(r, h.h_C, "homology_C", false, "(C)");
      r.json["cross_check"] = {{"groups_equal", h.groups_equal},
                               {"chain_map", h.chain_map},
                               {"quasi_isomorphism", h.quasi_isomorphism}};
      r.text << "C and C~ homology agree: " << (h.groups_equal ? "yes" : "no") << "\n"
             << "f is a chain map: " << (h.chain_map ? "yes" : "no") << "\n"
             << "f is a quasi-isomorphism: " << (h.quasi_isomorphism ? "yes" : "no") << "\n";
      if (!h.chain_map) {
        r.fail("f is not a chain map");
      }
      bool const expected = model->n() <= 2
                            || (model->n() == 3 && model->sharp() == SharpTable::trivial(3));
      if (expected && !h.groups_equal) {
        r.fail("H(C) and H(C~) differ");
      }
    }
    return r.emit(cfg);
  }

  int run_census(Config const& cfg) {
    Report r;
    if (cfg.size < 1 || cfg.size > 4) {
      std::cerr << "census: --size must be in 1..4\n";
      return inconclusive;
    }
    CensusReport const c = census(cfg.size, true);
    r.json["size"]       = c.size;
    r.json["candidates"] = c.candidates;
    r.json["raw_valid"]  = c.raw_valid;
    r.text << "|Sigma| = " << c.size << ": " << c.candidates << " candidates with (*) (**), "
           << c.raw_valid << " valid tables (raw)\n"
           << c.classes.size() << " valid presentations (canonical)\n";
    Json classes = Json::array();
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
      CensusClass const& k = c.classes[i];
      r.text << "[" << i + 1 << "] " << k.raw_members << " raw tables\n"
             << sigma_lines(k.representative);
      for (std::size_t d = 0; d < k.homology.size(); ++d) {
        r.text << "  H_" << d << " ≅ " << k.homology[d].to_string() << "\n";
      }
      classes.push_back({{"presentation", presentation_json(k.representative)},
                         {"raw_members", k.raw_members},
                         {"homology", homology_json(k.homology)}});
    }
    r.json["classes"]    = std::move(classes);
    r.json["signatures"] = c.signatures;
    r.text << c.signatures.size() << " distinct homology signatures\n";
    return r.emit(cfg);
  }

  void render_tower(Report& r, ResolutionTower const& tower) {
    for (std::size_t k = 0; k < tower.levels.size(); ++k) {
      TowerLevel const&        level = tower.levels[k];
      FiniteSemilattice const& E     = *level.E;
      r.text << "level " << k << ": " << E.nonzero().size() << " nonzero elements\n";
      for (Element e : E.nonzero()) {
        r.text << "  " << E.label(e);
        if (k > 0) {
          r.text << " = " << level.expansion[e].to_string();
        }
        r.text << "\n";
        for (auto const& cover : level.covers.covers(e)) {
          r.text << "    cover {";
          for (std::size_t i = 0; i < cover.size(); ++i) {
            r.text << (i ? ", " : "") << E.label(cover[i]);
          }
          r.text << "}\n";
        }
      }
    }
    for (auto const& line : tower.log) {
      r.text << "note: " << line << "\n";
    }
    if (auto len = tower.length()) {
      r.text << "length " << *len << "\n";
    }
    r.json["tower"] = tower_json(tower);
  }

  int run_resolve(Config const& cfg) {
    Report                    r;
    Json const                j    = read_json(cfg.input);
    SemilatticeInstance const inst = load_instance(cfg, j);
    ConditionReport const     cond = check_conditions(*inst.covers, inst.action);
    render_conditions(r, cond);
    if (!cond.all()) {
      return r.emit(cfg);
    }
    ResolutionTower const tower = build_tower(*inst.covers, inst.action, cfg.depth);
    render_tower(r, tower);
    if (tower.truncated) {
      r.undecided("tower not trivial by depth " + std::to_string(cfg.depth));
    }
    return r.emit(cfg);
  }

  void render_suite(Report& r, SuiteResult const& s) {
    r.text << s.name << ": " << s.runs << " runs, " << s.violations.size() << " violations\n";
    r.json["suites"].push_back({{"name", s.name}, {"runs", s.runs}, {"violations", s.violations}});
    for (auto const& w : s.violations) {
      r.fail(s.name + ": " + w);
    }
  }

  int run_verify(Config const& cfg) {
    Report r;
    if (cfg.input.empty()) {
      r.json["seed"] = cfg.seed;
      r.text << "seed " << cfg.seed << "\n";
      render_suite(r, orbit_model_suite(cfg.seed, cfg.count));
      render_suite(r, resolution_suite(cfg.seed, cfg.count, cfg.depth));
      return r.emit(cfg);
    }
    Json const j = read_json(cfg.input);
    switch (kind_of(j, cfg.input)) {
      case Kind::presentation: {
        SigmaMap const           s = parse_presentation(j, cfg.input);
        PresentationChecks const p = check_presentation(s, cfg.length_bound, cfg.max_steps);
        for (auto const& w : p.violations) {
          r.fail(w);
        }
        if (p.inconclusive) {
          r.undecided("right reversing exceeded the step bound");
        }
        break;
      }
      case Kind::orbit_model:
        for (auto const& w : check_orbit_model(parse_orbit_model(j, cfg.input))) {
          r.fail(w);
        }
        break;
      case Kind::semilattice: {
        SemilatticeInstance const inst = load_instance(cfg, j);
        for (auto const& w : check_tower(*inst.covers, inst.action, cfg.depth)) {
          if (w.rfind("tower truncated", 0) == 0) {
            r.undecided(w);
          } else {
            r.fail(w);
          }
        }
        break;
      }
      case Kind::covers:
        throw ParseError(cfg.input + ": a covers file needs its semilattice file first");
    }
    if (r.status == pass) {
      r.text << "all invariants hold\n";
    }
    return r.emit(cfg);
  }

}  // namespace

int main(int argc, char** argv) {
  Config   cfg;
  CLI::App app{"Independent resolutions, orbit complexes and quadratic presentations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--length-bound", cfg.length_bound, "Word length bound for (a)(b)(c)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-steps", cfg.max_steps, "Reversing step bound (0: automatic)");
  app.add_option("--seed", cfg.seed, "Seed for random suites");

  auto* check = app.add_subcommand("check", "Validate a presentation, orbit model or cover system");
  check->add_option("file", cfg.input)->required()->check(CLI::ExistingFile);
  check->add_option("covers", cfg.second)->check(CLI::ExistingFile);

  auto* homology = app.add_subcommand("homology", "Homology of a presentation or orbit model");
  homology->add_option("file", cfg.input)->required()->check(CLI::ExistingFile);
  homology->add_flag("--cross-check-C", cfg.cross_check, "Also compute H(C) and compare");
  homology->add_flag("--cohomology", cfg.cohomology, "Also compute cohomology");

  auto* census_cmd = app.add_subcommand("census", "Enumerate valid sigma up to relabelling");
  census_cmd->add_option("--size", cfg.size, "Alphabet size")->required();

  auto* resolve = app.add_subcommand("resolve", "Build the resolution tower");
  resolve->add_option("semilattice", cfg.input)->required()->check(CLI::ExistingFile);
  resolve->add_option("covers", cfg.second)->check(CLI::ExistingFile);
  resolve->add_option("--depth", cfg.depth, "Maximum tower depth")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("instance", cfg.input)->check(CLI::ExistingFile);
  verify->add_option("covers", cfg.second)->check(CLI::ExistingFile);
  verify->add_option("--count", cfg.count, "Random instances per suite")->check(CLI::PositiveNumber);
  verify->add_option("--depth", cfg.depth, "Maximum tower depth")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return inconclusive;
  }

  try {
    if (check->parsed()) {
      return run_check(cfg);
    }
    if (homology->parsed()) {
      return run_homology(cfg);
    }
    if (census_cmd->parsed()) {
      return run_census(cfg);
    }
    if (resolve->parsed()) {
      return run_resolve(cfg);
    }
    return run_verify(cfg);
  } catch (ParseError const& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return inconclusive;
  } catch (DomainError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inconclusive;
  }
}
