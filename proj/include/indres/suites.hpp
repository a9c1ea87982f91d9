#pragma once

// Invariant suites over single instances and over seeded random families.
// Each check returns the list of violations found (empty when all hold).

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "indres/orbit_model.hpp"
#include "indres/presentation.hpp"
#include "indres/random_models.hpp"
#include "indres/resolution.hpp"

namespace indres {

  using Violations = std::vector<std::string>;

  // C and C~ square to zero, f is a chain map, and (for n <= 2, or n = 3
  // with i#j = j) the homologies agree.
  inline Violations check_orbit_model(OrbitModel const& model) {
    Violations out;
    if (auto w = model.factorization_witness()) {
      out.push_back("factorization: " + *w);
    }
    ChainComplex const C  = build_C(model);
    ChainComplex const Ct = build_Ctilde(model);
    if (auto k = C.square_zero_violation()) {
      out.push_back("C: boundary(" + std::to_string(*k - 1) + ") * boundary("
                    + std::to_string(*k) + ") != 0");
    }
    if (auto k = Ct.square_zero_violation()) {
      out.push_back("C~: boundary(" + std::to_string(*k - 1) + ") * boundary("
                    + std::to_string(*k) + ") != 0");
    }
    if (auto k = chain_map_violation(Ct, C, chain_map_f(model))) {
      out.push_back("f is not a chain map in degree " + std::to_string(*k));
    }
    bool const comparable = model.n() <= 2
                            || (model.n() == 3 && model.sharp() == SharpTable::trivial(3));
    if (comparable) {
      HomologyComparison const h = compare_homology(model);
      if (!h.groups_equal) {
        out.push_back("H(C) = " + signature(h.h_C) + " but H(C~) = " + signature(h.h_Ctilde));
      }
    }
    return out;
  }

  // Conditions, exactness at every level, length <= sup, stabilizer
  // containment and the fixed-point restatement on every cover.
  inline Violations check_tower(CoverSystem const& R,
                                GroupAction const& action,
                                std::size_t        depth) {
    Violations            out;
    ConditionReport const cond = check_conditions(R, action);
    if (!cond.all()) {
      out.push_back(cond.first_failure());
      return out;
    }
    ResolutionTower const tower = build_tower(R, action, depth);
    if (tower.truncated) {
      out.push_back("tower truncated at depth " + std::to_string(depth));
    }
    for (std::size_t k = 0; k < tower.levels.size(); ++k) {
      ExactnessReport const x = verify_exactness(tower, k);
      if (x.checked && !x.exact) {
        out.push_back("not exact at level " + std::to_string(k) + ": " + x.detail);
      }
    }
    if (auto len = tower.length(); len && *len > R.sup_size()) {
      out.push_back("length " + std::to_string(*len) + " exceeds sup |R(e)| = "
                    + std::to_string(R.sup_size()));
    }
    for (auto const& w : stabilizer_check(tower).witnesses) {
      out.push_back("stabilizer: " + w);
    }
    FiniteSemilattice const& E = *R.semilattice();
    for (Element e : E.nonzero()) {
      for (auto const& cover : R.covers(e)) {
        std::vector<Element> strict;
        for (Element f : cover) {
          if (f != e) {
            strict.push_back(f);
          }
        }
        if (auto g = fix_maximal_idem_violation(action, e, strict)) {
          out.push_back("fixed point: " + action.label(*g) + " fixes " + E.label(e)
                        + " - join of a cover but moves " + E.label(e));
        }
      }
    }
    return out;
  }

  struct PresentationChecks {
    Violations violations;
    bool       inconclusive = false;
  };

  // sigma valid, (a)(b)(c) up to the bound, lcm table equals sigma_l,
  // vanishing above |Sigma|, and C ~ C~ for |Sigma| <= 2.
  inline PresentationChecks check_presentation(SigmaMap const& s,
                                               std::size_t     length_bound,
                                               std::size_t     max_steps) {
    PresentationChecks out;
    SigmaReport const  v = validate_sigma(s);
    if (!v.all()) {
      out.violations.push_back(v.first_failure());
      return out;
    }
    AbcReport const abc = check_abc(s, length_bound, max_steps);
    for (auto const* c : {&abc.a, &abc.b, &abc.c}) {
      if (!c->pass) {
        out.violations.push_back(c->witness);
      }
    }
    if (abc.inconclusive) {
      out.inconclusive = true;
    }
    if (!out.violations.empty() || out.inconclusive) {
      return out;
    }
    try {
      OrbitModel const model = OrbitModel::single_orbit(sharp_from_lcm(s, max_steps));
      for (auto const& w : check_orbit_model(model)) {
        out.violations.push_back(w);
      }
      ChainComplex const ct  = build_Ctilde(model);
      std::size_t const  top = s.size() + 1;
      auto const         hs  = homology_all(ct, top);
      auto const         cs  = cohomology_all(ct, top);
      for (std::size_t k = s.size() + 1; k <= top; ++k) {
        if (!hs[k].is_zero() || !cs[k].is_zero()) {
          out.violations.push_back("nonzero (co)homology in degree " + std::to_string(k));
        }
      }
    } catch (DomainError const& e) {
      out.violations.push_back(e.what());
    }
    return out;
  }

  struct SuiteResult {
    std::string name;
    std::size_t runs = 0;
    Violations  violations;
    long long   millis = 0;
  };

  // Random orbit models with n <= 4 and up to three orbits.
  inline SuiteResult orbit_model_suite(std::uint64_t seed, std::size_t count) {
    auto const  t0 = std::chrono::steady_clock::now();
    Rng         rng(seed);
    SuiteResult out{"orbit models", 0, {}, 0};
    for (std::size_t it = 0; it < count; ++it) {
      int const         n = 1 + static_cast<int>(it % 4);
      std::size_t const b = 1 + (it / 4) % 3;
      OrbitModel const  m = random_orbit_model(rng, n, b);
      ++out.runs;
      for (auto const& w : check_orbit_model(m)) {
        out.violations.push_back("model " + std::to_string(it) + ": " + w);
      }
    }
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return out;
  }

  // Random finite Gamma-semilattices with covers satisfying (i)-(iii).
  inline SuiteResult resolution_suite(std::uint64_t seed, std::size_t count, std::size_t depth = 8) {
    auto const  t0 = std::chrono::steady_clock::now();
    Rng         rng(seed);
    SuiteResult out{"resolutions", 0, {}, 0};
    for (std::size_t it = 0; it < count; ++it) {
      RandomInstance const inst = random_instance(rng);
      ++out.runs;
      for (auto const& w : check_tower(inst.covers, inst.action, depth)) {
        out.violations.push_back("instance " + std::to_string(it) + ": " + w);
      }
    }
    out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return out;
  }

}  // namespace indres
