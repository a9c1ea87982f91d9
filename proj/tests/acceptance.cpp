// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails or exceeds its time limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "indres/indres.hpp"

namespace {

  using namespace indres;

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool cond, std::string const& what) {
      if (!cond && pass) {
        pass   = false;
        detail = what;
      }
    }
  };

  HomologyGroup Z(std::size_t r, std::vector<long long> torsion = {}) {
    HomologyGroup h;
    h.free_rank = r;
    for (long long d : torsion) {
      h.torsion.emplace_back(d);
    }
    return h;
  }

  bool same(HomologyGroup const& a, HomologyGroup const& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }

  bool same(std::vector<HomologyGroup> const& a, std::vector<HomologyGroup> const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!same(a[k], b[k])) {
        return false;
      }
    }
    return true;
  }

  // Homology of the presentation, degrees 0..top.
  std::vector<HomologyGroup> presentation_homology(SigmaMap const& s, std::size_t top) {
    ChainComplex const ct = build_Ctilde(orbit_model(s));
    return homology_all(ct, top);
  }

  Outcome expect_homology(SigmaMap const& s, std::vector<HomologyGroup> expected) {
    Outcome    out;
    auto const hs = presentation_homology(s, expected.size() - 1);
    out.require(same(hs, expected), "got " + signature(hs));
    if (out.pass) {
      out.detail = signature(hs);
    }
    return out;
  }

  // Every sigma on n letters satisfying all of (*)-(****).
  std::vector<SigmaMap> valid_sigmas(std::size_t n) {
    std::vector<SigmaMap> out;
    for (auto const& s : structural_candidates(n)) {
      if (validate_sigma(s).all()) {
        out.push_back(s);
      }
    }
    return out;
  }

  bool products_vanish(ChainComplex const& cx) {
    for (std::size_t k = 2; k < cx.length(); ++k) {
      if (!(cx.boundary(k - 1) * cx.boundary(k)).is_zero()) {
        return false;
      }
    }
    return true;
  }

  SigmaMap flip() {
    return SigmaMap::flip({"a", "b"});
  }

  SigmaMap klein() {
    return SigmaMap::identity({"a", "b"});
  }

  Outcome criterion_1() {
    return expect_homology(flip(), {Z(1), Z(2), Z(1), Z(0), Z(0), Z(0)});
  }

  Outcome criterion_2() {
    return expect_homology(klein(), {Z(1), Z(1, {2}), Z(0), Z(0), Z(0)});
  }

  Outcome criterion_3() {
    Outcome               out;
    std::vector<SigmaMap> sigmas = {flip(), klein()};
    for (auto const& s : valid_sigmas(3)) {
      sigmas.push_back(s);
    }
    for (auto const& s : sigmas) {
      OrbitModel const   model = orbit_model(s);
      ChainComplex const ct    = build_Ctilde(model);
      std::size_t const  top   = s.size() + 3;
      auto const         hs    = homology_all(ct, top);
      auto const         cs    = cohomology_all(ct, top);
      for (std::size_t k = s.size() + 1; k <= top; ++k) {
        out.require(hs[k].is_zero() && cs[k].is_zero(),
                    "nonzero degree " + std::to_string(k) + " for |Sigma| = "
                        + std::to_string(s.size()));
      }
    }
    if (out.pass) {
      out.detail = std::to_string(sigmas.size()) + " presentations";
    }
    return out;
  }

  std::vector<OrbitModel> random_models(std::uint64_t seed, std::size_t count) {
    Rng                     rng(seed);
    std::vector<OrbitModel> out;
    for (std::size_t it = 0; it < count; ++it) {
      out.push_back(random_orbit_model(rng, 1 + static_cast<int>(it % 4), 1 + (it / 4) % 3));
    }
    return out;
  }

  Outcome criterion_4() {
    Outcome out;
    for (auto const& m : random_models(4, 100)) {
      out.require(m.n() <= 4 && !m.factorization_witness(), "invalid random model");
      out.require(products_vanish(build_C(m)), "C: nonzero boundary product");
      out.require(products_vanish(build_Ctilde(m)), "C~: nonzero boundary product");
    }
    if (out.pass) {
      out.detail = "100 models";
    }
    return out;
  }

  Outcome criterion_5() {
    Outcome out;
    for (auto const& m : random_models(4, 100)) {
      ChainComplex const C  = build_C(m);
      ChainComplex const Ct = build_Ctilde(m);
      auto const         f  = chain_map_f(m);
      out.require(f.size() == Ct.length(), "f has the wrong number of components");
      for (std::size_t k = 1; k < f.size(); ++k) {
        out.require(C.boundary(k) * f[k] == f[k - 1] * Ct.boundary(k),
                    "d f != f d in degree " + std::to_string(k));
      }
    }
    if (out.pass) {
      out.detail = "100 models";
    }
    return out;
  }

  Outcome criterion_6() {
    Outcome                 out;
    std::vector<OrbitModel> models = {orbit_model(flip()), orbit_model(klein())};
    Rng                     rng(6);
    for (std::size_t it = 0; it < 50; ++it) {
      models.push_back(random_orbit_model(rng, 2, 1 + it % 3));
    }
    models.push_back(OrbitModel::single_orbit(SharpTable::trivial(3)));
    for (std::size_t it = 0; it < 20; ++it) {
      models.push_back(random_orbit_model(rng, SharpTable::trivial(3), 1 + it % 3));
    }
    for (auto const& m : models) {
      std::size_t const top = static_cast<std::size_t>(m.n()) + 1;
      auto const        hc  = homology_all(build_C(m), top);
      auto const        hct = homology_all(build_Ctilde(m), top);
      out.require(same(hc, hct), "H(C) = " + signature(hc) + " vs H(C~) = " + signature(hct));
    }
    if (out.pass) {
      out.detail = std::to_string(models.size()) + " models";
    }
    return out;
  }

  std::vector<RandomInstance> random_instances(std::uint64_t seed) {
    Rng                         rng(seed);
    std::vector<RandomInstance> out;
    for (int it = 0; it < 50; ++it) {
      out.push_back(random_instance(rng));
    }
    return out;
  }

  Outcome criterion_7() {
    Outcome     out;
    std::size_t levels = 0;
    for (auto const& inst : random_instances(7)) {
      out.require(inst.covers.semilattice()->size() <= 12, "|E| > 12");
      out.require(check_conditions(inst.covers, inst.action).all(), "instance fails (i)-(iii)");
      ResolutionTower const tower = build_tower(inst.covers, inst.action, 8);
      for (std::size_t k = 0; k < tower.levels.size(); ++k) {
        ExactnessReport const x = verify_exactness(tower, k);
        out.require(x.checked && x.exact, "level " + std::to_string(k) + ": " + x.detail);
        ++levels;
      }
    }
    if (out.pass) {
      out.detail = "50 instances, " + std::to_string(levels) + " levels";
    }
    return out;
  }

  Outcome criterion_8() {
    Outcome                  out;
    std::map<std::size_t, std::size_t> by_sup;
    for (auto const& inst : random_instances(7)) {
      ResolutionTower const tower = build_tower(inst.covers, inst.action, 8);
      auto const            len   = tower.length();
      std::size_t const     m     = inst.covers.sup_size();
      out.require(len.has_value(), "tower did not terminate by depth 8");
      out.require(!len || *len <= m,
                  "length " + std::to_string(len.value_or(0)) + " > " + std::to_string(m));
      ++by_sup[m];
    }
    if (out.pass) {
      out.detail = "sup sizes:";
      for (auto [m, c] : by_sup) {
        out.detail += " " + std::to_string(m) + "x" + std::to_string(c);
      }
    }
    return out;
  }

  Outcome criterion_9() {
    Outcome            out;
    CensusReport const c = census(2, true);
    out.require(c.classes.size() == 2,
                std::to_string(c.classes.size()) + " canonical classes");
    std::set<std::string> h1;
    for (auto const& k : c.classes) {
      h1.insert(k.homology.at(1).to_string());
    }
    out.require(h1.size() == c.classes.size(), "H_1 signatures coincide");
    if (out.pass) {
      out.detail = "H_1 in {";
      for (auto const& s : h1) {
        out.detail += " " + s;
      }
      out.detail += " }";
    }
    return out;
  }

  Outcome criterion_10() {
    Outcome     out;
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      for (auto const& s : valid_sigmas(n)) {
        for (Letter i = 0; i < static_cast<Letter>(n); ++i) {
          for (Letter j = 0; j < static_cast<Letter>(n); ++j) {
            if (i == j) {
              continue;
            }
            auto const r = lcm_detail(Word{i}, Word{j}, s);
            out.require(r.has_value(), "reversing inconclusive");
            if (r) {
              out.require(r->right_of_p == Word{s.left(i, j)},
                          "lcm(" + s.label(i) + "," + s.label(j) + ") disagrees with sigma_l");
            }
            ++checked;
          }
        }
      }
    }
    if (out.pass) {
      out.detail = std::to_string(checked) + " entries";
    }
    return out;
  }

  Outcome criterion_11() {
    Outcome     out;
    Rng         rng(11);
    std::size_t nontrivial = 0;
    std::size_t families   = 0;
    for (int it = 0; it < 50; ++it) {
      RandomInstance const inst = random_instance(rng);
      out.require(inst.action.order() <= 6, "|Gamma| > 6");
      nontrivial += inst.action.order() > 1;
      ResolutionTower const tower = build_tower(inst.covers, inst.action, 8);
      StabilizerReport const st   = stabilizer_check(tower);
      out.require(st.holds, st.witnesses.empty() ? "stabilizer" : st.witnesses.front());
      // Families: every cover minus e, and every set of at most three
      // elements strictly below e.
      FiniteSemilattice const& E = *inst.covers.semilattice();
      for (Element e : E.nonzero()) {
        std::vector<Element> below;
        for (Element f : E.nonzero()) {
          if (E.lt(f, e)) {
            below.push_back(f);
          }
        }
        std::vector<std::vector<Element>> fams = {{}};
        for (std::size_t a = 0; a < below.size(); ++a) {
          fams.push_back({below[a]});
          for (std::size_t b = a + 1; b < below.size(); ++b) {
            fams.push_back({below[a], below[b]});
            for (std::size_t c = b + 1; c < below.size(); ++c) {
              fams.push_back({below[a], below[b], below[c]});
            }
          }
        }
        for (auto const& cover : inst.covers.covers(e)) {
          std::vector<Element> strict;
          for (Element f : cover) {
            if (f != e) {
              strict.push_back(f);
            }
          }
          fams.push_back(strict);
        }
        for (auto const& fam : fams) {
          ++families;
          out.require(!fix_maximal_idem_violation(inst.action, e, fam),
                      "fixed point check fails at " + E.label(e));
        }
      }
    }
    out.require(nontrivial > 0, "no instance with a nontrivial group");
    if (out.pass) {
      out.detail = std::to_string(nontrivial) + " nontrivial groups, "
                   + std::to_string(families) + " families";
    }
    return out;
  }

  struct Criterion {
    int                      id;
    char const*              name;
    long long                limit_ms;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "flip presentation homology", 1000, criterion_1},
      {2, "identity presentation homology", 1000, criterion_2},
      {3, "vanishing above |Sigma|", 60000, criterion_3},
      {4, "boundaries square to zero", 60000, criterion_4},
      {5, "chain map identity", 60000, criterion_5},
      {6, "H(C~) = H(C) where expected", 120000, criterion_6},
      {7, "exactness of random towers", 120000, criterion_7},
      {8, "tower length at most sup |R(e)|", 120000, criterion_8},
      {9, "census |Sigma| = 2", 5000, criterion_9},
      {10, "lcm sharp table equals sigma_l", 30000, criterion_10},
      {11, "stabilizers and fixed points", 60000, criterion_11},
  };
  int failures = 0;
  for (auto const& c : criteria) {
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.pass   = false;
      o.detail = std::string("exception: ") + e.what();
    }
    long long const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    if (o.pass && ms > c.limit_ms) {
      o.pass   = false;
      o.detail = "over time limit of " + std::to_string(c.limit_ms) + " ms";
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ("
              << ms << " ms) " << o.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
