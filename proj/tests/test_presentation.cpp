#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "indres/presentation.hpp"

using namespace indres;

namespace {

  // Equivalence class of w under the relations a sigma_l(a,b) = b sigma_r(a,b),
  // by breadth-first search over the (finite, length-preserving) graph.
  std::set<Word> relation_class(Word const& w, SigmaMap const& s) {
    std::set<Word>   seen{w};
    std::queue<Word> todo;
    todo.push(w);
    while (!todo.empty()) {
      Word const u = todo.front();
      todo.pop();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        for (Letter a = 0; a < static_cast<Letter>(s.size()); ++a) {
          for (Letter b = 0; b < static_cast<Letter>(s.size()); ++b) {
            auto const [l, r] = s.at(a, b);
            if (u[i] == a && u[i + 1] == l) {
              Word v  = u;
              v[i]     = b;
              v[i + 1] = r;
              if (seen.insert(v).second) {
                todo.push(v);
              }
            }
          }
        }
      }
    }
    return seen;
  }

  bool bfs_equal(Word const& x, Word const& y, SigmaMap const& s) {
    return x.size() == y.size() && relation_class(x, s).count(y) > 0;
  }

  // True when p is a prefix of some word equivalent to z.
  bool bfs_left_divides(Word const& p, Word const& z, SigmaMap const& s) {
    for (auto const& w : relation_class(z, s)) {
      if (std::equal(p.begin(), p.end(), w.begin())) {
        return true;
      }
    }
    return false;
  }

  Word concat_words(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  std::vector<int> table_code(SigmaMap const& s) {
    std::vector<int> out;
    for (auto const& [c, d] : s.table()) {
      out.push_back(c);
      out.push_back(d);
    }
    return out;
  }

  // Least code over all relabellings.
  std::vector<int> least_relabelling(SigmaMap const& s) {
    std::vector<Letter> pi(s.size());
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<int> best = table_code(s);
    do {
      best = std::min(best, table_code(s.relabel(pi)));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
  }

  std::vector<SigmaMap> some_valid_sigmas() {
    std::vector<SigmaMap> out{SigmaMap::flip({"a", "b"}), SigmaMap::identity({"a", "b"})};
    for (auto const& s : structural_candidates(3)) {
      if (validate_sigma(s).all()) {
        out.push_back(s);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("validation of the two-letter examples") {
  REQUIRE(validate_sigma(SigmaMap::flip({"a", "b"})).all());
  REQUIRE(validate_sigma(SigmaMap::identity({"a", "b"})).all());
}

TEST_CASE("validation witnesses") {
  SigmaMap const diag({"a", "b"}, {{0, 1}, {0, 0}, {1, 1}, {1, 0}});
  REQUIRE(validate_sigma(diag).first_failure() == "(*) fails at a");

  SigmaMap const clash({"a", "b"}, {{0, 0}, {0, 0}, {1, 0}, {1, 1}});
  REQUIRE(validate_sigma(clash).first_failure().rfind("sigma is not a bijection", 0) == 0);

  // sigma(a,b) = (a,c) needs sigma(b,a) = (c,a).
  SigmaMap const noflip({"a", "b", "c"}, {{0, 0}, {0, 2}, {0, 1}, {1, 0}, {1, 1}, {1, 2},
                                          {2, 0}, {2, 1}, {2, 2}});
  auto const     r = validate_sigma(noflip);
  REQUIRE(r.bijection.pass);
  REQUIRE(r.diagonal.pass);
  REQUIRE_FALSE(r.flip.pass);
  REQUIRE(r.flip.witness == "(**) fails at (a,b)");
}

TEST_CASE("right reversing on the flip presentation") {
  SigmaMap const s = SigmaMap::flip({"a", "b"});
  auto const     r = right_reverse(concat(inverse(Word{0}), positive(Word{1})), s);
  REQUIRE(r.has_value());
  REQUIRE(r->numerator == Word{1});
  REQUIRE(r->denominator == Word{0});
  REQUIRE(s.word_string(Word{0, 1}) == "ab");
  REQUIRE(s.word_string(Word{}) == "ε");
}

TEST_CASE("monoid equality agrees with the relation graph") {
  for (auto const& s : some_valid_sigmas()) {
    auto const words = words_up_to(s.size(), s.size() == 2 ? 4 : 3);
    for (auto const& x : words) {
      for (auto const& y : words) {
        if (x.size() != y.size()) {
          continue;
        }
        auto const eq = equal_in_monoid(x, y, s);
        REQUIRE(eq.has_value());
        REQUIRE(*eq == bfs_equal(x, y, s));
      }
    }
  }
}

TEST_CASE("lcms are common multiples of least length") {
  for (auto const& s : some_valid_sigmas()) {
    auto const words = words_up_to(s.size(), 2);
    for (auto const& p : words) {
      for (auto const& q : words) {
        auto const r = lcm_detail(p, q, s);
        REQUIRE(r.has_value());
        REQUIRE(bfs_equal(r->lcm, concat_words(p, r->right_of_p), s));
        REQUIRE(bfs_equal(r->lcm, concat_words(q, r->right_of_q), s));
        // No common multiple of smaller length exists.
        std::size_t const m = std::max(p.size(), q.size());
        if (r->lcm.empty()) {
          continue;
        }
        for (auto const& z : words_up_to(s.size(), r->lcm.size() - 1)) {
          if (z.size() < m) {
            continue;
          }
          REQUIRE_FALSE((bfs_left_divides(p, z, s) && bfs_left_divides(q, z, s)));
        }
      }
    }
  }
}

TEST_CASE("lcm of the generators") {
  SigmaMap const flip = SigmaMap::flip({"a", "b"});
  SigmaMap const id   = SigmaMap::identity({"a", "b"});
  REQUIRE(lcm(Word{0}, Word{1}, flip) == Word{0, 1});
  REQUIRE(lcm(Word{0}, Word{1}, id) == Word{0, 0});
  REQUIRE(lcm(Word{0}, Word{0}, id) == Word{0});
}

TEST_CASE("(a)(b)(c) hold for valid presentations") {
  for (auto const& s : some_valid_sigmas()) {
    AbcReport const r = check_abc(s, s.size() == 2 ? 4 : 3);
    REQUIRE(r.all());
  }
}

TEST_CASE("lcm sharp table equals sigma_l") {
  for (auto const& s : some_valid_sigmas()) {
    SharpTable const t = sharp_from_lcm(s);
    for (int i = 1; i <= static_cast<int>(s.size()); ++i) {
      for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
        if (i != j) {
          REQUIRE(t.at(i, j) == s.left(i - 1, j - 1) + 1);
        }
      }
    }
  }
}

TEST_CASE("structural candidates find every valid sigma on three letters") {
  // Oracle: all 9! bijections of the pairs.
  std::vector<SigmaMap::Pair> pairs;
  for (Letter a = 0; a < 3; ++a) {
    for (Letter b = 0; b < 3; ++b) {
      pairs.push_back({a, b});
    }
  }
  std::vector<std::size_t> perm(9);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> brute;
  std::set<std::vector<int>> brute_classes;
  auto const                 alphabet = default_alphabet(3);
  do {
    std::vector<SigmaMap::Pair> t(9);
    for (std::size_t x = 0; x < 9; ++x) {
      t[x] = pairs[perm[x]];
    }
    SigmaMap const s(alphabet, std::move(t));
    if (validate_sigma(s).all()) {
      brute.insert(table_code(s));
      brute_classes.insert(least_relabelling(s));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::vector<int>> structural;
  for (auto const& s : structural_candidates(3)) {
    if (validate_sigma(s).all()) {
      structural.insert(table_code(s));
    }
  }
  REQUIRE(structural == brute);
  CensusReport const c = census(3, false);
  REQUIRE(c.raw_valid == brute.size());
  REQUIRE(c.classes.size() == brute_classes.size());
}

TEST_CASE("census counts") {
  CensusReport const c1 = census(1);
  REQUIRE(c1.classes.size() == 1);
  CensusReport const c2 = census(2);
  REQUIRE(c2.candidates == 2);
  REQUIRE(c2.raw_valid == 2);
  REQUIRE(c2.classes.size() == 2);
  REQUIRE(c2.signatures.size() == 2);
  CensusReport const c3 = census(3, false);
  REQUIRE(c3.candidates == 48);
  REQUIRE(c3.raw_valid == 12);
  REQUIRE(c3.classes.size() == 5);
}

TEST_CASE("canonical form is a relabelling invariant") {
  for (auto const& s : some_valid_sigmas()) {
    std::vector<Letter> pi(s.size());
    std::iota(pi.begin(), pi.end(), 0);
    std::reverse(pi.begin(), pi.end());
    REQUIRE(table_code(canonical_form(s)) == table_code(canonical_form(s.relabel(pi))));
    REQUIRE(table_code(canonical_form(s)) == least_relabelling(s));
  }
}

TEST_CASE("group homology of the two-letter examples") {
  HomologyOptions opt;
  opt.cohomology  = true;
  opt.cross_check = true;
  GroupHomology const flip = group_homology(SigmaMap::flip({"a", "b"}), opt);
  REQUIRE(signature(flip.homology) == "H_0 = ℤ; H_1 = ℤ^2; H_2 = ℤ; H_3 = 0");
  REQUIRE(signature(flip.cohomology) == "H_0 = ℤ; H_1 = ℤ^2; H_2 = ℤ; H_3 = 0");
  REQUIRE(flip.comparison->quasi_isomorphism);

  GroupHomology const klein = group_homology(SigmaMap::identity({"a", "b"}), opt);
  REQUIRE(signature(klein.homology) == "H_0 = ℤ; H_1 = ℤ ⊕ ℤ/2; H_2 = 0; H_3 = 0");
  REQUIRE(signature(klein.cohomology) == "H_0 = ℤ; H_1 = ℤ; H_2 = ℤ/2; H_3 = 0");
  REQUIRE(klein.comparison->quasi_isomorphism);
}

TEST_CASE("orbit_model rejects invalid sigma") {
  SigmaMap const diag({"a", "b"}, {{0, 1}, {0, 0}, {1, 1}, {1, 0}});
  REQUIRE_THROWS_AS(orbit_model(diag), DomainError);
}
