#include <catch_amalgamated.hpp>

#include <set>

#include "indres/mu.hpp"
#include "indres/random_models.hpp"

using namespace indres;

namespace {

  // Functions {1..n} -> {0..k} hitting every value in 1..k; value 0 means
  // "unused". These are in bijection with Q^n_k.
  std::size_t brute_count_Q(int n, std::size_t k) {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
      total *= k + 1;
    }
    std::size_t count = 0;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<bool> hit(k + 1, false);
      std::size_t       c = code;
      for (int i = 0; i < n; ++i) {
        hit[c % (k + 1)] = true;
        c /= k + 1;
      }
      bool all = true;
      for (std::size_t v = 1; v <= k; ++v) {
        all = all && hit[v];
      }
      count += all;
    }
    return count;
  }

  std::size_t binomial(int n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
      r = r * static_cast<std::size_t>(n - static_cast<int>(i)) / (i + 1);
    }
    return r;
  }

}  // namespace

TEST_CASE("Q and N counts") {
  REQUIRE(enumerate_Q(3, 2).size() == 12);
  REQUIRE(enumerate_N(3, 2).size() == 3);
  REQUIRE(enumerate_Q(3, 4).empty());
  REQUIRE(enumerate_Q(2, 0).size() == 1);
  for (int n = 1; n <= 5; ++n) {
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n) + 1; ++k) {
      REQUIRE(enumerate_Q(n, k).size() == brute_count_Q(n, k));
      REQUIRE(enumerate_N(n, k).size() == (k <= static_cast<std::size_t>(n) ? binomial(n, k) : 0));
    }
  }
}

TEST_CASE("Q elements are distinct, sorted and valid") {
  auto const qs = enumerate_Q(4, 2);
  REQUIRE(std::is_sorted(qs.begin(), qs.end()));
  REQUIRE(std::set<Mu>(qs.begin(), qs.end()).size() == qs.size());
  for (auto const& mu : qs) {
    REQUIRE(mu.k() == 2);
    for (auto const& part : mu.parts()) {
      REQUIRE(std::is_sorted(part.begin(), part.end()));
    }
  }
}

TEST_CASE("Mu text round-trips") {
  for (char const* text : {"3,10|4,5,8|7|1,2", "1", "2|1", "∅"}) {
    Mu const mu = Mu::parse(10, text);
    REQUIRE(mu.to_string() == text);
    REQUIRE(Mu::parse(10, mu.to_string()) == mu);
  }
  // Parts are sets; the printer lists them in increasing order.
  REQUIRE(Mu::parse(10, "10,3|4,5,8|7|1,2").to_string() == "3,10|4,5,8|7|1,2");
  REQUIRE_THROWS_AS(Mu::parse(3, "1,1"), ParseError);
  REQUIRE_THROWS_AS(Mu::parse(3, "1||2"), ParseError);
  REQUIRE_THROWS_AS(Mu::parse(3, "4"), ParseError);
  REQUIRE_THROWS_AS(Mu::parse(3, "1;2"), ParseError);
}

TEST_CASE("star concatenates parts") {
  Mu const a = Mu::parse(5, "1|2");
  Mu const b = Mu::parse(5, "3|4|5");
  REQUIRE(star(a, b)->to_string() == "1,3|2,4|5");
  REQUIRE(star(b, a) == star(a, b));
  REQUIRE_FALSE(star(a, Mu::parse(5, "1")).has_value());
  REQUIRE(star(Mu(5, {}), a) == a);
}

TEST_CASE("permutations and signs") {
  REQUIRE(all_permutations(3).size() == 6);
  REQUIRE(sign({1, 2, 3}) == 1);
  REQUIRE(sign({2, 1, 3}) == -1);
  REQUIRE(sign({3, 1, 2}) == 1);
  REQUIRE(inversions({3, 2, 1}) == 3);
  REQUIRE(permute({2, 1}, Mu::parse(3, "1,2|3")).to_string() == "3|1,2");
  REQUIRE(a_seq(0) == 0);
  REQUIRE(a_seq(1) == 0);
  REQUIRE(a_seq(4) == 6);
}

TEST_CASE("trivial sharp table") {
  SharpTable const t = SharpTable::trivial(4);
  REQUIRE(t.is_total());
  REQUIRE(t.at(1, 3) == 3);
  REQUIRE(sharp({1, 2}, 4, t) == 4);
  REQUIRE(sharp_mu({1}, Mu::parse(4, "2|3,4"), t).to_string() == "2|3,4");
  REQUIRE(rho_mu_i(Mu::parse(4, "1|2|3"), 2, t) == Permutation{1, 2});
}

TEST_CASE("sharp tables: row injectivity") {
  SharpTable t(3);
  t.set(1, 2, 3);
  t.set(1, 3, 3);
  REQUIRE(t.row_injectivity_witness().has_value());
  REQUIRE_THROWS_AS(t.set(1, 1, 2), DomainError);
  REQUIRE_THROWS_AS(t.set(1, 2, 4), DomainError);
}

TEST_CASE("sharp is independent of the extraction order on valid tables") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& t : valid_sharp_tables(n)) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> omega;
        for (int p = 1; p <= n; ++p) {
          if (mask & (1u << (p - 1))) {
            omega.push_back(p);
          }
        }
        for (int j = 1; j <= n; ++j) {
          if (mask & (1u << (j - 1))) {
            continue;
          }
          auto const values = sharp_all_orders(omega, j, t);
          REQUIRE(values.size() == 1);
          REQUIRE(*values.begin() == sharp(omega, j, t));
        }
      }
    }
  }
}

TEST_CASE("valid sharp table counts") {
  REQUIRE(valid_sharp_tables(1).size() == 1);
  REQUIRE(valid_sharp_tables(2).size() == 4);
  REQUIRE(valid_sharp_tables(3).size() == 30);
}
