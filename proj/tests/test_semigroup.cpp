#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <set>

#include "brute.hpp"
#include "kunzcount/semigroup.hpp"

using namespace kunzcount;

namespace {

// Expected values below were computed with brute::analyze (gap enumeration by
// generator closure); this helper keeps the test honest against it.
void check_against_brute(const semigroup& s, const std::vector<i64>& gens) {
  const auto f = brute::analyze(gens);
  CHECK(s.multiplicity == f.multiplicity);
  CHECK(s.genus == f.genus);
  CHECK(s.frobenius == f.frobenius);
  CHECK(s.generators == f.minimal_generators);
}

}  // namespace

TEST_CASE("from_generators on <3,5>") {
  const auto s = from_generators({3, 5});
  CHECK(s.multiplicity == 3);
  CHECK(s.apery == std::vector<i64>{0, 10, 5});
  CHECK(s.genus == 4);
  CHECK(s.frobenius == 7);
  CHECK(s.embedding_dimension() == 2);
  check_against_brute(s, {3, 5});
}

TEST_CASE("from_generators on the full semigroup") {
  const auto s = from_generators({1});
  CHECK(s.multiplicity == 1);
  CHECK(s.apery == std::vector<i64>{0});
  CHECK(s.genus == 0);
  CHECK(s.frobenius == -1);
  CHECK(s.embedding_dimension() == 1);
}

TEST_CASE("from_generators on <4,6,7,9>") {
  const auto s = from_generators({4, 6, 7, 9});
  CHECK(s.multiplicity == 4);
  CHECK(s.genus == 4);
  CHECK(s.frobenius == 5);
  CHECK(s.embedding_dimension() == 4);
  CHECK(s.is_med());
  check_against_brute(s, {4, 6, 7, 9});
}

TEST_CASE("from_generators minimalizes the input") {
  const auto s = from_generators({3, 5, 10, 13});
  CHECK(s.generators == std::vector<i64>{3, 5});
}

TEST_CASE("from_generators error paths") {
  CHECK_THROWS_MATCHES(from_generators({}), error, Catch::Matchers::MessageMatches(
                                                       Catch::Matchers::ContainsSubstring("empty_input")));
  CHECK_THROWS_MATCHES(from_generators({2, 4}), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("non_cofinite")));
  CHECK_THROWS_AS(from_generators({0, 3}), error);
}

TEST_CASE("Selmer formulas hold on the descriptor") {
  for (const auto& gens :
       {std::vector<i64>{3, 5}, {4, 6, 7, 9}, {2, 7}, {5, 7, 9, 11, 13}, {6, 10, 15}}) {
    const auto s = from_generators(gens);
    i64 apery_sum = 0;
    for (i64 w : s.apery) apery_sum += w;
    // g = (sum w)/m - (m-1)/2, doubled to stay integral
    CHECK(2 * apery_sum / s.multiplicity - (s.multiplicity - 1) == 2 * s.genus);
    CHECK(*std::max_element(s.apery.begin(), s.apery.end()) - s.multiplicity == s.frobenius);
  }
}

TEST_CASE("kunz_from_semigroup") {
  CHECK(kunz_from_semigroup(from_generators({3, 5})).k == std::vector<i64>{3, 1});
  CHECK(kunz_from_semigroup(from_generators({4, 5, 6, 7})).k == std::vector<i64>{1, 1, 1});
  CHECK(kunz_from_semigroup(from_generators({4, 6, 7, 9})).k == std::vector<i64>{2, 1, 1});
  CHECK_THROWS_MATCHES(kunz_from_semigroup(from_generators({1})), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("multiplicity_one")));
}

TEST_CASE("semigroup_from_kunz") {
  const auto a = semigroup_from_kunz({3, {3, 1}});
  CHECK(a.generators == std::vector<i64>{3, 5});
  CHECK(a.genus == 4);
  CHECK(a.frobenius == 7);

  const auto b = semigroup_from_kunz({3, {1, 1}});
  CHECK(b.generators == std::vector<i64>{3, 4, 5});
  CHECK(b.genus == 2);
  CHECK(b.frobenius == 2);

  const auto c = semigroup_from_kunz({4, {2, 1, 1}});
  CHECK(c.genus == 4);
  CHECK(c.frobenius == 5);
}

TEST_CASE("semigroup_from_kunz rejects invalid coordinates") {
  try {
    semigroup_from_kunz({4, {1, 3, 1}});
    FAIL("expected invalid_kunz");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_kunz);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("k_1 + k_1 - k_2"));
  }
}

TEST_CASE("is_valid_kunz") {
  CHECK(is_valid_kunz(4, std::vector<i64>{1, 1, 1}));
  std::string why;
  CHECK_FALSE(is_valid_kunz(4, std::vector<i64>{1, 3, 1}, &why));
  CHECK_THAT(why, Catch::Matchers::ContainsSubstring("k_1 + k_1 - k_2 >= 0"));
  CHECK_FALSE(is_valid_kunz(3, std::vector<i64>{0, 5}, &why));
  CHECK_THAT(why, Catch::Matchers::ContainsSubstring("k_1 >= 1"));
  CHECK_THROWS_MATCHES(is_valid_kunz(4, std::vector<i64>{1, 1}), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("dimension_mismatch")));
}

TEST_CASE("Kunz round trip is a bijection (exhaustive m <= 6, k_i <= 8)") {
  i64 valid = 0;
  for (i64 m = 2; m <= 6; ++m) {
    const i64 n = m - 1;
    std::vector<i64> k(static_cast<std::size_t>(n), 1);
    for (;;) {
      if (is_valid_kunz(m, k)) {
        ++valid;
        const kunz_coords c{m, k};
        const semigroup s = semigroup_from_kunz(c);
        // round trip
        REQUIRE(kunz_from_semigroup(s) == c);
        // genus and Frobenius identities
        i64 ksum = 0, wmax = 0;
        for (i64 i = 1; i < m; ++i) {
          ksum += k[static_cast<std::size_t>(i - 1)];
          wmax = std::max(wmax, k[static_cast<std::size_t>(i - 1)] * m + i);
        }
        REQUIRE(s.genus == ksum);
        REQUIRE(s.frobenius == wmax - m);
        // gcd of the generators is automatically 1
        i64 d = 0;
        for (i64 g : s.generators) d = std::gcd(d, g);
        REQUIRE(d == 1);
        REQUIRE(s.multiplicity == m);
      }
      // next vector in [1,8]^n
      i64 pos = n - 1;
      while (pos >= 0 && k[static_cast<std::size_t>(pos)] == 8) {
        k[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++k[static_cast<std::size_t>(pos)];
    }
  }
  CHECK(valid > 1000);  // the sweep actually covered a meaningful set
}

TEST_CASE("Kunz round trip on random coordinates, m = 7..9") {
  std::mt19937 rng(20240217);
  for (i64 m = 7; m <= 9; ++m) {
    std::uniform_int_distribution<i64> coord(1, 12);
    int accepted = 0;
    for (int tries = 0; tries < 4000 && accepted < 120; ++tries) {
      std::vector<i64> k(static_cast<std::size_t>(m - 1));
      for (auto& v : k) v = coord(rng);
      if (!is_valid_kunz(m, k)) continue;
      ++accepted;
      const kunz_coords c{m, k};
      const auto s = semigroup_from_kunz(c);
      REQUIRE(kunz_from_semigroup(s) == c);
      REQUIRE(s.genus == std::accumulate(k.begin(), k.end(), i64{0}));
    }
    CHECK(accepted >= 50);
  }
}
