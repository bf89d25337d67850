#include <catch_amalgamated.hpp>

#include <sstream>

#include "kunzcount/enumerate.hpp"
#include "kunzcount/linear_system.hpp"
#include "kunzcount/oracle.hpp"

using namespace kunzcount;

namespace {

std::vector<std::vector<i64>> generator_sets(const std::vector<semigroup>& sgs) {
  std::vector<std::vector<i64>> out;
  for (const auto& s : sgs) out.push_back(s.generators);
  return out;
}

}  // namespace

TEST_CASE("children of the first few tree nodes") {
  CHECK(generator_sets(children(from_generators({1}))) ==
        std::vector<std::vector<i64>>{{2, 3}});
  CHECK(generator_sets(children(from_generators({2, 3}))) ==
        std::vector<std::vector<i64>>{{3, 4, 5}, {2, 5}});
  CHECK(generator_sets(children(from_generators({3, 4, 5}))) ==
        std::vector<std::vector<i64>>{{4, 5, 6, 7}, {3, 5, 7}, {3, 4}});
}

TEST_CASE("children increase genus by one") {
  for (const auto& gens : {std::vector<i64>{4, 6, 7, 9}, {3, 5}, {2, 9}}) {
    const auto parent = from_generators(gens);
    for (const auto& child : children(parent)) {
      CHECK(child.genus == parent.genus + 1);
      CHECK(child.frobenius > parent.frobenius);
    }
  }
}

TEST_CASE("enumerate_by_genus level sizes") {
  const auto levels = enumerate_by_genus(7);
  std::vector<std::size_t> sizes;
  for (const auto& l : levels) sizes.push_back(l.semigroups.size());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 2, 4, 7, 12, 23, 39});
  CHECK(generator_sets(levels[2].semigroups) ==
        std::vector<std::vector<i64>>{{2, 5}, {3, 4, 5}});
  CHECK(generator_sets(levels[0].semigroups) == std::vector<std::vector<i64>>{{1}});
}

TEST_CASE("levels are complete and consistent") {
  const auto levels = enumerate_by_genus(8);
  for (const auto& level : levels) {
    i64 by_multiplicity = 0;
    for (i64 m = 1; m <= level.genus + 1; ++m)
      by_multiplicity += count_filtered(levels, level.genus, {m, std::nullopt, false});
    CHECK(by_multiplicity == static_cast<i64>(level.semigroups.size()));
    for (const auto& s : level.semigroups) CHECK(s.genus == level.genus);
  }
}

TEST_CASE("count_filtered examples") {
  const auto levels = enumerate_by_genus(12);
  CHECK(count_filtered(levels, 12, {9, std::nullopt, false}) == 116);
  CHECK(count_filtered(levels, 10, {5, std::nullopt, true}) == 8);
  CHECK(count_filtered(levels, 5, {std::nullopt, 9, false}) == 3);
  CHECK_THROWS_AS(count_filtered(levels, 13, {}), error);
}

TEST_CASE("oracle agrees with the polytope counts") {
  const auto levels = enumerate_by_genus(9);
  for (i64 g = 1; g <= 9; ++g) {
    for (i64 m = 2; m <= g + 1; ++m) {
      CHECK(count_filtered(levels, g, {m, std::nullopt, false}) ==
            count_lattice_points(genus_system(m, g)));
      CHECK(count_filtered(levels, g, {m, std::nullopt, true}) ==
            count_lattice_points(add_genus_cut(med_system(m), g)));
    }
  }
}

TEST_CASE("resource limits") {
  CHECK_THROWS_MATCHES(enumerate_by_genus(19), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("resource_limit")));
  oracle_options tight;
  tight.level_size_cap = 5;
  CHECK_THROWS_AS(enumerate_by_genus(6, tight), error);
}

TEST_CASE("level persistence round trip") {
  const auto levels = enumerate_by_genus(6);
  std::stringstream buf;
  save_levels(buf, levels);
  const auto loaded = load_levels(buf);
  REQUIRE(loaded.size() == levels.size());
  for (std::size_t g = 0; g < levels.size(); ++g) {
    REQUIRE(loaded[g].genus == levels[g].genus);
    CHECK(generator_sets(loaded[g].semigroups) == generator_sets(levels[g].semigroups));
  }
}

TEST_CASE("corrupt cache lines are rejected") {
  std::stringstream bad("0 1 -1 1\n2 3 4 nonsense\n");
  CHECK_THROWS_MATCHES(load_levels(bad), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("io_error")));
  std::stringstream inconsistent("0 1 -1 1\n1 2 1 2 4\n");  // <2,4> is not cofinite
  CHECK_THROWS_AS(load_levels(inconsistent), error);
}
