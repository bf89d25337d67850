#include <catch_amalgamated.hpp>

#include <set>

#include "kunzcount/enumerate.hpp"
#include "kunzcount/linear_system.hpp"
#include "kunzcount/semigroup.hpp"

using namespace kunzcount;

namespace {

bool has_row(const linear_system& sys, const std::vector<i64>& coeffs, relation rel, i64 rhs) {
  for (const auto& row : sys.rows)
    if (row.coeffs == coeffs && row.rel == rel && row.rhs == rhs) return true;
  return false;
}

i64 count_or_zero(i64 m, i64 F, bool med = false) {
  try {
    return count_lattice_points(add_frobenius_cut(med ? med_system(m) : kunz_system(m), F));
  } catch (const error& e) {
    if (e.code() == errc::frobenius_divisible) return 0;
    throw;
  }
}

}  // namespace

TEST_CASE("genus_system m=3 has exactly the expected rows") {
  const auto sys = genus_system(3, 7);
  REQUIRE(sys.vars == 2);
  CHECK(sys.rows.size() == 5);
  CHECK(has_row(sys, {1, 0}, relation::ge, 1));
  CHECK(has_row(sys, {0, 1}, relation::ge, 1));
  CHECK(has_row(sys, {2, -1}, relation::ge, 0));
  CHECK(has_row(sys, {-1, 2}, relation::ge, -1));
  CHECK(has_row(sys, {1, 1}, relation::eq, 7));
}

TEST_CASE("genus_system m=4 matches the printed polytope") {
  const auto sys = genus_system(4, 9);
  REQUIRE(sys.vars == 3);
  CHECK(sys.rows.size() == 8);
  CHECK(has_row(sys, {2, -1, 0}, relation::ge, 0));   // 2x - y >= 0
  CHECK(has_row(sys, {1, 1, -1}, relation::ge, 0));   // x + y - z >= 0
  CHECK(has_row(sys, {-1, 1, 1}, relation::ge, -1));  // -x + y + z >= -1
  CHECK(has_row(sys, {0, -1, 2}, relation::ge, -1));  // -y + 2z >= -1
  CHECK(has_row(sys, {1, 1, 1}, relation::eq, 9));
  // pairs with i + j == m generate no constraint
  CHECK_FALSE(has_row(sys, {0, 2, 0}, relation::ge, 0));
  CHECK_FALSE(has_row(sys, {0, 2, 0}, relation::ge, -1));
}

TEST_CASE("genus_system m=2 is a single pinned variable") {
  for (i64 g = 1; g <= 12; ++g) CHECK(count_lattice_points(genus_system(2, g)) == 1);
}

TEST_CASE("genus_system rejects multiplicity below 2") {
  CHECK_THROWS_AS(genus_system(1, 5), error);
}

TEST_CASE("frobenius_system pins the k* coordinate") {
  const auto sys = frobenius_system(3, 7);  // k* = 1, 3 x1 + 1 = 10
  CHECK(has_row(sys, {3, 0}, relation::eq, 9));
  CHECK(has_row(sys, {3, 0}, relation::le, 9));
  CHECK(has_row(sys, {0, 3}, relation::le, 8));

  const auto sys46 = frobenius_system(4, 6);  // k* = 2, 4 x2 + 2 = 10
  CHECK(has_row(sys46, {0, 4, 0}, relation::eq, 8));

  CHECK_THROWS_MATCHES(frobenius_system(3, 6), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("frobenius_divisible")));
}

TEST_CASE("med_system rows") {
  const auto m3 = med_system(3);
  CHECK(m3.rows.size() == 4);
  CHECK(has_row(m3, {2, -1}, relation::ge, 1));
  CHECK(has_row(m3, {-1, 2}, relation::ge, 0));

  const auto m2 = med_system(2);
  CHECK(m2.rows.size() == 1);  // only x1 >= 1; no pair rows exist
  CHECK(has_row(m2, {1}, relation::ge, 1));

  const auto m4 = med_system(4);
  CHECK(m4.rows.size() == 7);  // 3 lower bounds + pairs (1,1),(1,2),(2,3),(3,3)
  CHECK(has_row(m4, {2, -1, 0}, relation::ge, 1));
  CHECK(has_row(m4, {1, 1, -1}, relation::ge, 1));
  CHECK(has_row(m4, {-1, 1, 1}, relation::ge, 0));
  CHECK(has_row(m4, {0, -1, 2}, relation::ge, 0));
}

TEST_CASE("cuts compose and duplicate cuts are rejected") {
  auto sys = add_genus_cut(med_system(3), 5);
  CHECK(count_lattice_points(sys) == 2);
  CHECK_THROWS_MATCHES(add_genus_cut(sys, 5), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("duplicate_cut")));

  auto both = add_frobenius_cut(genus_system(3, 3), 5);
  const auto pts = enumerate_lattice_points(both);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == std::vector<i64>{1, 2});  // x2 = (F+1)/3 = 2, x1 = g - x2
  CHECK(semigroup_from_kunz({3, pts[0]}).generators == std::vector<i64>{3, 4});

  // order of the two cuts does not matter
  auto swapped = add_genus_cut(frobenius_system(3, 5), 3);
  CHECK(enumerate_lattice_points(swapped) == pts);
}

TEST_CASE("variable_bounds") {
  const auto gb = variable_bounds(genus_system(4, 9));
  REQUIRE(gb.size() == 3);
  for (const auto& b : gb) {
    CHECK(b.lo == 1);
    CHECK(b.hi == 7);  // g - (m - 2)
  }

  const auto fb = variable_bounds(frobenius_system(3, 7));
  CHECK(fb[0].lo == 3);
  CHECK(fb[0].hi == 3);  // pinned by the equality
  CHECK(fb[1].lo == 1);
  CHECK(fb[1].hi == 2);  // floor((7 + 3 - 2) / 3)

  CHECK_THROWS_MATCHES(variable_bounds(med_system(3)), error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("unbounded")));
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate_lattice_points(genus_system(3, 4)) ==
        std::vector<std::vector<i64>>{{2, 2}, {3, 1}});
  CHECK(enumerate_lattice_points(genus_system(4, 3)) ==
        std::vector<std::vector<i64>>{{1, 1, 1}});
  CHECK(count_or_zero(3, 6) == 0);  // infeasible by divisibility
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  const auto pts = enumerate_lattice_points(genus_system(5, 9));
  std::set<std::vector<i64>> unique(pts.begin(), pts.end());
  CHECK(unique.size() == pts.size());
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(static_cast<i64>(pts.size()) == count_lattice_points(genus_system(5, 9)));
}

TEST_CASE("count examples from the census") {
  CHECK(count_lattice_points(genus_system(9, 12)) == 116);
  CHECK(count_lattice_points(genus_system(6, 15)) == 133);
  CHECK(count_lattice_points(add_genus_cut(med_system(6), 14)) == 35);
}

TEST_CASE("infeasible systems count zero, never throw") {
  CHECK(count_lattice_points(genus_system(5, 2)) == 0);   // g < m - 1
  CHECK(count_lattice_points(genus_system(12, 4)) == 0);  // m > g + 1
}

TEST_CASE("parallel count matches sequential") {
  for (unsigned threads : {2u, 4u}) {
    CHECK(count_lattice_points(genus_system(9, 12), threads) == 116);
    CHECK(count_lattice_points(genus_system(6, 15), threads) == 133);
    CHECK(count_lattice_points(add_genus_cut(med_system(6), 14), threads) == 35);
  }
}

TEST_CASE("every enumerated point satisfies every row") {
  const auto sys = add_frobenius_cut(genus_system(5, 11), 13);
  for (const auto& pt : enumerate_lattice_points(sys)) {
    for (const auto& row : sys.rows) {
      i64 lhs = 0;
      for (std::size_t i = 0; i < pt.size(); ++i) lhs += row.coeffs[i] * pt[i];
      switch (row.rel) {
        case relation::ge: REQUIRE(lhs >= row.rhs); break;
        case relation::eq: REQUIRE(lhs == row.rhs); break;
        case relation::le: REQUIRE(lhs <= row.rhs); break;
      }
    }
  }
}

TEST_CASE("partition identities on a small window") {
  for (i64 m = 2; m <= 4; ++m) {
    for (i64 g = m - 1; g <= 9; ++g) {
      i64 sum = 0;
      for (i64 F = g; F <= 2 * g - 1; ++F) {
        try {
          sum += count_lattice_points(add_frobenius_cut(genus_system(m, g), F));
        } catch (const error& e) {
          if (e.code() != errc::frobenius_divisible) throw;
        }
      }
      CHECK(sum == count_lattice_points(genus_system(m, g)));
    }
  }
}

TEST_CASE("MED points satisfy the plain system") {
  for (i64 g = 2; g <= 9; ++g) {
    for (i64 m = 2; m <= g + 1; ++m) {
      const auto med_pts = enumerate_lattice_points(add_genus_cut(med_system(m), g));
      for (const auto& pt : med_pts) REQUIRE(is_valid_kunz(m, pt));
      CHECK(static_cast<i64>(med_pts.size()) <= count_lattice_points(genus_system(m, g)));
    }
  }
}

TEST_CASE("debug text serialization is one constraint per line") {
  CHECK(to_debug_text(genus_system(2, 3)) == "1 >= 1\n1 = 3\n");
  CHECK(to_debug_text(med_system(3)) ==
        "1 0 >= 1\n"
        "0 1 >= 1\n"
        "2 -1 >= 1\n"
        "-1 2 >= 0\n");
  CHECK(genus_system(2, 3).label.text() == "kunz(m=2)+genus(3)");
}
