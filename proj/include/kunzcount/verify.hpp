#pragma once

// The verify sweep: every closed form is adjudicated against lattice
// enumeration (and against the semigroup-tree oracle where the depth allows),
// and the published census tables are re-derived cell by cell.
//
// Two kinds of disagreement are distinguished. A mismatch between a shipped
// formula and enumeration is a real discrepancy and makes the report dirty.
// A mismatch between a *printed* (pre-correction) reading and enumeration, or
// between a published table entry known to be misprinted and the recomputed
// value, is expected: it is recorded as a documented discrepancy and does not
// dirty the report. See transcription_table() for the corrected readings.

#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kunzcount/census.hpp"
#include "kunzcount/closed_forms.hpp"
#include "kunzcount/enumerate.hpp"
#include "kunzcount/linear_system.hpp"
#include "kunzcount/oracle.hpp"
#include "kunzcount/semigroup.hpp"

namespace kunzcount {

enum class verify_status { ok, formula_discrepancy, oracle_discrepancy };

inline const char* verify_status_name(verify_status s) {
  switch (s) {
    case verify_status::ok: return "OK";
    case verify_status::formula_discrepancy: return "FORMULA_DISCREPANCY";
    case verify_status::oracle_discrepancy: return "ORACLE_DISCREPANCY";
  }
  return "?";
}

struct verify_row {
  std::string query;
  std::optional<i64> formula_value;
  std::optional<i64> polytope_count;
  std::optional<i64> oracle_count;
  verify_status status = verify_status::ok;
  bool documented = false;  // expected mismatch (published misprint)
  std::string note;
};

struct verify_report {
  std::vector<verify_row> rows;
  i64 checked = 0;
  i64 ok_count = 0;
  i64 discrepancies = 0;
  i64 documented_discrepancies = 0;

  bool clean() const { return discrepancies == 0; }

  void add(verify_row row) {
    ++checked;
    if (row.status == verify_status::ok) ++ok_count;
    else if (row.documented) ++documented_discrepancies;
    else ++discrepancies;
    rows.push_back(std::move(row));
  }

  // A sweep that agreed everywhere collapses into one OK row.
  void add_sweep_ok(const std::string& query, i64 cases, const std::string& note = "") {
    verify_row row;
    row.query = query;
    row.status = verify_status::ok;
    row.note = note.empty() ? std::to_string(cases) + " cases agree" : note;
    checked += cases - 1;  // the add() below counts one
    ok_count += cases - 1;
    add(std::move(row));
  }
};

struct verify_options {
  i64 max_genus = 200;      // genus sweeps for the closed forms
  i64 max_frobenius = 400;  // Frobenius sweeps
  i64 grid_genus = 60;      // (g, F) grids
  i64 oracle_depth = 15;    // semigroup-tree depth for table adjudication
  i64 box_grid_eighths = 32;  // box endpoints range over [0 .. this] / 8
  i64 uniqueness_genus = 100;
};

namespace golden {

// Published census of numerical semigroups by genus (rows g = 2..15) and the
// published row totals. The total printed for g = 6 is a known misprint: the
// row itself sums to 23.
struct table_row {
  i64 g;
  std::vector<i64> cells;  // m = 2 .. g+1
  i64 printed_total;
};

inline const std::vector<table_row>& census_table() {
  static const std::vector<table_row> t = {
      {2, {1, 1}, 2},
      {3, {1, 2, 1}, 4},
      {4, {1, 2, 3, 1}, 7},
      {5, {1, 2, 4, 4, 1}, 12},
      {6, {1, 3, 6, 7, 5, 1}, 33},
      {7, {1, 3, 7, 10, 11, 6, 1}, 39},
      {8, {1, 3, 9, 13, 17, 16, 7, 1}, 67},
      {9, {1, 4, 11, 16, 27, 28, 22, 8, 1}, 118},
      {10, {1, 4, 13, 22, 37, 44, 44, 29, 9, 1}, 204},
      {11, {1, 4, 15, 24, 49, 64, 72, 66, 37, 10, 1}, 343},
      {12, {1, 5, 18, 32, 66, 85, 116, 116, 95, 46, 11, 1}, 592},
      {13, {1, 5, 20, 35, 85, 112, 172, 188, 182, 132, 56, 12, 1}, 1001},
      {14, {1, 5, 23, 43, 106, 148, 239, 288, 304, 277, 178, 67, 13, 1}, 1693},
      {15, {1, 6, 26, 51, 133, 191, 325, 409, 492, 486, 409, 234, 79, 14, 1}, 2857},
  };
  return t;
}

// Published MED census (rows g = 1..15). Row g = 15 is suspect at m = 10
// (printed 47), and the adjudication also flags m = 11 and m = 12 there.
inline const std::vector<table_row>& med_census_table() {
  static const std::vector<table_row> t = {
      {1, {1}, 1},
      {2, {1, 1}, 2},
      {3, {1, 1, 1}, 3},
      {4, {1, 1, 1, 1}, 4},
      {5, {1, 2, 2, 1, 1}, 7},
      {6, {1, 2, 3, 2, 1, 1}, 10},
      {7, {1, 2, 4, 2, 2, 1, 1}, 13},
      {8, {1, 3, 5, 4, 4, 2, 1, 1}, 21},
      {9, {1, 3, 7, 5, 6, 4, 2, 1, 1}, 30},
      {10, {1, 3, 8, 8, 9, 4, 4, 2, 1, 1}, 41},
      {11, {1, 4, 10, 10, 14, 7, 7, 4, 2, 1, 1}, 61},
      {12, {1, 4, 12, 13, 19, 12, 10, 7, 4, 2, 1, 1}, 86},
      {13, {1, 4, 14, 16, 25, 18, 17, 9, 7, 4, 2, 1, 1}, 119},
      {14, {1, 5, 16, 22, 35, 25, 26, 16, 12, 7, 4, 2, 1, 1}, 173},
      {15, {1, 5, 19, 24, 45, 37, 39, 24, 47, 27, 15, 4, 2, 1, 1}, 291},
  };
  return t;
}

// Totals of numerical semigroups by genus, g = 0..15 (with the g = 6
// correction applied).
inline const std::array<i64, 16>& genus_totals() {
  static const std::array<i64, 16> t = {1,   1,   2,   4,   7,    12,   23,   39,
                                        67,  118, 204, 343, 592,  1001, 1693, 2857};
  return t;
}

}  // namespace golden

namespace detail {

inline i64 count_cut_polytope(i64 m, i64 g, i64 F, bool med) {
  try {
    linear_system sys = med ? med_system(m) : kunz_system(m);
    sys = add_genus_cut(std::move(sys), g);
    sys = add_frobenius_cut(std::move(sys), F);
    return count_lattice_points(sys);
  } catch (const error& e) {
    if (e.code() == errc::frobenius_divisible) return 0;
    throw;
  }
}

inline i64 count_frobenius_polytope(i64 m, i64 F, bool med) {
  try {
    linear_system sys = med ? med_system(m) : kunz_system(m);
    return count_lattice_points(add_frobenius_cut(std::move(sys), F));
  } catch (const error& e) {
    if (e.code() == errc::frobenius_divisible) return 0;
    throw;
  }
}

}  // namespace detail

// --- individual sweeps -----------------------------------------------------

inline void verify_m3_closed_forms(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 g = 2; g <= opt.max_genus; ++g) {
    const i64 formula = count_m3_genus(g);
    const i64 poly = count_lattice_points(genus_system(3, g));
    if (formula == poly) { ++agree; continue; }
    rep.add({"m3 genus g=" + std::to_string(g), formula, poly, std::nullopt,
             verify_status::formula_discrepancy, false, ""});
  }
  if (agree) rep.add_sweep_ok("m3 genus formula vs enumeration, g=2.." +
                                  std::to_string(opt.max_genus),
                              agree);

  agree = 0;
  for (i64 g = 2; g <= opt.max_genus; ++g) {
    const i64 formula = count_m3_med_genus(g);
    const i64 poly = count_lattice_points(add_genus_cut(med_system(3), g));
    if (formula == poly) { ++agree; continue; }
    rep.add({"m3 MED genus g=" + std::to_string(g), formula, poly, std::nullopt,
             verify_status::formula_discrepancy, false, ""});
  }
  if (agree) rep.add_sweep_ok("m3 MED genus formula vs enumeration, g=2.." +
                                  std::to_string(opt.max_genus),
                              agree);

  agree = 0;
  for (i64 F = 1; F <= opt.max_frobenius; ++F) {
    if (F % 3 == 0) continue;
    const i64 formula = count_m3_frobenius(F);
    const i64 poly = detail::count_frobenius_polytope(3, F, false);
    if (formula == poly) { ++agree; continue; }
    rep.add({"m3 frobenius F=" + std::to_string(F), formula, poly, std::nullopt,
             verify_status::formula_discrepancy, false, ""});
  }
  if (agree) rep.add_sweep_ok("m3 Frobenius formula vs enumeration, F=1.." +
                                  std::to_string(opt.max_frobenius),
                              agree);
  // adjudication of the printed expression at F = 1
  {
    const auto printed = count_m3_frobenius_variant(1, transcription::printed);
    const i64 poly = detail::count_frobenius_polytope(3, 1, false);
    rep.add({"m3 frobenius printed form at F=1", printed, poly, std::nullopt,
             printed && *printed == poly ? verify_status::ok
                                         : verify_status::formula_discrepancy,
             true, "transcription entry m3-frobenius-F-1"});
  }

  agree = 0;
  for (i64 F = 1; F <= opt.max_frobenius; ++F) {
    if (F % 3 == 0) continue;
    const i64 formula = count_m3_med_frobenius(F);
    const i64 poly = detail::count_frobenius_polytope(3, F, true);
    if (formula == poly) { ++agree; continue; }
    rep.add({"m3 MED frobenius F=" + std::to_string(F), formula, poly, std::nullopt,
             verify_status::formula_discrepancy, false, ""});
  }
  if (agree) rep.add_sweep_ok("m3 MED Frobenius formula vs enumeration, F=1.." +
                                  std::to_string(opt.max_frobenius),
                              agree);
}

inline void verify_m3_uniqueness(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 g = 2; g <= opt.uniqueness_genus; ++g) {
    for (i64 F = g; F <= 2 * g - 1; ++F) {
      if (F % 3 == 0) continue;
      linear_system sys = add_frobenius_cut(genus_system(3, g), F);
      auto pts = enumerate_lattice_points(sys);
      const auto unique = unique_m3_semigroup(g, F);
      bool ok = false;
      if (pts.empty()) {
        ok = !unique.has_value();
      } else if (pts.size() == 1 && unique) {
        const kunz_coords expect = kunz_from_semigroup(*unique);
        ok = (pts[0] == expect.k);
      }
      if (ok) { ++agree; continue; }
      rep.add({"m3 uniqueness g=" + std::to_string(g) + " F=" + std::to_string(F),
               unique ? std::optional<i64>(1) : std::optional<i64>(0),
               static_cast<i64>(pts.size()), std::nullopt,
               verify_status::formula_discrepancy, false,
               "polytope must have exactly one point, equal to <3, F+3, 3g-F>"});
    }
  }
  if (agree) rep.add_sweep_ok("m3 (g,F) polytopes have the unique printed point, g<=" +
                                  std::to_string(opt.uniqueness_genus),
                              agree);
}

inline void verify_m4_genus(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 g = 3; g <= opt.max_genus; ++g) {
    const i64 formula = count_m4_genus(g);
    const i64 poly = count_lattice_points(genus_system(4, g));
    if (formula == poly) { ++agree; continue; }
    rep.add({"m4 genus g=" + std::to_string(g), formula, poly, std::nullopt,
             verify_status::formula_discrepancy, false, ""});
  }
  if (agree) rep.add_sweep_ok("m4 genus formula vs enumeration, g=3.." +
                                  std::to_string(opt.max_genus),
                              agree);
  {
    // the doubled '+ +' reading overshoots by floor(g/2) everywhere
    const i64 g = 10;
    const auto printed = count_m4_genus_variant(g, transcription::printed);
    const i64 poly = count_lattice_points(genus_system(4, g));
    rep.add({"m4 genus printed '+ +' reading at g=10", printed, poly, std::nullopt,
             printed && *printed == poly ? verify_status::ok
                                         : verify_status::formula_discrepancy,
             true, "transcription entry m4-genus-doubled-plus"});
  }
}

inline void verify_m4_regions(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 g = 9; g <= opt.max_genus; ++g) {
    const auto rc = region_counts_m4(g);
    const auto brute = region_counts_m4_brute(g);
    const i64 poly = count_lattice_points(genus_system(4, g));
    const bool regions_ok = rc.t_a == brute.t_a && rc.t_b == brute.t_b && rc.r == brute.r &&
                            rc.t_c == brute.t_c;
    if (regions_ok && rc.total() == poly) { ++agree; continue; }
    std::ostringstream note;
    note << "formula (" << rc.t_a << "," << rc.t_b << "," << rc.r << "," << rc.t_c
         << ") brute (" << brute.t_a << "," << brute.t_b << "," << brute.r << ","
         << brute.t_c << ")";
    rep.add({"m4 region decomposition g=" + std::to_string(g), rc.total(), poly, std::nullopt,
             verify_status::formula_discrepancy, false, note.str()});
  }
  if (agree) rep.add_sweep_ok(
      "m4 region formulas vs 2-d scans and T_A+T_B+R-T_C vs enumeration, g=9.." +
          std::to_string(opt.max_genus),
      agree);
}

inline void verify_box_formula(const verify_options& opt, verify_report& rep) {
  const i64 n = opt.box_grid_eighths;
  i64 agree = 0;
  bool bad = false;
  for (i64 na = 0; na <= n && !bad; ++na)
    for (i64 nb = na; nb <= n && !bad; ++nb)
      for (i64 nc = 0; nc <= n && !bad; ++nc)
        for (i64 nd = nc; nd <= n; ++nd) {
          rational a(na, 8), b(nb, 8), c(nc, 8), d(nd, 8);
          if (box_count(a, b, c, d) == box_count_brute(a, b, c, d)) { ++agree; continue; }
          rep.add({"box_count [" + a.str() + "," + b.str() + "]x[" + c.str() + "," + d.str() + "]",
                   box_count(a, b, c, d), box_count_brute(a, b, c, d), std::nullopt,
                   verify_status::formula_discrepancy, false, ""});
          bad = true;
          break;
        }
  if (agree) rep.add_sweep_ok("box_count vs brute scan on the 1/8 grid, endpoints 0.." +
                                  std::to_string(n) + "/8",
                              agree);
  {
    const i64 printed = box_count_variant(0, 2, 0, 3, transcription::printed);
    const i64 brute = box_count_brute(0, 2, 0, 3);
    rep.add({"box_count printed signs on [0,2]x[0,3]", printed, brute, std::nullopt,
             printed == brute ? verify_status::ok : verify_status::formula_discrepancy, true,
             "transcription entry box-count-signs"});
  }
}

inline void verify_m4_frobenius(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 F = 1; F <= opt.max_frobenius; ++F) {
    const i64 formula = count_m4_frobenius(F);
    const i64 poly = F % 4 == 0 ? 0 : detail::count_frobenius_polytope(4, F, false);
    if (formula == poly) { ++agree; continue; }
    rep.add({"m4 frobenius F=" + std::to_string(F), formula, poly, std::nullopt,
             verify_status::formula_discrepancy, false, ""});
  }
  if (agree) rep.add_sweep_ok("m4 Frobenius piecewise vs enumeration, F=1.." +
                                  std::to_string(opt.max_frobenius),
                              agree);
  {
    const i64 F = 21;
    const auto printed = count_m4_frobenius_variant(F, transcription::printed);
    const i64 poly = detail::count_frobenius_polytope(4, F, false);
    rep.add({"m4 frobenius printed 5F/6 tail at F=21", printed, poly, std::nullopt,
             printed && *printed == poly ? verify_status::ok
                                         : verify_status::formula_discrepancy,
             true,
             printed ? "transcription entry m4-frobenius-tail-5F-16"
                     : "printed term 5F/6 is not integral here; "
                       "transcription entry m4-frobenius-tail-5F-16"});
  }
  {
    const auto printed = count_m4_frobenius_variant(2, transcription::printed);
    rep.add({"m4 frobenius printed product at F=2", printed,
             detail::count_frobenius_polytope(4, 2, false), std::nullopt,
             printed && *printed == 0 ? verify_status::ok : verify_status::formula_discrepancy,
             true, "transcription entry m4-frobenius-small-F"});
  }
}

inline void verify_m4_genus_frobenius(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 g = 3; g <= opt.grid_genus; ++g) {
    for (i64 F = g; F <= 2 * g - 1; ++F) {
      const i64 formula = count_m4_genus_frobenius(g, F);
      const i64 poly = detail::count_cut_polytope(4, g, F, false);
      if (formula == poly) { ++agree; continue; }
      const auto* piece = m4_genus_frobenius_pieces().matching(g, F);
      rep.add({"m4 (g,F)=(" + std::to_string(g) + "," + std::to_string(F) + ")", formula, poly,
               std::nullopt, verify_status::formula_discrepancy, false,
               piece ? std::string("branch: ") + piece->name : "no branch matches (default 0)"});
    }
  }
  if (agree) rep.add_sweep_ok("m4 (g,F) piecewise vs cut polytopes, grid g<=" +
                                  std::to_string(opt.grid_genus),
                              agree);
  {
    // printed branch-9 guard misses (3,3)
    const i64 printed = m4_genus_frobenius_pieces(transcription::printed).eval(3, 3);
    const i64 poly = detail::count_cut_polytope(4, 3, 3, false);
    rep.add({"m4 (g,F) printed branch-9 guard at (3,3)", printed, poly, std::nullopt,
             printed == poly ? verify_status::ok : verify_status::formula_discrepancy, true,
             "transcription entry m4-genus-frobenius-branch9-guard"});
  }
}

inline void verify_m4_med(const verify_options& opt, verify_report& rep) {
  i64 agree = 0;
  for (i64 g = 3; g <= opt.grid_genus; ++g) {
    for (i64 F = g; F <= 2 * g - 1; ++F) {
      const i64 formula = count_m4_med_genus_frobenius(g, F);
      const i64 poly = detail::count_cut_polytope(4, g, F, true);
      if (formula == poly) { ++agree; continue; }
      rep.add({"m4 MED (g,F)=(" + std::to_string(g) + "," + std::to_string(F) + ")", formula,
               poly, std::nullopt, verify_status::formula_discrepancy, false, ""});
    }
  }
  if (agree) rep.add_sweep_ok("m4 MED count vs cut polytopes, grid g<=" +
                                  std::to_string(opt.grid_genus),
                              agree);

  // upper-bound dominance wherever the embedding-dimension-4 case applies
  i64 dominance = 0;
  for (i64 g = 3; g <= 12; ++g)
    for (i64 F = g; F <= 2 * g - 1; ++F) {
      const i64 ub = med4_pair_upper_bound(g, F);
      const i64 exact = count_m4_med_genus_frobenius(g, F);
      if (ub >= exact) { ++dominance; continue; }
      rep.add({"m4 MED upper bound (g,F)=(" + std::to_string(g) + "," + std::to_string(F) + ")",
               ub, exact, std::nullopt, verify_status::formula_discrepancy, false,
               "pair count must dominate the exact MED count"});
    }
  if (dominance) rep.add_sweep_ok("m4 MED pair upper bound dominates exact count, g<=12",
                                  dominance);

  // adjudication of the printed 8-branch table
  {
    i64 mismatches = 0, cases = 0;
    std::string first;
    const auto& printed = m4_med_genus_frobenius_printed_pieces();
    for (i64 g = 3; g <= opt.grid_genus; ++g) {
      for (i64 F = g; F <= 2 * g - 1; ++F) {
        ++cases;
        const i64 v = printed.eval(g, F);
        const i64 poly = detail::count_cut_polytope(4, g, F, true);
        if (v != poly) {
          ++mismatches;
          if (first.empty()) {
            const auto* piece = printed.matching(g, F);
            first = "first at (g,F)=(" + std::to_string(g) + "," + std::to_string(F) +
                    "): " + (piece ? piece->name : "no branch (default 0)");
          }
        }
      }
    }
    rep.add({"m4 MED printed 8-branch table over the grid", std::nullopt, std::nullopt,
             std::nullopt,
             mismatches == 0 ? verify_status::ok : verify_status::formula_discrepancy, true,
             std::to_string(mismatches) + " of " + std::to_string(cases) +
                 " grid points disagree with enumeration; " + first +
                 "; transcription entry m4-med-genus-frobenius-table"});
  }
}

inline void verify_partitions(const verify_options&, verify_report& rep) {
  i64 agree = 0;
  for (i64 m = 2; m <= 5; ++m) {
    for (i64 g = m - 1; g <= 12; ++g) {
      const i64 total = count_lattice_points(genus_system(m, g));
      i64 sum = 0;
      for (i64 F = g; F <= 2 * g - 1; ++F)
        sum = checked_add(sum, detail::count_cut_polytope(m, g, F, false));
      if (sum == total) { ++agree; continue; }
      rep.add({"partition by F: m=" + std::to_string(m) + " g=" + std::to_string(g), sum, total,
               std::nullopt, verify_status::formula_discrepancy, false, ""});
    }
  }
  if (agree) rep.add_sweep_ok("sum over F of (g,F) counts equals genus count, m<=5 g<=12", agree);

  agree = 0;
  for (i64 m = 2; m <= 5; ++m) {
    for (i64 F = 1; F <= 30; ++F) {
      if (F % m == 0) continue;
      const i64 total = detail::count_frobenius_polytope(m, F, false);
      i64 sum = 0;
      for (i64 g = 1; g <= F; ++g)
        sum = checked_add(sum, detail::count_cut_polytope(m, g, F, false));
      if (sum == total) { ++agree; continue; }
      rep.add({"partition by g: m=" + std::to_string(m) + " F=" + std::to_string(F), sum, total,
               std::nullopt, verify_status::formula_discrepancy, false, ""});
    }
  }
  if (agree) rep.add_sweep_ok("sum over g of (g,F) counts equals Frobenius count, m<=5 F<=30",
                              agree);
}

// Census tables re-derived by enumeration and oracle, with the published
// entries as golden data and the known misprints reported as documented.
inline void verify_census_tables(const verify_options& opt, verify_report& rep) {
  const auto levels = enumerate_by_genus(std::min<i64>(opt.oracle_depth, 15));
  const i64 depth = static_cast<i64>(levels.size()) - 1;

  i64 agree = 0;
  for (const auto& row : golden::census_table()) {
    i64 row_sum = 0;
    for (std::size_t idx = 0; idx < row.cells.size(); ++idx) {
      const i64 m = static_cast<i64>(idx) + 2;
      const i64 poly = count_lattice_points(genus_system(m, row.g));
      std::optional<i64> oracle;
      if (row.g <= depth) oracle = count_filtered(levels, row.g, {m, std::nullopt, false});
      row_sum = checked_add(row_sum, poly);
      const bool cell_ok = poly == row.cells[idx] && (!oracle || *oracle == poly);
      if (cell_ok) { ++agree; continue; }
      rep.add({"census cell g=" + std::to_string(row.g) + " m=" + std::to_string(m),
               row.cells[idx], poly, oracle,
               oracle && *oracle != poly ? verify_status::oracle_discrepancy
                                         : verify_status::formula_discrepancy,
               false, "published census entry"});
    }
    if (row_sum == row.printed_total) {
      ++agree;
    } else {
      rep.add({"census printed row total g=" + std::to_string(row.g), row.printed_total, row_sum,
               row.g <= depth ? std::optional<i64>(static_cast<i64>(
                                    levels[static_cast<std::size_t>(row.g)].semigroups.size()))
                              : std::nullopt,
               verify_status::formula_discrepancy, row.g == 6,
               row.g == 6 ? "known misprint: the printed total 33 conflicts with its own row sum"
                          : "published row total"});
    }
  }
  if (agree) rep.add_sweep_ok("census table cells vs enumeration and oracle, g<=15", agree);

  // row totals against the reference sequence
  i64 totals_ok = 0;
  for (i64 g = 0; g <= depth && g <= 15; ++g) {
    const i64 oracle = static_cast<i64>(levels[static_cast<std::size_t>(g)].semigroups.size());
    if (oracle == golden::genus_totals()[static_cast<std::size_t>(g)]) { ++totals_ok; continue; }
    rep.add({"oracle level size g=" + std::to_string(g),
             golden::genus_totals()[static_cast<std::size_t>(g)], std::nullopt, oracle,
             verify_status::oracle_discrepancy, false, ""});
  }
  if (totals_ok) rep.add_sweep_ok("oracle level sizes match the reference totals", totals_ok);

  // MED census; row 15 is adjudicated cell by cell
  static const std::set<std::pair<i64, i64>> suspect = {{15, 10}, {15, 11}, {15, 12}};
  agree = 0;
  for (const auto& row : golden::med_census_table()) {
    for (std::size_t idx = 0; idx < row.cells.size(); ++idx) {
      const i64 m = static_cast<i64>(idx) + 2;
      const i64 poly = count_lattice_points(add_genus_cut(med_system(m), row.g));
      std::optional<i64> oracle;
      if (row.g <= depth) oracle = count_filtered(levels, row.g, {m, std::nullopt, true});
      const bool matches_printed = poly == row.cells[idx];
      const bool matches_oracle = !oracle || *oracle == poly;
      if (matches_printed && matches_oracle) { ++agree; continue; }
      const bool documented = suspect.count({row.g, m}) > 0 && matches_oracle;
      rep.add({"MED census cell g=" + std::to_string(row.g) + " m=" + std::to_string(m),
               row.cells[idx], poly, oracle,
               !matches_oracle ? verify_status::oracle_discrepancy
                               : verify_status::formula_discrepancy,
               documented,
               documented ? "published MED census entry is a misprint; enumeration and oracle agree"
                          : "published MED census entry"});
    }
  }
  if (agree) rep.add_sweep_ok("MED census cells vs enumeration and oracle, g<=15", agree);
}

// Set-level agreement between the Kunz polytope and the tree: every lattice
// point maps to an oracle semigroup of the right multiplicity, and vice versa.
inline void verify_bijection(const verify_options& opt, verify_report& rep) {
  const i64 depth = std::min<i64>(opt.oracle_depth, 12);
  const auto levels = enumerate_by_genus(depth);
  i64 agree = 0;
  for (i64 g = 1; g <= depth; ++g) {
    for (i64 m = 2; m <= g + 1; ++m) {
      std::set<std::vector<i64>> from_polytope;
      for (const auto& pt : enumerate_lattice_points(genus_system(m, g)))
        from_polytope.insert(semigroup_from_kunz({m, pt}).generators);
      std::set<std::vector<i64>> from_oracle;
      for (const auto& s : levels[static_cast<std::size_t>(g)].semigroups)
        if (s.multiplicity == m) from_oracle.insert(s.generators);
      if (from_polytope == from_oracle) { ++agree; continue; }
      rep.add({"bijection g=" + std::to_string(g) + " m=" + std::to_string(m),
               static_cast<i64>(from_polytope.size()), std::nullopt,
               static_cast<i64>(from_oracle.size()), verify_status::oracle_discrepancy, false,
               "set equality of mapped lattice points and oracle semigroups"});
    }
  }
  if (agree) rep.add_sweep_ok("polytope points map onto oracle semigroups (set equality), g<=" +
                                  std::to_string(depth),
                              agree);

  // MED characterization: e = m filter vs the MED system
  agree = 0;
  for (i64 g = 1; g <= depth; ++g) {
    for (i64 m = 2; m <= std::min<i64>(6, g + 1); ++m) {
      const i64 poly = count_lattice_points(add_genus_cut(med_system(m), g));
      const i64 oracle = count_filtered(levels, g, {m, std::nullopt, true});
      if (poly == oracle) { ++agree; continue; }
      rep.add({"MED characterization g=" + std::to_string(g) + " m=" + std::to_string(m),
               std::nullopt, poly, oracle, verify_status::oracle_discrepancy, false, ""});
    }
  }
  if (agree) rep.add_sweep_ok("MED system counts match the e=m oracle filter, m<=6 g<=" +
                                  std::to_string(depth),
                              agree);
}

inline void verify_column_identities(const verify_options&, verify_report& rep) {
  i64 agree = 0;
  bool bad = false;
  for (i64 g = 1; g <= 40; ++g) {
    if (count_lattice_points(genus_system(2, g)) == 1) { ++agree; continue; }
    rep.add({"column m=2 g=" + std::to_string(g), 1,
             count_lattice_points(genus_system(2, g)), std::nullopt,
             verify_status::formula_discrepancy, false, ""});
    bad = true;
  }
  for (i64 g = 1; g <= 15; ++g) {
    if (count_lattice_points(genus_system(g + 1, g)) == 1) { ++agree; continue; }
    rep.add({"column m=g+1 at g=" + std::to_string(g), 1,
             count_lattice_points(genus_system(g + 1, g)), std::nullopt,
             verify_status::formula_discrepancy, false, ""});
    bad = true;
  }
  for (i64 g = 1; g <= 12; ++g) {
    for (i64 m = g + 2; m <= g + 3; ++m) {
      if (count_lattice_points(genus_system(m, g)) == 0) { ++agree; continue; }
      rep.add({"empty above the diagonal m=" + std::to_string(m) + " g=" + std::to_string(g), 0,
               count_lattice_points(genus_system(m, g)), std::nullopt,
               verify_status::formula_discrepancy, false, ""});
      bad = true;
    }
  }
  if (agree && !bad)
    rep.add_sweep_ok("column identities (m=2, m=g+1, m>g+1)", agree);
  else if (agree)
    rep.add_sweep_ok("column identities, remaining cases", agree);
}

inline verify_report run_verify(const verify_options& opt = {}) {
  verify_report rep;
  verify_m3_closed_forms(opt, rep);
  verify_m3_uniqueness(opt, rep);
  verify_m4_genus(opt, rep);
  verify_m4_regions(opt, rep);
  verify_box_formula(opt, rep);
  verify_m4_frobenius(opt, rep);
  verify_m4_genus_frobenius(opt, rep);
  verify_m4_med(opt, rep);
  verify_partitions(opt, rep);
  verify_census_tables(opt, rep);
  verify_bijection(opt, rep);
  verify_column_identities(opt, rep);
  return rep;
}

}  // namespace kunzcount
