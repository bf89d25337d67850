#pragma once

// Census tables: counts by (genus, multiplicity), plain or MED, computed
// either by lattice enumeration or from oracle levels.

#include <vector>

#include "kunzcount/enumerate.hpp"
#include "kunzcount/linear_system.hpp"
#include "kunzcount/oracle.hpp"

namespace kunzcount {

enum class census_source { enumeration, formula, oracle };

inline const char* census_source_name(census_source s) {
  switch (s) {
    case census_source::enumeration: return "enumeration";
    case census_source::formula: return "formula";
    case census_source::oracle: return "oracle";
  }
  return "?";
}

struct census_row {
  i64 g = 0;
  std::vector<i64> counts;  // index 0 is m = 2, up to m = g + 1
  i64 total = 0;
};

inline i64 count_for_cell(i64 m, i64 g, bool med) {
  linear_system sys = med ? add_genus_cut(med_system(m), g) : genus_system(m, g);
  return count_lattice_points(sys);
}

inline std::vector<census_row> census_by_genus(i64 g_max, bool med,
                                               census_source source = census_source::enumeration) {
  std::vector<census_row> rows;
  std::vector<genus_level> levels;
  if (source == census_source::oracle) levels = enumerate_by_genus(g_max);
  for (i64 g = 1; g <= g_max; ++g) {
    census_row row;
    row.g = g;
    for (i64 m = 2; m <= g + 1; ++m) {
      i64 c = 0;
      if (source == census_source::oracle)
        c = count_filtered(levels, g, {m, std::nullopt, med});
      else
        c = count_for_cell(m, g, med);
      row.counts.push_back(c);
      row.total = checked_add(row.total, c);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kunzcount
