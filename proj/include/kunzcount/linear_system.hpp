#pragma once

// Integer linear inequality/equality systems over the Kunz coordinates
// x_1 ... x_{m-1}, and the builders for the four system families used by
// the counting routines:
//
//   kunz_system(m)       all multiplicity-m semigroups (unbounded)
//   genus_system(m, g)   kunz rows plus the cut  sum x_i = g
//   frobenius_system(m,F) kunz rows plus  m x_i + i <= F + m  for all i and
//                        the equality  m x_{k*} + k* = F + m, k* = F mod m
//   med_system(m)        maximal-embedding-dimension variant (strict rows)
//
// Cuts compose: add_genus_cut / add_frobenius_cut can be applied to any of
// these (once each), so genus+Frobenius and MED+cut queries are expressible.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kunzcount/arith.hpp"
#include "kunzcount/errors.hpp"

namespace kunzcount {

enum class relation { ge, eq, le };

inline const char* relation_text(relation r) {
  switch (r) {
    case relation::ge: return ">=";
    case relation::eq: return "=";
    case relation::le: return "<=";
  }
  return "?";
}

struct linear_constraint {
  std::vector<i64> coeffs;
  relation rel = relation::ge;
  i64 rhs = 0;
};

// Provenance of a system: which family it came from and which cuts are
// present. Bound derivation and duplicate-cut detection read this.
struct system_label {
  i64 m = 0;
  bool med = false;
  std::optional<i64> genus;
  std::optional<i64> frobenius;

  std::string text() const {
    std::string s = (med ? "med(m=" : "kunz(m=") + std::to_string(m) + ")";
    if (genus) s += "+genus(" + std::to_string(*genus) + ")";
    if (frobenius) s += "+frobenius(" + std::to_string(*frobenius) + ")";
    return s;
  }
};

struct linear_system {
  i64 vars = 0;  // m - 1
  std::vector<linear_constraint> rows;
  system_label label;
};

namespace detail {

inline linear_system base_system(i64 m, bool med) {
  if (m < 2) raise(errc::bad_multiplicity, "multiplicity must be >= 2");
  linear_system sys;
  sys.vars = m - 1;
  sys.label.m = m;
  sys.label.med = med;
  for (i64 i = 1; i < m; ++i) {
    linear_constraint c;
    c.coeffs.assign(static_cast<std::size_t>(m - 1), 0);
    c.coeffs[static_cast<std::size_t>(i - 1)] = 1;
    c.rel = relation::ge;
    c.rhs = 1;
    sys.rows.push_back(std::move(c));
  }
  for (i64 i = 1; i < m; ++i) {
    for (i64 j = i; j < m; ++j) {
      if (i + j == m) continue;  // no row for pairs summing to m
      linear_constraint c;
      c.coeffs.assign(static_cast<std::size_t>(m - 1), 0);
      c.coeffs[static_cast<std::size_t>(i - 1)] += 1;
      c.coeffs[static_cast<std::size_t>(j - 1)] += 1;
      if (i + j <= m - 1) {
        c.coeffs[static_cast<std::size_t>(i + j - 1)] -= 1;
        c.rhs = med ? 1 : 0;
      } else {
        c.coeffs[static_cast<std::size_t>(i + j - m - 1)] -= 1;
        c.rhs = med ? 0 : -1;
      }
      c.rel = relation::ge;
      sys.rows.push_back(std::move(c));
    }
  }
  return sys;
}

}  // namespace detail

inline linear_system kunz_system(i64 m) { return detail::base_system(m, false); }
inline linear_system med_system(i64 m) { return detail::base_system(m, true); }

inline linear_system add_genus_cut(linear_system sys, i64 g) {
  if (sys.label.genus) raise(errc::duplicate_cut, "genus cut already present");
  linear_constraint c;
  c.coeffs.assign(static_cast<std::size_t>(sys.vars), 1);
  c.rel = relation::eq;
  c.rhs = g;
  sys.rows.push_back(std::move(c));
  sys.label.genus = g;
  return sys;
}

inline linear_system add_frobenius_cut(linear_system sys, i64 F) {
  if (sys.label.frobenius) raise(errc::duplicate_cut, "frobenius cut already present");
  const i64 m = sys.label.m;
  if (F < 1) raise(errc::domain_error, "Frobenius number must be >= 1");
  if (F % m == 0)
    raise(errc::frobenius_divisible,
          std::to_string(m) + " divides F = " + std::to_string(F) + "; count is 0");
  for (i64 i = 1; i < m; ++i) {
    linear_constraint c;
    c.coeffs.assign(static_cast<std::size_t>(sys.vars), 0);
    c.coeffs[static_cast<std::size_t>(i - 1)] = m;
    c.rel = relation::le;
    c.rhs = checked_sub(checked_add(F, m), i);  // m x_i + i <= F + m
    sys.rows.push_back(std::move(c));
  }
  const i64 kstar = F % m;
  linear_constraint eq;
  eq.coeffs.assign(static_cast<std::size_t>(sys.vars), 0);
  eq.coeffs[static_cast<std::size_t>(kstar - 1)] = m;
  eq.rel = relation::eq;
  eq.rhs = checked_sub(checked_add(F, m), kstar);  // m x_{k*} + k* = F + m
  sys.rows.push_back(std::move(eq));
  sys.label.frobenius = F;
  return sys;
}

inline linear_system genus_system(i64 m, i64 g) { return add_genus_cut(kunz_system(m), g); }
inline linear_system frobenius_system(i64 m, i64 F) {
  return add_frobenius_cut(kunz_system(m), F);
}

// Plain-text debug serialization, one constraint per line: "c1 c2 ... cn REL rhs".
inline std::string to_debug_text(const linear_system& sys) {
  std::ostringstream out;
  for (const auto& row : sys.rows) {
    for (i64 c : row.coeffs) out << c << ' ';
    out << relation_text(row.rel) << ' ' << row.rhs << '\n';
  }
  return out.str();
}

}  // namespace kunzcount
