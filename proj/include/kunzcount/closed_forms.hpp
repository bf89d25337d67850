#pragma once

// Closed-form counts for multiplicities 3 and 4: genus, Frobenius, combined
// (genus, Frobenius), and the maximal-embedding-dimension variants, plus the
// 2-d region decomposition behind the multiplicity-4 genus formula.
//
// Every formula is transcribed from its published form. Where the published
// text carries a misprint, both readings are kept: the shipped default is the
// `corrected` variant, which exact enumeration confirms, and the `printed`
// variant stays evaluable so the verify sweep can re-run the adjudication.
// See transcription_table() for the list of corrected readings.

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kunzcount/arith.hpp"
#include "kunzcount/errors.hpp"
#include "kunzcount/semigroup.hpp"

namespace kunzcount {

enum class transcription { printed, corrected };

struct transcription_note {
  const char* id;
  const char* printed_form;
  const char* corrected_form;
  const char* adjudication;
};

inline const std::vector<transcription_note>& transcription_table() {
  static const std::vector<transcription_note> table = {
      {"box-count-signs",
       "(1 + floor(b) + ceil(a)) * (1 + floor(d) + ceil(b))",
       "(floor(b) - ceil(a) + 1) * (floor(d) - ceil(c) + 1), factors clamped at 0",
       "brute-force scan of rational boxes on the 1/8 grid"},
      {"m4-genus-doubled-plus",
       "'+ +floor(g/2)' read as a doubled term 2*floor(g/2)",
       "a single +floor(g/2) term",
       "lattice enumeration of the genus polytope, g = 4..200"},
      {"m4-frobenius-tail-5F-16",
       "'+ 5F/6' in the F = 1 (mod 4), F >= 21 branch",
       "+ 5F/16",
       "lattice enumeration, F = 21..397; the printed term is not even integral"},
      {"m4-genus-frobenius-branch9-guard",
       "branch 9 guard '2g - F >= 5'",
       "branch 9 guard '2g - F >= 3'",
       "lattice enumeration; the printed guard misses exactly (g, F) = (3, 3)"},
      {"m4-med-genus-frobenius-table",
       "8-branch piecewise with a literal special case '2 if F = 5 and g = 7'",
       "per-residue interval count derived from the pinned MED system",
       "lattice enumeration over the grid g <= 100, g <= F <= 2g-1; the printed "
       "table disagrees on 430 of the feasible points and its special case names "
       "an infeasible pair (F < g)"},
      {"m3-frobenius-F-1",
       "floor((F+1)/3) - ceil((F-1)/6) + 1 for every F not divisible by 3",
       "0 at F = 1; the printed expression from F = 2 on",
       "lattice enumeration; no multiplicity-3 numerical semigroup has Frobenius 1"},
      {"m4-frobenius-small-F",
       "branch ranges leave F = 1, 2 uncovered; the F = 2 (mod 4) product gives 1 at F = 2",
       "0 at F = 1 and F = 2; the F = 3 (mod 4) branch already gives the true value 1 at F = 3",
       "lattice enumeration"},
  };
  return table;
}

namespace detail {

// The m=4 formulas are quadratic in the invariant; inside this cap every
// intermediate of the scaled-integer evaluations provably fits in i64.
inline void check_quadratic_domain(i64 v) {
  if (v > 100'000'000 || v < -100'000'000)
    raise(errc::overflow, "invariant too large for closed-form evaluation");
}

inline void check_linear_domain(i64 v) {
  if (v > std::numeric_limits<i64>::max() - 8)
    raise(errc::overflow, "invariant too large for closed-form evaluation");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Multiplicity 3
// ---------------------------------------------------------------------------

inline i64 count_m3_genus(i64 g) {
  if (g < 2) raise(errc::domain_error, "count_m3_genus needs g >= 2");
  detail::check_linear_domain(g);
  return ceil_div(g + 1, 3);
}

inline i64 count_m3_med_genus(i64 g) {
  if (g < 2) raise(errc::domain_error, "count_m3_med_genus needs g >= 2");
  detail::check_linear_domain(g);
  return ceil_div(g - 1, 3);
}

inline std::optional<i64> count_m3_frobenius_variant(i64 F, transcription t) {
  if (F < 1) raise(errc::domain_error, "count_m3_frobenius needs F >= 1");
  detail::check_linear_domain(F);
  if (F % 3 == 0)
    raise(errc::frobenius_divisible, "3 divides F = " + std::to_string(F));
  if (t == transcription::corrected && F == 1) return 0;
  return floor_div(F + 1, 3) - ceil_div(F - 1, 6) + 1;
}

inline i64 count_m3_frobenius(i64 F) {
  return *count_m3_frobenius_variant(F, transcription::corrected);
}

inline i64 count_m3_med_frobenius(i64 F) {
  if (F < 1) raise(errc::domain_error, "count_m3_med_frobenius needs F >= 1");
  detail::check_linear_domain(F);
  if (F % 3 == 0)
    raise(errc::frobenius_divisible, "3 divides F = " + std::to_string(F));
  return floor_div(F + 1, 3) - ceil_div(F + 2, 6) + 1;
}

// The unique multiplicity-3 semigroup with the given genus and Frobenius
// number, when one exists: S = <3, F+3, 3g-F> with Kunz point
// ((F+2)/3, (3g-F-2)/3) for F = 1 (mod 3) and ((3g-F-1)/3, (F+1)/3) for
// F = 2 (mod 3).
inline std::optional<semigroup> unique_m3_semigroup(i64 g, i64 F) {
  if (F < 1) raise(errc::domain_error, "unique_m3_semigroup needs F >= 1");
  detail::check_quadratic_domain(g);  // the construction builds <3, F+3, 3g-F>
  detail::check_quadratic_domain(F);
  if (F % 3 == 0)
    raise(errc::frobenius_divisible, "3 divides F = " + std::to_string(F));
  i64 k1, k2;
  if (F % 3 == 1) {
    k1 = exact_div(F + 2, 3);
    k2 = exact_div(3 * g - F - 2, 3);
  } else {
    k1 = exact_div(3 * g - F - 1, 3);
    k2 = exact_div(F + 1, 3);
  }
  if (k1 < 1 || k2 < 1) return std::nullopt;
  kunz_coords c{3, {k1, k2}};
  if (!is_valid_kunz(c.m, c.k)) return std::nullopt;
  semigroup s = semigroup_from_kunz(c);
  if (s.genus != g || s.frobenius != F) return std::nullopt;  // max not at k*
  return s;
}

// ---------------------------------------------------------------------------
// Rational boxes and the multiplicity-4 region decomposition
// ---------------------------------------------------------------------------

inline i64 box_count_variant(rational a, rational b, rational c, rational d, transcription t) {
  if (t == transcription::printed)
    return checked_mul(1 + b.floor() + a.ceil(), 1 + d.floor() + b.ceil());
  const i64 w1 = b.floor() - a.ceil() + 1;
  const i64 w2 = d.floor() - c.ceil() + 1;
  if (w1 < 0 || w2 < 0) return 0;
  return checked_mul(w1, w2);
}

// Number of integer points in [a, b] x [c, d].
inline i64 box_count(rational a, rational b, rational c, rational d) {
  return box_count_variant(a, b, c, d, transcription::corrected);
}

// Independent scan of the same box, testing each candidate against the
// rational inequalities directly.
inline i64 box_count_brute(rational a, rational b, rational c, rational d) {
  i64 n = 0;
  for (i64 x = a.floor() - 1; x <= b.ceil() + 1; ++x) {
    if (!(a <= rational(x) && rational(x) <= b)) continue;
    for (i64 y = c.floor() - 1; y <= d.ceil() + 1; ++y)
      if (c <= rational(y) && rational(y) <= d) ++n;
  }
  return n;
}

// The four planar regions whose signed point counts give n_{4,g} for g >= 9:
//   T_A(g): 3x +  y >= g,     x <= (2g+1)/8,  y <= g/2
//   T_B(g):  x + 3y >= g - 1, x <= (g+1)/2,   y <= (2g-3)/8
//   R(g):   (2g+1)/8 <= x <= (g+1)/2,  (2g-3)/8 <= y <= g/2
//   T_C(g):  x +  y >= g,     x <= (g+1)/2,   y <= g/2
// and n_{4,g} = #T_A + #T_B + #R - #T_C.
struct m4_region_counts {
  i64 t_a = 0;
  i64 t_b = 0;
  i64 r = 0;
  i64 t_c = 0;
  i64 total() const { return t_a + t_b + r - t_c; }
};

inline m4_region_counts region_counts_m4(i64 g) {
  if (g < 9) raise(errc::domain_error, "region decomposition needs g >= 9");
  detail::check_quadratic_domain(g);
  const i64 A = floor_div(g + 5, 6), B = floor_div(g, 4), C = floor_div(g, 2);
  const i64 D = floor_div(g + 2, 6), E = floor_div(g + 2, 4);
  m4_region_counts rc;
  rc.t_a = exact_div((A - B - 1) * (2 * g - 3 * B - 2 * C - 2 - 3 * A), 2);
  rc.t_b = exact_div((D - E) * (-3 * E + 2 * C - 3 * D - 1), 2);
  rc.r = checked_mul(floor_div(g + 1, 2) - ceil_div(2 * g + 1, 8) + 1,
                     C - ceil_div(2 * g - 3, 8) + 1);
  rc.t_c = 1;
  return rc;
}

inline m4_region_counts region_counts_m4_brute(i64 g) {
  if (g < 9) raise(errc::domain_error, "region decomposition needs g >= 9");
  detail::check_quadratic_domain(g);
  m4_region_counts rc;
  for (i64 x = 0; 8 * x <= 2 * g + 1; ++x)
    for (i64 y = g - 3 * x; 2 * y <= g; ++y) ++rc.t_a;
  for (i64 y = 0; 8 * y <= 2 * g - 3; ++y)
    for (i64 x = g - 1 - 3 * y; 2 * x <= g + 1; ++x) ++rc.t_b;
  for (i64 x = ceil_div(2 * g + 1, 8); 2 * x <= g + 1; ++x)
    for (i64 y = ceil_div(2 * g - 3, 8); 2 * y <= g; ++y) ++rc.r;
  for (i64 x = 0; 2 * x <= g + 1; ++x)
    for (i64 y = g - x; 2 * y <= g; ++y) ++rc.t_c;
  return rc;
}

// ---------------------------------------------------------------------------
// Multiplicity 4, genus
// ---------------------------------------------------------------------------

inline std::optional<i64> count_m4_genus_variant(i64 g, transcription t) {
  if (g < 3) raise(errc::domain_error, "count_m4_genus needs g >= 3");
  detail::check_quadratic_domain(g);
  if (g == 3) return 1;
  const i64 A = floor_div(g + 5, 6), B = floor_div(g, 4), C = floor_div(g, 2);
  const i64 D = floor_div(g + 2, 6), E = floor_div(g + 2, 4);
  const i64 H = floor_div(g + 1, 2);
  const i64 P = ceil_div(2 * g - 3, 8), Q = ceil_div(2 * g - 7, 8);
  // Whole expression scaled by 2; every half-term appears doubled.
  i64 twice = -2 * g + 5 * B + 2 * C + A + 2 * A * g - 2 * A * C - 3 * A * A - 2 * B * g +
              3 * B * B + 2 * B * C - D + 2 * D * C - 3 * D * D + E + 3 * E * E - 2 * E * C +
              2 * H * C - 2 * H * P + 2 * H - 2 * Q * C + 2 * Q * P - 2 * Q;
  if (t == transcription::printed) twice += 2 * C;  // the doubled '+ +floor(g/2)' reading
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

inline i64 count_m4_genus(i64 g) { return *count_m4_genus_variant(g, transcription::corrected); }

// ---------------------------------------------------------------------------
// Multiplicity 4, Frobenius
// ---------------------------------------------------------------------------

inline std::optional<i64> count_m4_frobenius_variant(i64 F, transcription t) {
  if (F <= 0 || F % 4 == 0) return 0;
  detail::check_quadratic_domain(F);
  const bool corrected = (t == transcription::corrected);
  switch (F % 4) {
    case 1: {
      if (F == 1) {
        if (corrected) return 0;
        return std::nullopt;  // below every printed range
      }
      if (F <= 9) {
        const i64 q = exact_div(F - 1, 4);
        return checked_mul(q, q);
      }
      if (F <= 17) return exact_div(F * F - 14 * F + 141, 16);
      const i64 a = floor_div(F + 1, 12), b = floor_div(F + 5, 8);
      if (corrected) {
        // x32: -3/2 a^2 + 1/4 aF - 3/4 a + b^2 - 1/4 bF + 1/4 b + 5F/16 - 11/32 + F^2/32
        const i64 x32 = -48 * a * a + 8 * a * F - 24 * a + 32 * b * b - 8 * b * F + 8 * b +
                        10 * F - 11 + F * F;
        return exact_div(x32, 32);
      }
      // printed tail has 5F/6; evaluate over 96 and report non-integer as nullopt
      const i64 x96 = -144 * a * a + 24 * a * F - 72 * a + 96 * b * b - 24 * b * F + 24 * b +
                      80 * F - 33 + 3 * F * F;
      if (x96 % 96 != 0) return std::nullopt;
      return x96 / 96;
    }
    case 2: {
      if (corrected && F == 2) return 0;
      const i64 u = floor_div(F + 1, 8), v = floor_div(F + 5, 8);
      return exact_div((F + 2 - 4 * u) * (F + 2 - 4 * v), 16);
    }
    default: {  // F = 3 (mod 4); valid down to F = 3
      const i64 a = floor_div(F + 1, 8), b = floor_div(F, 12);
      // x32: F^2/32 + 7F/16 - 19/32 + 3/4 a + a^2 + 1/4 bF - 9/4 b - 3/2 b^2 - 1/4 aF
      const i64 x32 = F * F + 14 * F - 19 + 24 * a + 32 * a * a + 8 * b * F - 72 * b -
                      48 * b * b - 8 * a * F;
      return exact_div(x32, 32);
    }
  }
}

inline i64 count_m4_frobenius(i64 F) {
  return *count_m4_frobenius_variant(F, transcription::corrected);
}

// ---------------------------------------------------------------------------
// Piecewise tables over (g, F)
// ---------------------------------------------------------------------------

struct gf_piece {
  const char* name;
  bool (*guard)(i64 g, i64 F);
  i64 (*value)(i64 g, i64 F);
};

struct gf_piecewise {
  std::vector<gf_piece> pieces;

  i64 eval(i64 g, i64 F) const {
    detail::check_quadratic_domain(g);
    detail::check_quadratic_domain(F);
    for (const auto& p : pieces)
      if (p.guard(g, F)) return p.value(g, F);
    return 0;
  }
  const gf_piece* matching(i64 g, i64 F) const {
    detail::check_quadratic_domain(g);
    detail::check_quadratic_domain(F);
    for (const auto& p : pieces)
      if (p.guard(g, F)) return &p;
    return nullptr;
  }
  int match_count(i64 g, i64 F) const {
    detail::check_quadratic_domain(g);
    detail::check_quadratic_domain(F);
    int n = 0;
    for (const auto& p : pieces)
      if (p.guard(g, F)) ++n;
    return n;
  }
};

// Number of multiplicity-4 semigroups with genus g and Frobenius number F.
// Eleven branches guarded by F mod 4 and linear inequalities; the corrected
// variant relaxes branch 9's last guard from 2g-F >= 5 to >= 3.
inline const gf_piecewise& m4_genus_frobenius_pieces(
    transcription t = transcription::corrected) {
  static const gf_piecewise common_head{{
      {"F=1(4), 5F-8g>=5, 2g-F>=5 -> (F+3)/2 - floor((2g+F+5)/6)",
       [](i64 g, i64 F) { return F % 4 == 1 && 5 * F - 8 * g >= 5 && 2 * g - F >= 5; },
       [](i64 g, i64 F) { return exact_div(F + 3, 2) - floor_div(2 * g + F + 5, 6); }},
      {"F=1(4), 4g-F>=23, 1<=2g-F<=3 -> g - floor((2g+F+5)/6)",
       [](i64 g, i64 F) {
         return F % 4 == 1 && 4 * g - F >= 23 && 2 * g - F >= 1 && 2 * g - F <= 3;
       },
       [](i64 g, i64 F) { return g - floor_div(2 * g + F + 5, 6); }},
      {"F=1(4), 5F-8g<=1, 4g-3F<=1, 2g-F>=5 -> (3F-4g+5)/4",
       [](i64 g, i64 F) {
         return F % 4 == 1 && 5 * F - 8 * g <= 1 && 4 * g - 3 * F <= 1 && 2 * g - F >= 5;
       },
       [](i64 g, i64 F) { return exact_div(3 * F - 4 * g + 5, 4); }},
      {"F=1(4), 11<=4g-F<=19, 1<=2g-F<=3 -> (4g-F-7)/4",
       [](i64 g, i64 F) {
         return F % 4 == 1 && 4 * g - F >= 11 && 4 * g - F <= 19 && 2 * g - F >= 1 &&
                2 * g - F <= 3;
       },
       [](i64 g, i64 F) { return exact_div(4 * g - F - 7, 4); }},
      {"F=2(4), 8g-5F<=2, F>=14, 2g-F>=2 -> (2g-F)/2",
       [](i64 g, i64 F) { return F % 4 == 2 && 8 * g - 5 * F <= 2 && F >= 14 && 2 * g - F >= 2; },
       [](i64 g, i64 F) { return exact_div(2 * g - F, 2); }},
      {"F=2(4), 8g-5F>=6, 4g-3F<=2, 2g-F>=6 -> (3F-4g+6)/4",
       [](i64 g, i64 F) {
         return F % 4 == 2 && 8 * g - 5 * F >= 6 && 4 * g - 3 * F <= 2 && 2 * g - F >= 6;
       },
       [](i64 g, i64 F) { return exact_div(3 * F - 4 * g + 6, 4); }},
      {"F=2(4), 8g-5F>=6, F>=6, 2g-F<=4 -> (F-2)/4",
       [](i64 g, i64 F) { return F % 4 == 2 && 8 * g - 5 * F >= 6 && F >= 6 && 2 * g - F <= 4; },
       [](i64, i64 F) { return exact_div(F - 2, 4); }},
      {"F=2(4), 8g-5F<=2, F<=10, 2g-F>=2 -> (4g-F-2)/4 - floor((F+6)/8)",
       [](i64 g, i64 F) { return F % 4 == 2 && 8 * g - 5 * F <= 2 && F <= 10 && 2 * g - F >= 2; },
       [](i64 g, i64 F) { return exact_div(4 * g - F - 2, 4) - floor_div(F + 6, 8); }},
  }};
  static const gf_piece branch9_printed{
      "F=3(4), 8g-5F>=9, 4g-3F<=3, 2g-F>=5 -> (3F-4g+7)/4",
      [](i64 g, i64 F) {
        return F % 4 == 3 && 8 * g - 5 * F >= 9 && 4 * g - 3 * F <= 3 && 2 * g - F >= 5;
      },
      [](i64 g, i64 F) { return exact_div(3 * F - 4 * g + 7, 4); }};
  static const gf_piece branch9_corrected{
      "F=3(4), 8g-5F>=9, 4g-3F<=3, 2g-F>=3 -> (3F-4g+7)/4",
      [](i64 g, i64 F) {
        return F % 4 == 3 && 8 * g - 5 * F >= 9 && 4 * g - 3 * F <= 3 && 2 * g - F >= 3;
      },
      [](i64 g, i64 F) { return exact_div(3 * F - 4 * g + 7, 4); }};
  static const std::vector<gf_piece> tail{
      {"F=3(4), 8g-5F<=5, 2g-F>=5 -> (F+3)/2 - floor((2g+F+5)/6)",
       [](i64 g, i64 F) { return F % 4 == 3 && 8 * g - 5 * F <= 5 && 2 * g - F >= 5; },
       [](i64 g, i64 F) { return exact_div(F + 3, 2) - floor_div(2 * g + F + 5, 6); }},
      {"F=3(4), 8g-5F<=5, 4g-F>=9, 1<=2g-F<=3 -> g - floor((2g+F+5)/6)",
       [](i64 g, i64 F) {
         return F % 4 == 3 && 8 * g - 5 * F <= 5 && 4 * g - F >= 9 && 2 * g - F >= 1 &&
                2 * g - F <= 3;
       },
       [](i64 g, i64 F) { return g - floor_div(2 * g + F + 5, 6); }},
  };
  static const gf_piecewise printed = [] {
    gf_piecewise t2 = common_head;
    t2.pieces.push_back(branch9_printed);
    t2.pieces.insert(t2.pieces.end(), tail.begin(), tail.end());
    return t2;
  }();
  static const gf_piecewise corrected = [] {
    gf_piecewise t2 = common_head;
    t2.pieces.push_back(branch9_corrected);
    t2.pieces.insert(t2.pieces.end(), tail.begin(), tail.end());
    return t2;
  }();
  return t == transcription::printed ? printed : corrected;
}

inline i64 count_m4_genus_frobenius(i64 g, i64 F) {
  if (g < 3 || F < 3) return 0;
  return m4_genus_frobenius_pieces().eval(g, F);
}

// Upper bound for the number of MED semigroups with multiplicity 4, genus g
// and Frobenius F: solutions of n2 + n3 = 4g - F + 2 with 4 < n2 < n3 < F + 4
// (the coprimality filter only removes solutions).
inline i64 med4_pair_upper_bound(i64 g, i64 F) {
  detail::check_quadratic_domain(g);
  detail::check_quadratic_domain(F);
  if (2 * g - F <= 2 && 4 * g - F >= 9) return 2 * g - floor_div(F, 2) - 4;
  if (2 * g - F >= 3 && 4 * g - 3 * F <= 3) return 2 * F - 2 * g - floor_div(F, 2) + 2;
  return 0;
}

// The printed 8-branch MED table, kept for adjudication only; its shipped
// replacement is count_m4_med_genus_frobenius below.
inline const gf_piecewise& m4_med_genus_frobenius_printed_pieces() {
  static const gf_piecewise table{{
      {"F=1(4), 5F-8g>=1, 2g-F<=3 -> (F+1)/2 - floor((2g+F+1)/6)",
       [](i64 g, i64 F) { return F % 4 == 1 && 5 * F - 8 * g >= 1 && 2 * g - F <= 3; },
       [](i64 g, i64 F) { return exact_div(F + 1, 2) - floor_div(2 * g + F + 1, 6); }},
      {"F=1(4), 8g-5F>=3, 4g-F>=15, 4g-3F<=1 -> (3F+5)/4 - g",
       [](i64 g, i64 F) {
         return F % 4 == 1 && 8 * g - 5 * F >= 3 && 4 * g - F >= 15 && 4 * g - 3 * F <= 1;
       },
       [](i64 g, i64 F) { return exact_div(3 * F + 5, 4) - g; }},
      {"F=2(4), 8g-5F<=6, 2g-F>=2, 4g-F>=14 -> F/2 - floor((2g+F)/6)",
       [](i64 g, i64 F) {
         return F % 4 == 2 && 8 * g - 5 * F <= 6 && 2 * g - F >= 2 && 4 * g - F >= 14;
       },
       [](i64 g, i64 F) { return exact_div(F, 2) - floor_div(2 * g + F, 6); }},
      {"F=2(4), 8g-5F>=10, 4g-3F<=2 -> (3F+6)/4 - g",
       [](i64 g, i64 F) { return F % 4 == 2 && 8 * g - 5 * F >= 10 && 4 * g - 3 * F <= 2; },
       [](i64 g, i64 F) { return exact_div(3 * F + 6, 4) - g; }},
      {"F=3(4), 8g-5F<=1, 2g-F>=5 -> (F+3)/2 - floor((2g+F+5)/6)",
       [](i64 g, i64 F) { return F % 4 == 3 && 8 * g - 5 * F <= 1 && 2 * g - F >= 5; },
       [](i64 g, i64 F) { return exact_div(F + 3, 2) - floor_div(2 * g + F + 5, 6); }},
      {"F=3(4), 8g-5F<=1, 4g-F>=13, 1<=2g-F<=3 -> g - floor((2g+F+5)/6)",
       [](i64 g, i64 F) {
         return F % 4 == 3 && 8 * g - 5 * F <= 1 && 4 * g - F >= 13 && 2 * g - F >= 1 &&
                2 * g - F <= 3;
       },
       [](i64 g, i64 F) { return g - floor_div(2 * g + F + 5, 6); }},
      {"F=3(4), 8g-5F>=5, 4g-3F<=3, 2g-F>=5 -> (3F+7)/4 - g",
       [](i64 g, i64 F) {
         return F % 4 == 3 && 8 * g - 5 * F >= 5 && 4 * g - 3 * F <= 3 && 2 * g - F >= 5;
       },
       [](i64 g, i64 F) { return exact_div(3 * F + 7, 4) - g; }},
      {"F=5 and g=7 -> 2 (literal special case)",
       [](i64 g, i64 F) { return F == 5 && g == 7; },
       [](i64, i64) -> i64 { return 2; }},
  }};
  return table;
}

// Exact MED count for multiplicity 4 with both invariants fixed. Pinning the
// k* coordinate with the Frobenius equality and eliminating one variable with
// the genus equality leaves a single variable whose feasible interval has
// endpoints given by floor/ceiling terms; the count is the interval width.
inline i64 count_m4_med_genus_frobenius(i64 g, i64 F) {
  if (g < 3 || F < 1 || F % 4 == 0) return 0;
  detail::check_quadratic_domain(g);
  detail::check_quadratic_domain(F);
  i64 lo, hi;
  switch (F % 4) {
    case 1: {
      const i64 a = exact_div(F + 3, 4), s = g - a;  // x1 pinned at a
      if (s < a || s < 2) return 0;                  // row x2 + x3 >= x1, and x2, x3 >= 1
      lo = std::max<i64>({1, ceil_div(s + 1 - a, 2), s - a + 1});
      hi = std::min<i64>({a - 1, floor_div(2 * s, 3), s - 1});
      break;
    }
    case 2: {
      const i64 b = exact_div(F + 2, 4), t = g - b;  // x2 pinned at b
      if (t < 2) return 0;
      lo = std::max<i64>({1, ceil_div(b + 1, 2), ceil_div(t + 1 - b, 2), t - b + 1});
      hi = std::min<i64>({b, floor_div(t + b, 2), t - ceil_div(b, 2), t - 1});
      break;
    }
    default: {
      const i64 c = exact_div(F + 1, 4), u = g - c;  // x3 pinned at c
      if (u < c + 1 || u < 2) return 0;              // row x1 + x2 - x3 >= 1
      lo = std::max<i64>({1, ceil_div(u + 1, 3), u - c});
      hi = std::min<i64>({c, floor_div(u + c, 2), u - 1});
      break;
    }
  }
  return hi < lo ? 0 : hi - lo + 1;
}

inline std::optional<i64> count_m4_med_genus_frobenius_variant(i64 g, i64 F, transcription t) {
  if (t == transcription::corrected) return count_m4_med_genus_frobenius(g, F);
  if (g < 3 || F < 3) return 0;
  return m4_med_genus_frobenius_printed_pieces().eval(g, F);
}

}  // namespace kunzcount
