#pragma once

// Numerical semigroups and the Apery/Kunz correspondence.
//
// A numerical semigroup S is a cofinite submonoid of the non-negative
// integers with gcd(S) = 1. It is represented here by its minimal
// generating set together with the derived invariants: multiplicity m
// (least positive element), Apery set with respect to m (least member of
// each residue class), genus (number of gaps), Frobenius number (largest
// gap), and embedding dimension (number of minimal generators).
//
// For m >= 2 the Apery elements w(i) = k_i * m + i give the Kunz
// coordinates (k_1, ..., k_{m-1}); semigroups of multiplicity m biject
// with the integer vectors satisfying
//     k_i >= 1,
//     k_i + k_j - k_{i+j}   >= 0   (i + j <= m - 1),
//     k_i + k_j - k_{i+j-m} >= -1  (i + j > m),
// for all 1 <= i <= j <= m-1. Pairs with i + j == m impose nothing.

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "kunzcount/arith.hpp"
#include "kunzcount/errors.hpp"

namespace kunzcount {

struct semigroup {
  std::vector<i64> generators;  // minimal generating set, sorted ascending
  i64 multiplicity = 0;
  i64 genus = 0;
  i64 frobenius = -1;  // -1 for the full semigroup N
  std::vector<i64> apery;  // apery[r] = least member congruent to r (mod multiplicity)

  i64 embedding_dimension() const { return static_cast<i64>(generators.size()); }
  bool is_med() const { return embedding_dimension() == multiplicity; }

  friend bool operator==(const semigroup& a, const semigroup& b) {
    return a.generators == b.generators;
  }
  friend bool operator<(const semigroup& a, const semigroup& b) {
    return a.generators < b.generators;
  }
};

struct kunz_coords {
  i64 m = 2;               // multiplicity, >= 2
  std::vector<i64> k;      // (k_1, ..., k_{m-1}), all >= 1

  friend bool operator==(const kunz_coords& a, const kunz_coords& b) {
    return a.m == b.m && a.k == b.k;
  }
  friend bool operator<(const kunz_coords& a, const kunz_coords& b) {
    return a.m != b.m ? a.m < b.m : a.k < b.k;
  }
};

namespace detail {

// Membership sieve for <gens> over [0, limit]; dp[x] == true iff x is a member.
inline std::vector<char> member_sieve(const std::vector<i64>& gens, i64 limit) {
  std::vector<char> dp(static_cast<std::size_t>(limit) + 1, 0);
  dp[0] = 1;
  for (i64 s = 1; s <= limit; ++s) {
    for (i64 a : gens) {
      if (a <= s && dp[static_cast<std::size_t>(s - a)]) {
        dp[static_cast<std::size_t>(s)] = 1;
        break;
      }
    }
  }
  return dp;
}

}  // namespace detail

// Builds the full descriptor from any generating set. The input need not be
// minimal; the returned generator list always is. Membership is sieved up to
// an explicit bound, doubling until the sieve ends in a run of m consecutive
// members (which certifies that the largest gap has been seen).
inline semigroup from_generators(std::vector<i64> gens) {
  if (gens.empty()) raise(errc::empty_input, "from_generators: no generators");
  for (i64 g : gens)
    if (g <= 0) raise(errc::domain_error, "from_generators: non-positive generator");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  i64 d = 0;
  for (i64 g : gens) d = std::gcd(d, g);
  if (d != 1) raise(errc::non_cofinite, "gcd of generators is " + std::to_string(d));

  semigroup s;
  if (gens.front() == 1) {  // S = N
    s.generators = {1};
    s.multiplicity = 1;
    s.genus = 0;
    s.frobenius = -1;
    s.apery = {0};
    return s;
  }

  i64 limit = checked_add(checked_mul(2, gens.back()), 16);
  std::vector<char> dp;
  i64 m = gens.front();
  for (;;) {
    dp = detail::member_sieve(gens, limit);
    bool sealed = true;
    for (i64 t = 0; t < m; ++t)
      if (!dp[static_cast<std::size_t>(limit - t)]) { sealed = false; break; }
    if (sealed) break;
    limit = checked_mul(limit, 2);
  }

  s.multiplicity = m;
  s.frobenius = -1;
  for (i64 x = 1; x <= limit; ++x)
    if (!dp[static_cast<std::size_t>(x)]) { ++s.genus; s.frobenius = x; }

  s.apery.assign(static_cast<std::size_t>(m), -1);
  for (i64 x = 0; x <= limit; ++x) {
    auto r = static_cast<std::size_t>(x % m);
    if (dp[static_cast<std::size_t>(x)] && s.apery[r] < 0) s.apery[r] = x;
  }

  // Minimal generators lie in {m} union the nonzero Apery elements: any other
  // member n has n - m in S. An element is minimal iff it is not the sum of
  // two nonzero members.
  std::vector<i64> cands(s.apery.begin() + 1, s.apery.end());
  cands.push_back(m);
  std::sort(cands.begin(), cands.end());
  for (i64 c : cands) {
    bool decomposable = false;
    for (i64 a = m; a + a <= c; ++a) {
      if (dp[static_cast<std::size_t>(a)] && dp[static_cast<std::size_t>(c - a)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.generators.push_back(c);
  }
  return s;
}

// k_i = (w(i) - i) / m, exactly.
inline kunz_coords kunz_from_semigroup(const semigroup& s) {
  if (s.multiplicity < 2)
    raise(errc::multiplicity_one, "Kunz coordinates need multiplicity >= 2");
  kunz_coords c;
  c.m = s.multiplicity;
  c.k.reserve(static_cast<std::size_t>(c.m - 1));
  for (i64 i = 1; i < c.m; ++i)
    c.k.push_back(exact_div(s.apery[static_cast<std::size_t>(i)] - i, c.m));
  return c;
}

// True iff k satisfies the Kunz inequalities for multiplicity m. When a
// violation pointer is supplied, the first violated inequality (in the order
// lower bounds, then pair rows by (i, j)) is reported there.
inline bool is_valid_kunz(i64 m, std::span<const i64> k, std::string* violation = nullptr) {
  if (m < 2) raise(errc::bad_multiplicity, "multiplicity must be >= 2");
  if (static_cast<i64>(k.size()) != m - 1)
    raise(errc::dimension_mismatch,
          "expected " + std::to_string(m - 1) + " coordinates, got " + std::to_string(k.size()));
  auto fail = [&](const std::string& what) {
    if (violation) *violation = what;
    return false;
  };
  for (i64 i = 1; i < m; ++i)
    if (k[static_cast<std::size_t>(i - 1)] < 1)
      return fail("k_" + std::to_string(i) + " >= 1 violated (k_" + std::to_string(i) + " = " +
                  std::to_string(k[static_cast<std::size_t>(i - 1)]) + ")");
  for (i64 i = 1; i < m; ++i) {
    for (i64 j = i; j < m; ++j) {
      i64 lhs = k[static_cast<std::size_t>(i - 1)] + k[static_cast<std::size_t>(j - 1)];
      if (i + j <= m - 1) {
        if (lhs - k[static_cast<std::size_t>(i + j - 1)] < 0)
          return fail("k_" + std::to_string(i) + " + k_" + std::to_string(j) + " - k_" +
                      std::to_string(i + j) + " >= 0 violated");
      } else if (i + j > m) {
        if (lhs - k[static_cast<std::size_t>(i + j - m - 1)] < -1)
          return fail("k_" + std::to_string(i) + " + k_" + std::to_string(j) + " - k_" +
                      std::to_string(i + j - m) + " >= -1 violated");
      }
      // i + j == m: no constraint.
    }
  }
  return true;
}

// Inverse of kunz_from_semigroup: S = < {m} union {k_i * m + i} >.
inline semigroup semigroup_from_kunz(const kunz_coords& c) {
  std::string violation;
  if (!is_valid_kunz(c.m, c.k, &violation)) raise(errc::invalid_kunz, violation);
  std::vector<i64> gens{c.m};
  for (i64 i = 1; i < c.m; ++i)
    gens.push_back(checked_add(checked_mul(c.k[static_cast<std::size_t>(i - 1)], c.m), i));
  return from_generators(std::move(gens));
}

}  // namespace kunzcount
