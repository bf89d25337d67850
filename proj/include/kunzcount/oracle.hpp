#pragma once

// Independent ground truth: breadth-first expansion of the semigroup tree.
// The children of S are S minus one minimal generator exceeding F(S); level g
// then holds exactly the numerical semigroups of genus g. Nothing here touches
// the Kunz-polytope machinery, which is the point.

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kunzcount/errors.hpp"
#include "kunzcount/semigroup.hpp"

namespace kunzcount {

struct genus_level {
  i64 genus = 0;
  std::vector<semigroup> semigroups;  // canonical order: generator lists ascending
};

struct oracle_options {
  i64 genus_cap = 18;                  // guard against runaway expansion
  std::size_t level_size_cap = 4'000'000;
};

// All children of s in the semigroup tree: remove each minimal generator
// n > F(s). Each child has genus g(s) + 1, and children of distinct parents
// are distinct.
inline std::vector<semigroup> children(const semigroup& s) {
  std::vector<semigroup> out;
  for (i64 n : s.generators) {
    if (n <= s.frobenius) continue;
    // Members of S \ {n} up to n + m' generate it (anything larger is a
    // smaller member plus the new multiplicity).
    const i64 bound = checked_add(checked_mul(2, checked_add(n, s.multiplicity)), 8);
    auto dp = detail::member_sieve(s.generators, bound);
    dp[static_cast<std::size_t>(n)] = 0;
    i64 mprime = 0;
    for (i64 x = 1; x <= bound; ++x)
      if (dp[static_cast<std::size_t>(x)]) { mprime = x; break; }
    std::vector<i64> gens;
    for (i64 x = 1; x <= n + mprime && x <= bound; ++x)
      if (dp[static_cast<std::size_t>(x)]) gens.push_back(x);
    out.push_back(from_generators(std::move(gens)));
  }
  return out;
}

// Levels 0..g_max of the tree, each sealed and sorted. Only a frontier is
// expanded at a time, but all levels are retained for filtering.
inline std::vector<genus_level> enumerate_by_genus(i64 g_max, const oracle_options& opt = {}) {
  if (g_max < 0) raise(errc::domain_error, "negative genus");
  if (g_max > opt.genus_cap)
    raise(errc::resource_limit,
          "requested genus " + std::to_string(g_max) + " exceeds cap " +
              std::to_string(opt.genus_cap));
  std::vector<genus_level> levels;
  levels.push_back({0, {from_generators({1})}});
  for (i64 g = 1; g <= g_max; ++g) {
    genus_level next{g, {}};
    for (const auto& parent : levels.back().semigroups)
      for (auto& child : children(parent)) next.semigroups.push_back(std::move(child));
    std::sort(next.semigroups.begin(), next.semigroups.end());
    // the tree property makes duplicates impossible; treat one as corruption
    if (std::adjacent_find(next.semigroups.begin(), next.semigroups.end()) !=
        next.semigroups.end())
      raise(errc::domain_error, "duplicate semigroup in tree level " + std::to_string(g));
    for (const auto& s : next.semigroups)
      if (s.genus != g) raise(errc::domain_error, "tree level with wrong genus");
    if (next.semigroups.size() > opt.level_size_cap)
      raise(errc::resource_limit, "level " + std::to_string(g) + " exceeds size cap");
    levels.push_back(std::move(next));
  }
  return levels;
}

struct oracle_filter {
  std::optional<i64> multiplicity;
  std::optional<i64> frobenius;
  bool med_only = false;

  bool matches(const semigroup& s) const {
    if (multiplicity && s.multiplicity != *multiplicity) return false;
    if (frobenius && s.frobenius != *frobenius) return false;
    if (med_only && !s.is_med()) return false;
    return true;
  }
};

inline i64 count_filtered(const std::vector<genus_level>& levels, i64 g,
                          const oracle_filter& filter) {
  if (g < 0 || g >= static_cast<i64>(levels.size()))
    raise(errc::domain_error, "level " + std::to_string(g) + " not computed");
  i64 n = 0;
  for (const auto& s : levels[static_cast<std::size_t>(g)].semigroups)
    if (filter.matches(s)) ++n;
  return n;
}

// Line-oriented cache: one semigroup per line as
//   genus multiplicity frobenius n1 n2 ...
inline void save_levels(std::ostream& out, const std::vector<genus_level>& levels) {
  for (const auto& level : levels) {
    for (const auto& s : level.semigroups) {
      out << s.genus << ' ' << s.multiplicity << ' ' << s.frobenius;
      for (i64 n : s.generators) out << ' ' << n;
      out << '\n';
    }
  }
}

inline std::vector<genus_level> load_levels(std::istream& in) {
  std::map<i64, std::vector<semigroup>> by_genus;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    i64 g = 0, m = 0, F = 0;
    if (!(ls >> g >> m >> F)) raise(errc::io_error, "bad cache line: " + line);
    std::vector<i64> gens;
    i64 n = 0;
    while (ls >> n) gens.push_back(n);
    if (!ls.eof() || gens.empty()) raise(errc::io_error, "bad cache line: " + line);
    semigroup s = from_generators(gens);
    if (s.genus != g || s.multiplicity != m || s.frobenius != F || s.generators != gens)
      raise(errc::io_error, "cache line disagrees with recomputation: " + line);
    by_genus[g].push_back(std::move(s));
  }
  if (by_genus.empty() || by_genus.begin()->first != 0)
    raise(errc::io_error, "cache does not start at genus 0");
  std::vector<genus_level> levels;
  for (auto& [g, sgs] : by_genus) {
    if (g != static_cast<i64>(levels.size()))
      raise(errc::io_error, "cache has a genus gap at " + std::to_string(g));
    std::sort(sgs.begin(), sgs.end());
    levels.push_back({g, std::move(sgs)});
  }
  return levels;
}

}  // namespace kunzcount
