#pragma once

// Exact lattice-point enumeration for the bounded Kunz systems.
//
// Depth-first search assigns x_1, ..., x_n in order (lexicographic output).
// At depth d the feasible interval for x_{d+1} is tightened by
//   (a) every constraint whose support closes at d+1, solved for x_{d+1}
//       against the already-assigned prefix,
//   (b) interval propagation of the genus equality: the remaining sum must
//       fit inside the sum of the remaining variables' static bounds.
// Together these check each constraint exactly once per branch and prune
// two-term Kunz rows as soon as their first variables are fixed.

#include <algorithm>
#include <functional>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "kunzcount/arith.hpp"
#include "kunzcount/errors.hpp"
#include "kunzcount/linear_system.hpp"

namespace kunzcount {

struct var_bounds {
  i64 lo = 1;
  i64 hi = 0;
};

// Finite per-variable bounds, derivable only when a genus or Frobenius cut is
// present: lo_i = 1; hi_i = g - (m - 2) under a genus cut and
// floor((F + m - i) / m) under Frobenius rows (the k* variable is pinned by
// the equality). The tightest applicable bound wins.
inline std::vector<var_bounds> variable_bounds(const linear_system& sys) {
  const auto& lab = sys.label;
  if (!lab.genus && !lab.frobenius)
    raise(errc::unbounded, "no genus or Frobenius cut in " + lab.text());
  std::vector<var_bounds> b(static_cast<std::size_t>(sys.vars));
  const i64 m = lab.m;
  for (i64 i = 1; i <= sys.vars; ++i) {
    auto& vb = b[static_cast<std::size_t>(i - 1)];
    vb.lo = 1;
    vb.hi = std::numeric_limits<i64>::max();
    if (lab.genus) vb.hi = std::min(vb.hi, checked_sub(*lab.genus, m - 2));
    if (lab.frobenius) {
      const i64 F = *lab.frobenius;
      const i64 slack = checked_sub(checked_add(F, m), i);
      vb.hi = std::min(vb.hi, floor_div(slack, m));
      if (i == F % m) {  // pinned by the equality row
        vb.lo = exact_div(slack, m);
        vb.hi = vb.lo;
      }
    }
  }
  return b;
}

namespace detail {

class lattice_enumerator {
 public:
  explicit lattice_enumerator(const linear_system& sys)
      : sys_(sys), bounds_(variable_bounds(sys)), n_(sys.vars) {
    // Group constraints by the last variable in their support; each is solved
    // for that variable once the rest of its support is assigned.
    by_last_.resize(static_cast<std::size_t>(n_));
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
      i64 last = -1;
      for (i64 v = 0; v < n_; ++v)
        if (sys.rows[r].coeffs[static_cast<std::size_t>(v)] != 0) last = v;
      if (last < 0) raise(errc::domain_error, "constraint with empty support");
      by_last_[static_cast<std::size_t>(last)].push_back(r);
      if (sys.rows[r].rel == relation::eq &&
          std::all_of(sys.rows[r].coeffs.begin(), sys.rows[r].coeffs.end(),
                      [](i64 c) { return c == 1; }))
        genus_row_ = static_cast<i64>(r);
    }
    suffix_lo_.assign(static_cast<std::size_t>(n_) + 1, 0);
    suffix_hi_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (i64 v = n_ - 1; v >= 0; --v) {
      const auto& vb = bounds_[static_cast<std::size_t>(v)];
      if (vb.hi < vb.lo) { infeasible_ = true; return; }
      suffix_lo_[static_cast<std::size_t>(v)] =
          checked_add(suffix_lo_[static_cast<std::size_t>(v) + 1], vb.lo);
      suffix_hi_[static_cast<std::size_t>(v)] =
          checked_add(suffix_hi_[static_cast<std::size_t>(v) + 1], vb.hi);
    }
  }

  // Feasible interval for variable d given the assigned prefix x[0..d-1].
  var_bounds range_at(std::span<const i64> prefix, i64 d) const {
    var_bounds r = bounds_[static_cast<std::size_t>(d)];
    for (std::size_t row_idx : by_last_[static_cast<std::size_t>(d)]) {
      const auto& row = sys_.rows[row_idx];
      i64 partial = 0;
      for (i64 v = 0; v < d; ++v)
        partial = checked_add(partial, checked_mul(row.coeffs[static_cast<std::size_t>(v)],
                                                   prefix[static_cast<std::size_t>(v)]));
      const i64 a = row.coeffs[static_cast<std::size_t>(d)];
      const i64 res = checked_sub(row.rhs, partial);  // a * x_d REL res
      switch (row.rel) {
        case relation::ge:
          if (a > 0) r.lo = std::max(r.lo, ceil_div(res, a));
          else r.hi = std::min(r.hi, floor_div(res, a));
          break;
        case relation::le:
          if (a > 0) r.hi = std::min(r.hi, floor_div(res, a));
          else r.lo = std::max(r.lo, ceil_div(res, a));
          break;
        case relation::eq:
          if (res % a != 0) { r.lo = 1; r.hi = 0; return r; }
          r.lo = std::max(r.lo, res / a);
          r.hi = std::min(r.hi, res / a);
          break;
      }
    }
    if (genus_row_ >= 0) {
      // remaining sum after x_d must fit the remaining variables' bounds
      const i64 g = sys_.rows[static_cast<std::size_t>(genus_row_)].rhs;
      i64 assigned = 0;
      for (i64 v = 0; v < d; ++v)
        assigned = checked_add(assigned, prefix[static_cast<std::size_t>(v)]);
      const i64 rem = checked_sub(g, assigned);
      r.lo = std::max(r.lo, checked_sub(rem, suffix_hi_[static_cast<std::size_t>(d) + 1]));
      r.hi = std::min(r.hi, checked_sub(rem, suffix_lo_[static_cast<std::size_t>(d) + 1]));
    }
    return r;
  }

  template <typename Fn>
  void visit(Fn&& fn) const {
    if (infeasible_) return;
    std::vector<i64> x(static_cast<std::size_t>(n_), 0);
    dfs(x, 0, fn, nullptr);
  }

  // Same DFS restricted to a window of the root variable (for parallel count).
  template <typename Fn>
  void visit_root_window(Fn&& fn, const var_bounds& root) const {
    if (infeasible_) return;
    std::vector<i64> x(static_cast<std::size_t>(n_), 0);
    dfs(x, 0, fn, &root);
  }

  var_bounds root_range() const {
    if (infeasible_) return {1, 0};
    std::vector<i64> empty;
    return range_at(empty, 0);
  }

 private:
  template <typename Fn>
  void dfs(std::vector<i64>& x, i64 d, Fn& fn, const var_bounds* root) const {
    if (d == n_) {
      fn(std::span<const i64>(x));
      return;
    }
    var_bounds r = range_at(std::span<const i64>(x.data(), static_cast<std::size_t>(d)), d);
    if (d == 0 && root) {
      r.lo = std::max(r.lo, root->lo);
      r.hi = std::min(r.hi, root->hi);
    }
    for (i64 v = r.lo; v <= r.hi; ++v) {
      x[static_cast<std::size_t>(d)] = v;
      dfs(x, d + 1, fn, root);
    }
  }

  const linear_system& sys_;
  std::vector<var_bounds> bounds_;
  i64 n_;
  std::vector<std::vector<std::size_t>> by_last_;
  i64 genus_row_ = -1;
  std::vector<i64> suffix_lo_, suffix_hi_;
  bool infeasible_ = false;
};

}  // namespace detail

// Streams each solution exactly once, in lexicographic order.
inline void for_each_lattice_point(const linear_system& sys,
                                   const std::function<void(std::span<const i64>)>& fn) {
  detail::lattice_enumerator(sys).visit(fn);
}

inline std::vector<std::vector<i64>> enumerate_lattice_points(const linear_system& sys) {
  std::vector<std::vector<i64>> out;
  for_each_lattice_point(sys, [&](std::span<const i64> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

// Count without materializing. With threads > 1 the root variable's range is
// split into stripes, one DFS per worker, partial counts summed.
inline i64 count_lattice_points(const linear_system& sys, unsigned threads = 1) {
  detail::lattice_enumerator en(sys);
  if (threads <= 1) {
    i64 n = 0;
    en.visit([&](std::span<const i64>) { n = checked_add(n, 1); });
    return n;
  }
  const var_bounds root = en.root_range();
  if (root.hi < root.lo) return 0;
  const i64 width = root.hi - root.lo + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<i64>(width, static_cast<i64>(threads)));
  std::vector<i64> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      i64 n = 0;
      // stripe w takes root values lo + w, lo + w + workers, ...
      for (i64 v = root.lo + static_cast<i64>(w); v <= root.hi;
           v += static_cast<i64>(workers)) {
        var_bounds window{v, v};
        en.visit_root_window([&](std::span<const i64>) { n = checked_add(n, 1); }, window);
      }
      partial[w] = n;
    });
  }
  for (auto& t : pool) t.join();
  i64 total = 0;
  for (i64 p : partial) total = checked_add(total, p);
  return total;
}

}  // namespace kunzcount
