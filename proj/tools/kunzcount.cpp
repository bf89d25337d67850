// kunzcount — count and enumerate numerical semigroups with prescribed
// multiplicity, genus and/or Frobenius number.
//
// Subcommands:
//   count    single query, by lattice enumeration, closed form, or the
//            semigroup-tree oracle
//   table    census table (CSV or JSON), rows g = 1..G, columns m = 2..g+1
//   verify   adjudicate every closed form against enumeration and the oracle
//
// Exit codes: 0 ok, 1 verify found a discrepancy, 2 usage, 3 resource limit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kunzcount/kunzcount.hpp"

namespace kc = kunzcount;
using kc::i64;
using ordered_json = nlohmann::ordered_json;

namespace {

struct count_query {
  i64 m = 0;
  std::optional<i64> genus;
  std::optional<i64> frobenius;
  bool med = false;
};

ordered_json query_json(const count_query& q) {
  ordered_json j;
  j["multiplicity"] = q.m;
  if (q.genus) j["genus"] = *q.genus;
  if (q.frobenius) j["frobenius"] = *q.frobenius;
  j["med"] = q.med;
  return j;
}

kc::linear_system build_system(const count_query& q) {
  kc::linear_system sys = q.med ? kc::med_system(q.m) : kc::kunz_system(q.m);
  if (q.genus) sys = kc::add_genus_cut(std::move(sys), *q.genus);
  if (q.frobenius) sys = kc::add_frobenius_cut(std::move(sys), *q.frobenius);
  return sys;
}

i64 count_by_polytope(const count_query& q) {
  try {
    return kc::count_lattice_points(build_system(q));
  } catch (const kc::error& e) {
    if (e.code() == kc::errc::frobenius_divisible) return 0;
    throw;
  }
}

// Closed form for the query, or nullopt when none is printed for this shape.
std::optional<i64> count_by_formula(const count_query& q) {
  auto zero_if_divisible = [](auto&& fn) -> std::optional<i64> {
    try {
      return fn();
    } catch (const kc::error& e) {
      if (e.code() == kc::errc::frobenius_divisible) return 0;
      throw;
    }
  };
  if (q.m == 3) {
    if (q.genus && q.frobenius && !q.med)
      return zero_if_divisible(
          [&] { return kc::unique_m3_semigroup(*q.genus, *q.frobenius) ? 1 : 0; });
    if (q.genus && !q.frobenius)
      return q.med ? kc::count_m3_med_genus(*q.genus) : kc::count_m3_genus(*q.genus);
    if (q.frobenius && !q.genus)
      return zero_if_divisible([&] {
        return q.med ? kc::count_m3_med_frobenius(*q.frobenius)
                     : kc::count_m3_frobenius(*q.frobenius);
      });
  }
  if (q.m == 4) {
    if (q.genus && q.frobenius)
      return q.med ? kc::count_m4_med_genus_frobenius(*q.genus, *q.frobenius)
                   : kc::count_m4_genus_frobenius(*q.genus, *q.frobenius);
    if (q.genus && !q.frobenius && !q.med) return kc::count_m4_genus(*q.genus);
    if (q.frobenius && !q.genus && !q.med) return kc::count_m4_frobenius(*q.frobenius);
  }
  return std::nullopt;
}

// Oracle levels, optionally persisted under $KUNZCOUNT_CACHE/levels.txt.
std::vector<kc::genus_level> oracle_levels_cached(i64 depth) {
  const char* dir = std::getenv("KUNZCOUNT_CACHE");
  if (dir == nullptr || *dir == '\0') return kc::enumerate_by_genus(depth);
  const std::filesystem::path path = std::filesystem::path(dir) / "levels.txt";
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    try {
      auto levels = kc::load_levels(in);
      if (static_cast<i64>(levels.size()) > depth) {
        levels.resize(static_cast<std::size_t>(depth) + 1);
        return levels;
      }
      if (static_cast<i64>(levels.size()) == depth + 1) return levels;
    } catch (const kc::error&) {
      // stale or corrupt cache: fall through and recompute
    }
  }
  auto levels = kc::enumerate_by_genus(depth);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(path);
  if (out) kc::save_levels(out, levels);
  return levels;
}

std::vector<kc::semigroup> oracle_matches(const count_query& q) {
  const i64 depth = q.genus ? *q.genus : *q.frobenius;  // g <= F for every semigroup
  auto levels = oracle_levels_cached(depth);
  kc::oracle_filter filter{q.m, q.frobenius, q.med};
  std::vector<kc::semigroup> out;
  const i64 lo = q.genus ? *q.genus : 1;
  const i64 hi = q.genus ? *q.genus : depth;
  for (i64 g = lo; g <= hi && g < static_cast<i64>(levels.size()); ++g)
    for (const auto& s : levels[static_cast<std::size_t>(g)].semigroups)
      if (filter.matches(s)) out.push_back(s);
  return out;
}

int cmd_count(const count_query& q, const std::string& source, bool list,
              const std::string& format) {
  i64 count = 0;
  std::string used = source;
  std::vector<kc::semigroup> from_oracle;
  if (source == "formula") {
    auto v = count_by_formula(q);
    if (!v) {
      std::cerr << "kunzcount: no closed form for this query (multiplicity " << q.m << ")\n";
      return 2;
    }
    count = *v;
  } else if (source == "auto") {
    std::optional<i64> v;
    try {
      v = count_by_formula(q);
    } catch (const kc::error& e) {
      if (e.code() != kc::errc::domain_error) throw;  // outside the formula's domain
    }
    if (v) {
      count = *v;
      used = "formula";
    } else {
      count = count_by_polytope(q);
      used = "polytope";
    }
  } else if (source == "polytope") {
    count = count_by_polytope(q);
  } else {  // oracle
    from_oracle = oracle_matches(q);
    count = static_cast<i64>(from_oracle.size());
  }

  // point lists come from the lattice (or the oracle when asked for it)
  std::vector<std::vector<i64>> points;
  std::vector<std::vector<i64>> generators;
  if (list) {
    if (used == "oracle") {
      for (const auto& s : from_oracle) {
        points.push_back(kc::kunz_from_semigroup(s).k);
        generators.push_back(s.generators);
      }
    } else {
      try {
        for (const auto& pt : kc::enumerate_lattice_points(build_system(q))) {
          points.push_back(pt);
          generators.push_back(kc::semigroup_from_kunz({q.m, pt}).generators);
        }
      } catch (const kc::error& e) {
        if (e.code() != kc::errc::frobenius_divisible) throw;
      }
    }
  }

  if (format == "json") {
    ordered_json j;
    j["query"] = query_json(q);
    j["count"] = count;
    j["source"] = used;
    j["points"] = points;
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << count << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::cout << '(';
    for (std::size_t k = 0; k < points[i].size(); ++k)
      std::cout << (k ? "," : "") << points[i][k];
    std::cout << ") <";
    for (std::size_t k = 0; k < generators[i].size(); ++k)
      std::cout << (k ? "," : "") << generators[i][k];
    std::cout << ">\n";
  }
  return 0;
}

int cmd_table(i64 max_genus, bool med, const std::string& format) {
  const auto rows = kc::census_by_genus(max_genus, med);
  if (format == "json") {
    ordered_json j;
    j["max_genus"] = max_genus;
    j["med"] = med;
    j["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json r;
      r["g"] = row.g;
      r["counts"] = row.counts;
      r["total"] = row.total;
      j["rows"].push_back(std::move(r));
    }
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "g";
  for (i64 m = 2; m <= max_genus + 1; ++m) std::cout << ",m" << m;
  std::cout << ",total\n";
  for (const auto& row : rows) {
    std::cout << row.g;
    for (i64 m = 2; m <= max_genus + 1; ++m) {
      std::cout << ',';
      const auto idx = static_cast<std::size_t>(m - 2);
      if (idx < row.counts.size()) std::cout << row.counts[idx];
    }
    std::cout << ',' << row.total << '\n';
  }
  return 0;
}

ordered_json row_json(const kc::verify_row& r) {
  ordered_json j;
  j["query"] = r.query;
  j["formula_value"] = r.formula_value ? ordered_json(*r.formula_value) : ordered_json(nullptr);
  j["polytope_count"] = r.polytope_count ? ordered_json(*r.polytope_count) : ordered_json(nullptr);
  j["oracle_count"] = r.oracle_count ? ordered_json(*r.oracle_count) : ordered_json(nullptr);
  j["status"] = kc::verify_status_name(r.status);
  j["documented"] = r.documented;
  j["note"] = r.note;
  return j;
}

int cmd_verify(const kc::verify_options& opt, const std::string& format) {
  const auto rep = kc::run_verify(opt);
  if (format == "json") {
    ordered_json j;
    j["summary"] = {{"checked", rep.checked},
                    {"ok", rep.ok_count},
                    {"discrepancies", rep.discrepancies},
                    {"documented_discrepancies", rep.documented_discrepancies}};
    j["rows"] = ordered_json::array();
    for (const auto& r : rep.rows) j["rows"].push_back(row_json(r));
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& r : rep.rows) {
      std::cout << '[' << kc::verify_status_name(r.status) << ']';
      if (r.documented) std::cout << " (documented misprint)";
      std::cout << ' ' << r.query;
      if (r.formula_value || r.polytope_count || r.oracle_count) {
        std::cout << " |";
        if (r.formula_value) std::cout << " formula=" << *r.formula_value;
        if (r.polytope_count) std::cout << " polytope=" << *r.polytope_count;
        if (r.oracle_count) std::cout << " oracle=" << *r.oracle_count;
      }
      if (!r.note.empty()) std::cout << " | " << r.note;
      std::cout << '\n';
    }
    std::cout << "verify: " << rep.checked << " checks, " << rep.ok_count << " ok, "
              << rep.discrepancies << " discrepancies, " << rep.documented_discrepancies
              << " documented misprints\n";
  }
  return rep.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"count numerical semigroups by multiplicity, genus and Frobenius number"};
  app.require_subcommand(1);

  count_query query;
  std::string source = "auto";
  std::string count_format = "text";
  bool list = false;
  auto* count = app.add_subcommand("count", "count semigroups matching one query");
  count->add_option("-m,--multiplicity", query.m, "multiplicity (>= 2)")->required();
  auto* gopt = count->add_option("-g,--genus", query.genus, "genus");
  auto* fopt = count->add_option("-f,--frobenius", query.frobenius, "Frobenius number");
  count->add_flag("--med", query.med, "maximal embedding dimension only");
  count->add_flag("--list", list, "also list Kunz points and generator sets");
  count->add_option("--source", source, "auto|polytope|formula|oracle")
      ->check(CLI::IsMember({"auto", "polytope", "formula", "oracle"}));
  count->add_option("--format", count_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  i64 max_genus = 0;
  bool table_med = false;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "emit the census table");
  table->add_option("--max-genus", max_genus, "last genus row")->required()
      ->check(CLI::PositiveNumber);
  table->add_flag("--med", table_med, "maximal embedding dimension census");
  table->add_option("--format", table_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  kc::verify_options vopt;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "adjudicate formulas against enumeration");
  verify->add_option("--max-genus", vopt.max_genus, "genus sweep bound (default 200)");
  verify->add_option("--max-frobenius", vopt.max_frobenius, "Frobenius sweep bound (default 400)");
  verify->add_option("--oracle-depth", vopt.oracle_depth, "semigroup-tree depth (default 15)");
  verify->add_option("--grid-genus", vopt.grid_genus, "(g,F) grid bound (default 60)");
  verify->add_option("--format", verify_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed()) {
      if (query.m < 2) {
        std::cerr << "kunzcount: multiplicity must be >= 2\n";
        return 2;
      }
      if (gopt->count() == 0 && fopt->count() == 0) {
        std::cerr << "kunzcount: need at least one of --genus / --frobenius\n";
        return 2;
      }
      return cmd_count(query, source, list, count_format);
    }
    if (table->parsed()) return cmd_table(max_genus, table_med, table_format);
    return cmd_verify(vopt, verify_format);
  } catch (const kc::error& e) {
    std::cerr << "kunzcount: " << e.what() << '\n';
    if (e.code() == kc::errc::resource_limit || e.code() == kc::errc::unbounded) return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kunzcount: " << e.what() << '\n';
    return 2;
  }
}
