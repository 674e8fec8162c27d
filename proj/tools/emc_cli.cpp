// emc: exact combinatorics workbench for bounded-matching set families.
//
// Subcommands: construct, compress, solve, verify, bounds, sweep. Exit codes
// are a stable contract: 0 success/pass, 1 verification failed, 2 usage or
// invalid input, 3 search truncated by budget, 4 infeasible constraints.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "emc/constructions.hpp"
#include "emc/core.hpp"
#include "emc/errors.hpp"
#include "emc/family.hpp"
#include "emc/json_io.hpp"
#include "emc/numbers.hpp"
#include "emc/partitions.hpp"
#include "emc/shifting.hpp"
#include "emc/solver.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTruncated = 3;
constexpr int kExitInfeasible = 4;

int default_workers() {
  const char* env = std::getenv("EMC_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end || v < 1 || v > 1024)
    throw std::invalid_argument("EMC_WORKERS must be an integer in [1, 1024]");
  return static_cast<int>(v);
}

emc::Family read_family(const std::string& path) {
  if (path.empty() || path == "-") return emc::load_family(std::cin);
  return emc::load_family_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

emc::Rational parse_rational_flag(const std::string& text, const std::string& flag) {
  auto q = emc::parse_rational(text);
  if (!q) throw std::invalid_argument(flag + ": expected an exact rational like 3/100");
  return *q;
}

json degree_profile_json(const emc::Family& f) {
  auto prof = f.degree_profile();
  json degrees = json::object();
  for (auto& [x, d] : prof.degrees) degrees[std::to_string(x)] = d;
  return json{{"degrees", std::move(degrees)},
              {"min_degree", prof.min_degree},
              {"max_degree", prof.max_degree}};
}

json rational_json(const emc::Rational& q) {
  return json{{"exact", emc::to_string(q)}, {"decimal", emc::decimal_string(q)}};
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  int n = 0;
  int k = 0;
  std::optional<int> s;
  std::optional<int> x;
  bool stats = false;
  std::string output;
};

int run_construct(const ConstructArgs& a) {
  emc::Family f = [&] {
    if (a.kind == "A") {
      if (!a.s) throw std::invalid_argument("construct A needs --s");
      return emc::construct_A(a.n, a.k, *a.s);
    }
    if (a.kind == "B") {
      if (!a.s) throw std::invalid_argument("construct B needs --s");
      return emc::construct_B(a.n, a.k, *a.s);
    }
    if (a.kind == "star") {
      if (!a.x) throw std::invalid_argument("construct star needs --x");
      return emc::star(a.n, a.k, *a.x);
    }
    if (a.kind == "kleitman") {
      if (!a.x) throw std::invalid_argument("construct kleitman needs --x");
      return emc::kleitman_extremal(a.n, a.k, *a.x);
    }
    throw std::invalid_argument("unknown construction kind: " + a.kind);
  }();
  write_text(a.output, emc::family_to_json_text(f, 2) + "\n");
  if (a.stats) {
    json stats{{"size", f.size()},
               {"matching_number", f.matching_number()},
               {"degree_profile", degree_profile_json(f)}};
    std::cerr << stats.dump(2) << "\n";
  }
  return kExitPass;
}

// ----------------------------------------------------------------- compress

int run_compress(const std::string& input, const std::string& output, bool stats) {
  emc::Family f = read_family(input);
  emc::Family c = emc::left_compress(f);
  write_text(output, emc::family_to_json_text(c, 2) + "\n");
  if (stats) {
    json report{{"size", c.size()},
                {"matching_number_before", f.matching_number()},
                {"matching_number_after", c.matching_number()},
                {"already_compressed", f == c},
                {"left_compressed", emc::is_left_compressed(c)}};
    std::cerr << report.dump(2) << "\n";
  }
  return kExitPass;
}

// -------------------------------------------------------------------- solve

struct SolveArgs {
  emc::Problem prob;
  std::string objective = "max-size";
  std::string forced_path;
  std::string forbidden_path;
  std::string export_lp_path;
  std::string output;
  bool enumerate = false;
};

json solver_result_json(const emc::Problem& p, const emc::SolverResult& res,
                        const std::vector<emc::Family>* all_optima) {
  json out{{"n", p.n},
           {"k", p.k},
           {"s", p.s},
           {"objective",
            p.objective == emc::Objective::kMaxSize ? "max-size" : "min-disjoint-pairs"},
           {"feasible", res.feasible},
           {"proven_optimal", res.proven_optimal},
           {"nodes_explored", res.nodes_explored},
           {"wall_seconds", res.wall_seconds}};
  if (res.feasible) out["optimum"] = emc::to_string(res.optimum);
  json witnesses = json::array();
  if (all_optima) {
    for (const emc::Family& f : *all_optima) witnesses.push_back(emc::family_to_json(f));
  } else {
    for (const emc::Family& f : res.witnesses) witnesses.push_back(emc::family_to_json(f));
  }
  out["witnesses"] = std::move(witnesses);
  if (all_optima) out["optima_count"] = all_optima->size();
  return out;
}

int run_solve(SolveArgs& a) {
  emc::Problem& p = a.prob;
  if (a.objective == "max-size") {
    p.objective = emc::Objective::kMaxSize;
  } else if (a.objective == "min-disjoint-pairs") {
    p.objective = emc::Objective::kMinDisjointPairs;
  } else {
    throw std::invalid_argument("--objective must be max-size or min-disjoint-pairs");
  }
  if (!a.forced_path.empty()) {
    emc::Family f = read_family(a.forced_path);
    if (f.n() != p.n || f.k() != p.k)
      throw std::invalid_argument("--forced family has mismatched n or k");
    p.forced_members = f.members();
  }
  if (!a.forbidden_path.empty()) {
    emc::Family f = read_family(a.forbidden_path);
    if (f.n() != p.n || f.k() != p.k)
      throw std::invalid_argument("--forbidden family has mismatched n or k");
    p.forbidden_members = f.members();
  }
  p.validate();

  if (!a.export_lp_path.empty()) {
    write_text(a.export_lp_path, emc::export_lp(p));
    return kExitPass;
  }

  if (a.enumerate) {
    if (p.objective != emc::Objective::kMaxSize)
      throw std::invalid_argument("--enumerate-optima requires the max-size objective");
    std::vector<emc::Family> optima = emc::enumerate_optima(p);
    emc::SolverResult res;
    res.feasible = !optima.empty();
    res.proven_optimal = true;
    if (res.feasible) {
      res.optimum = optima.front().size();
      res.witnesses = {optima.front()};
    }
    write_text(a.output, solver_result_json(p, res, &optima).dump(2) + "\n");
    return res.feasible ? kExitPass : kExitInfeasible;
  }

  emc::SolverResult res = p.objective == emc::Objective::kMaxSize
                              ? emc::solve_max_family(p)
                              : emc::solve_min_disjoint_pairs(p);
  write_text(a.output, solver_result_json(p, res, nullptr).dump(2) + "\n");
  if (!res.proven_optimal) return kExitTruncated;
  if (!res.feasible) return kExitInfeasible;
  return kExitPass;
}

// ------------------------------------------------------------------- verify

int finish_report(const json& report, const std::string& output, bool pass) {
  write_text(output, report.dump(2) + "\n");
  std::cerr << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitPass : kExitFail;
}

int run_verify_kleitman(int s, int k, const std::string& output) {
  emc::KleitmanReport r = emc::kleitman_check(s, k);
  std::cerr << "kleitman s=" << s << " k=" << k << ": optimum " << emc::to_string(r.optimum)
            << " expected " << emc::to_string(r.expected) << (r.value_ok ? " [ok]" : " [BAD]")
            << "; optima " << r.optima_count << "; avoiding families optimal "
            << (r.kleitman_families_optimal ? "[ok]" : "[BAD]");
  if (r.uniqueness_checked)
    std::cerr << "; uniqueness " << (r.uniqueness_ok ? "[ok]" : "[BAD]");
  else
    std::cerr << "; uniqueness [skipped: s=2 optimum is degenerate]";
  std::cerr << "\n";
  json report{
      {"suite", "kleitman"},
      {"claim",
       "f(sk,k,s) = C(sk,k) - C(sk-1,k-1), attained by every one-element-avoiding family; "
       "for s >= 3 those are the only optima"},
      {"s", r.s},
      {"k", r.k},
      {"n", r.n},
      {"expected", emc::to_string(r.expected)},
      {"optimum", emc::to_string(r.optimum)},
      {"value_ok", r.value_ok},
      {"optima_count", r.optima_count},
      {"kleitman_families_optimal", r.kleitman_families_optimal},
      {"uniqueness_checked", r.uniqueness_checked},
      {"uniqueness_ok", r.uniqueness_ok},
      {"pass", r.pass}};
  return finish_report(report, output, r.pass);
}

int run_verify_shiftdeg(const std::string& input, const std::string& output) {
  emc::Family f = read_family(input);
  if (!emc::is_left_compressed(f))
    throw std::invalid_argument("family is not left-compressed; run `emc compress` first");
  emc::ShiftDegAReport a = emc::verify_shiftdeg_a(f);
  emc::ShiftDegBReport b = emc::verify_shiftdeg_b(f);
  const bool pass = a.holds && b.holds;
  std::cerr << "shiftdeg n=" << f.n() << " k=" << f.k() << " size=" << f.size() << ": (a) "
            << emc::to_string(a.lhs) << " <= " << emc::to_string(a.rhs)
            << (a.holds ? " [ok]" : " [BAD]") << "; (b) " << emc::to_string(b.lhs_num) << "*"
            << emc::to_string(b.rhs_den) << " <= " << emc::to_string(b.rhs_num) << "*"
            << emc::to_string(b.lhs_den) << (b.holds ? " [ok]" : " [BAD]") << "\n";
  json report{{"suite", "shiftdeg"},
              {"claim",
               "every left-compressed family satisfies (n-k)|F_n| <= k|F_nbar| and "
               "|F_n|/C(n-1,k-1) <= |F_{n-1,nbar}|/C(n-2,k-1)"},
              {"n", f.n()},
              {"k", f.k()},
              {"size", f.size()},
              {"a", json{{"lhs", emc::to_string(a.lhs)},
                         {"rhs", emc::to_string(a.rhs)},
                         {"holds", a.holds}}},
              {"b", json{{"lhs_num", emc::to_string(b.lhs_num)},
                         {"lhs_den", emc::to_string(b.lhs_den)},
                         {"rhs_num", emc::to_string(b.rhs_num)},
                         {"rhs_den", emc::to_string(b.rhs_den)},
                         {"holds", b.holds}}},
              {"pass", pass}};
  return finish_report(report, output, pass);
}

int run_verify_double_count(const std::string& input, const std::string& output) {
  emc::Family f = read_family(input);
  emc::DoubleCountReport r = emc::verify_double_count(f);
  const bool pass = r.identity_holds && r.pair_identity_holds &&
                    (!r.nu_within || (r.every_partition_hit && r.chain_holds));
  std::cerr << "double-count s=" << r.s << " k=" << r.k << ": sum_hits "
            << emc::to_string(r.sum_hits) << " vs |G|*M " << emc::to_string(r.g_times_m)
            << (r.identity_holds ? " [ok]" : " [BAD]") << "; pair identity "
            << (r.pair_identity_holds ? "[ok]" : "[BAD]") << "; nu=" << r.nu
            << (r.nu_within ? " within" : " out of") << " bound\n";
  json report{{"suite", "double-count"},
              {"claim",
               "summing missing blocks over all k-block partitions of [sk] gives |G|*M "
               "exactly, and pair hits give dp(G)*M'; when nu(F) <= s-1 every partition "
               "is hit and |G|*M >= #partitions + #(>=2-hit partitions)"},
              {"s", r.s},
              {"k", r.k},
              {"g_size", emc::to_string(r.g_size)},
              {"m", emc::to_string(r.m)},
              {"m_prime", emc::to_string(r.m_prime)},
              {"sum_hits", emc::to_string(r.sum_hits)},
              {"g_times_m", emc::to_string(r.g_times_m)},
              {"identity_holds", r.identity_holds},
              {"partitions_total", emc::to_string(r.partitions_total)},
              {"partitions_ge1", emc::to_string(r.partitions_ge1)},
              {"partitions_ge2", emc::to_string(r.partitions_ge2)},
              {"nu", r.nu},
              {"nu_within", r.nu_within},
              {"every_partition_hit", r.every_partition_hit},
              {"disjoint_pairs_in_g", emc::to_string(r.disjoint_pairs_in_g)},
              {"sum_pair_hits", emc::to_string(r.sum_pair_hits)},
              {"pair_identity_holds", r.pair_identity_holds},
              {"chain_holds", r.chain_holds},
              {"pass", pass}};
  return finish_report(report, output, pass);
}

int run_verify_drop_ratio(int s, int k, int workers, const std::string& output) {
  emc::DropRatioReport r = emc::drop_ratio_check(s, k, workers);
  std::cerr << "drop-ratio s=" << s << " k=" << k << ": f(" << r.n << "," << k << "," << s
            << ") = " << emc::to_string(r.f_value) << ", ratio " << emc::to_string(r.ratio)
            << " vs " << emc::to_string(r.target) << ", gap " << emc::to_string(r.gap)
            << (r.positive_gap ? " > 0 [ok]" : " [BAD]") << "\n";
  json report{{"suite", "drop-ratio"},
              {"claim", "f(sk+1,k,s)/C(sk+1,k) falls short of (s-1)/s by a positive gap"},
              {"s", r.s},
              {"k", r.k},
              {"n", r.n},
              {"f_value", emc::to_string(r.f_value)},
              {"ratio", emc::to_string(r.ratio)},
              {"target", emc::to_string(r.target)},
              {"gap", emc::to_string(r.gap)},
              {"positive_gap", r.positive_gap}};
  report["pass"] = r.positive_gap;
  return finish_report(report, output, r.positive_gap);
}

int run_verify_emc(int n, int k, int s, int workers, const std::string& output) {
  emc::EmcReport r = emc::emc_check(n, k, s, workers);
  std::cerr << "emc n=" << n << " k=" << k << " s=" << s << ": optimum "
            << emc::to_string(r.optimum) << ", |A| " << emc::to_string(r.a_size) << ", |B| "
            << emc::to_string(r.b_size) << ", max " << emc::to_string(r.conjectured)
            << (r.consistent ? " [consistent]" : " [INCONSISTENT - check this instance!]")
            << "\n";
  json report{{"suite", "emc"},
              {"claim", "f(n,k,s) = max(|A|, |B|) on every solved instance"},
              {"n", r.n},
              {"k", r.k},
              {"s", r.s},
              {"optimum", emc::to_string(r.optimum)},
              {"a_size", emc::to_string(r.a_size)},
              {"b_size", emc::to_string(r.b_size)},
              {"conjectured", emc::to_string(r.conjectured)},
              {"consistent", r.consistent},
              {"nodes_explored", r.nodes_explored},
              {"pass", r.consistent}};
  return finish_report(report, output, r.consistent);
}

// ------------------------------------------------------------------- bounds

int run_bounds(int s, int k, const std::string& delta_text, const std::string& c_text,
               const std::string& delta0_text, const std::string& output) {
  emc::BoundParams p;
  p.s = s;
  p.k = k;
  p.delta = parse_rational_flag(delta_text, "--delta");
  p.big_c = parse_rational_flag(c_text, "--C");
  p.delta0 = parse_rational_flag(delta0_text, "--delta0");
  p.validate();

  const emc::Rational stab = emc::stab_upper_bound(p);
  const emc::Rational supersat = emc::supersat_lower_bound(p);  // throws if delta > 1/(200C)
  const emc::EpsilonFormulas eps = emc::epsilon_formulas(s, p.big_c, p.delta0);

  std::ostringstream table;
  auto row = [&](const char* name, const emc::Rational& v) {
    table << name << " = " << emc::to_string(v) << " (~" << emc::decimal_string(v) << ")\n";
  };
  row("stab_upper_bound", stab);
  row("supersat_lower_bound", supersat);
  row("epsilon_star", eps.epsilon_star);
  row("epsilon", eps.epsilon);
  std::cerr << table.str();

  json report{{"claim",
               "bound arithmetic: density coefficient (s-1)/s - (s-2)delta/(s^3(s-1)C); "
               "disjoint-pair lower bound delta(s-2)/(2Cs(s-1)) * C(sk-1,k-1) * C((s-1)k,k); "
               "epsilon_star = min{(s-2)delta0/(s^3(s-1)C), (s-1)/s - delta0}, epsilon = "
               "epsilon_star/(s+1)"},
              {"s", s},
              {"k", k},
              {"delta", emc::to_string(p.delta)},
              {"C", emc::to_string(p.big_c)},
              {"delta0", emc::to_string(p.delta0)},
              {"stab_upper_bound", rational_json(stab)},
              {"supersat_lower_bound", rational_json(supersat)},
              {"epsilon_star", rational_json(eps.epsilon_star)},
              {"epsilon", rational_json(eps.epsilon)}};
  write_text(output, report.dump(2) + "\n");
  return kExitPass;
}

// -------------------------------------------------------------------- sweep

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int require_grid_int(const json& entry, const char* field) {
  if (!entry.contains(field) || !entry[field].is_number_integer())
    throw std::invalid_argument(std::string("grid instances need an integer field `") + field +
                                "`");
  return entry[field].get<int>();
}

int run_sweep(const std::string& grid_path, const std::string& output, int workers) {
  std::ifstream in(grid_path);
  if (!in) throw std::invalid_argument("cannot open grid file: " + grid_path);
  json grid;
  try {
    in >> grid;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("grid file parse error: ") + e.what());
  }
  if (!grid.is_object() || !grid.contains("instances") || !grid["instances"].is_array())
    throw std::invalid_argument("grid file must be an object with an `instances` array");
  std::optional<std::uint64_t> node_budget;
  if (grid.contains("node_budget")) {
    if (!grid["node_budget"].is_number_integer())
      throw std::invalid_argument("grid `node_budget` must be an integer");
    node_budget = grid["node_budget"].get<std::uint64_t>();
  }
  if (grid.contains("workers")) {
    if (!grid["workers"].is_number_integer())
      throw std::invalid_argument("grid `workers` must be an integer");
    workers = grid["workers"].get<int>();
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!output.empty() && output != "-") {
    file_out.open(output);
    if (!file_out) throw std::invalid_argument("cannot open output file: " + output);
    out = &file_out;
  }

  *out << "n,k,s,optimum,a_size,b_size,ratio,gap,nodes,time_seconds,status\n";
  out->flush();

  bool any_capped = false;
  bool any_truncated = false;
  for (const auto& entry : grid["instances"]) {
    if (!entry.is_object())
      throw std::invalid_argument("grid instances must be objects with fields n, k, s");
    const int n = require_grid_int(entry, "n");
    const int k = require_grid_int(entry, "k");
    const int s = require_grid_int(entry, "s");

    emc::Problem p;
    p.n = n;
    p.k = k;
    p.s = s;
    p.workers = workers;
    p.node_budget = node_budget;
    p.restrict_left_compressed = true;
    if (entry.contains("min_degree")) {
      p.min_degree = static_cast<std::uint64_t>(require_grid_int(entry, "min_degree"));
      p.restrict_left_compressed = false;
    }
    if (entry.contains("max_degree")) {
      p.max_degree = static_cast<std::uint64_t>(require_grid_int(entry, "max_degree"));
      p.restrict_left_compressed = false;
    }
    try {
      p.validate();
    } catch (const emc::CapError&) {
      *out << n << "," << k << "," << s << ",,,,,,,,capped\n";
      out->flush();
      any_capped = true;
      continue;
    }

    emc::SolverResult res = emc::solve_max_family(p);
    const emc::BigCount a_size = n >= s * k - 1 ? emc::binomial(s * k - 1, k) : emc::BigCount(0);
    const emc::BigCount b_size = emc::binomial(n, k) - emc::binomial(n - s + 1, k);
    const emc::Rational ratio = res.feasible
                                    ? emc::Rational(res.optimum, emc::binomial(n, k))
                                    : emc::Rational(0);
    const emc::Rational gap = emc::Rational(s - 1, s) - ratio;
    if (!res.proven_optimal) any_truncated = true;

    *out << n << "," << k << "," << s << ","
         << (res.feasible ? emc::to_string(res.optimum) : std::string()) << ","
         << emc::to_string(a_size) << "," << emc::to_string(b_size) << ","
         << csv_field(emc::to_string(ratio)) << "," << csv_field(emc::to_string(gap)) << ","
         << res.nodes_explored << "," << res.wall_seconds << ","
         << (res.proven_optimal ? (res.feasible ? "ok" : "infeasible") : "truncated") << "\n";
    out->flush();
  }
  if (any_capped) return kExitUsage;
  if (any_truncated) return kExitTruncated;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search and verification for set families with bounded matchings"};
  app.require_subcommand(1);
  int workers = 1;

  // construct
  ConstructArgs cons;
  auto* construct = app.add_subcommand("construct", "emit a named family as JSON");
  construct->add_option("kind", cons.kind, "A | B | star | kleitman")->required();
  construct->add_option("--n", cons.n, "ground set size")->required();
  construct->add_option("--k", cons.k, "uniformity")->required();
  construct->add_option("--s", cons.s, "matching parameter (A, B)");
  construct->add_option("--x", cons.x, "distinguished element (star, kleitman)");
  construct->add_flag("--stats", cons.stats, "print size / matching number / degrees to stderr");
  construct->add_option("--output", cons.output, "write the family here instead of stdout");

  // compress
  std::string comp_input, comp_output;
  bool comp_stats = false;
  auto* compress = app.add_subcommand("compress", "left-compress a family to its fixed point");
  compress->add_option("--input", comp_input, "family JSON path (default: stdin)");
  compress->add_option("--output", comp_output, "write the compressed family here");
  compress->add_flag("--stats", comp_stats, "print before/after stats to stderr");

  // solve
  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run the exact branch-and-bound solver");
  solve->add_option("--n", solve_args.prob.n, "ground set size")->required();
  solve->add_option("--k", solve_args.prob.k, "uniformity")->required();
  solve->add_option("--s", solve_args.prob.s, "forbid s pairwise disjoint members")->required();
  solve->add_option("--objective", solve_args.objective, "max-size | min-disjoint-pairs");
  solve->add_option("--min-degree", solve_args.prob.min_degree, "minimum degree floor");
  solve->add_option("--max-degree", solve_args.prob.max_degree, "maximum degree cap");
  solve->add_option("--fixed-size", solve_args.prob.fixed_size,
                    "family size (min-disjoint-pairs only)");
  solve->add_flag("--restrict-left-compressed", solve_args.prob.restrict_left_compressed,
                  "search left-compressed families only");
  solve->add_option("--forced", solve_args.forced_path, "family JSON of members to force in");
  solve->add_option("--forbidden", solve_args.forbidden_path,
                    "family JSON of members to keep out");
  solve->add_option("--node-budget", solve_args.prob.node_budget, "stop after this many nodes");
  solve->add_option("--workers", solve_args.prob.workers, "worker threads (default EMC_WORKERS)");
  solve->add_flag("--canonical-witness", solve_args.prob.canonical_witness,
                  "report the colex-least optimal family");
  solve->add_flag("--enumerate-optima", solve_args.enumerate, "collect every optimal family");
  solve->add_option("--export-lp", solve_args.export_lp_path,
                    "write the LP model here and skip solving");
  solve->add_option("--output", solve_args.output, "write the result JSON here");

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  int vk_s = 3, vk_k = 2;
  std::string vk_output;
  auto* v_kleitman = verify->add_subcommand("kleitman", "extremal value and optima at n = sk");
  v_kleitman->add_option("--s", vk_s)->required();
  v_kleitman->add_option("--k", vk_k)->required();
  v_kleitman->add_option("--output", vk_output, "write the JSON report here");

  std::string sd_input, sd_output;
  auto* v_shiftdeg =
      verify->add_subcommand("shiftdeg", "degree inequalities of a left-compressed family");
  v_shiftdeg->alias("lemma-shiftdeg");
  v_shiftdeg->add_option("--input", sd_input, "family JSON path (default: stdin)");
  v_shiftdeg->add_option("--output", sd_output, "write the JSON report here");

  std::string dc_input, dc_output;
  auto* v_double =
      verify->add_subcommand("double-count", "partition double count over the complement");
  v_double->add_option("--input", dc_input, "family JSON path (default: stdin)");
  v_double->add_option("--output", dc_output, "write the JSON report here");

  int dr_s = 3, dr_k = 2;
  std::string dr_output;
  auto* v_drop = verify->add_subcommand("drop-ratio", "density gap at n = sk + 1");
  v_drop->add_option("--s", dr_s)->required();
  v_drop->add_option("--k", dr_k)->required();
  v_drop->add_option("--workers", workers, "worker threads (default EMC_WORKERS)");
  v_drop->add_option("--output", dr_output, "write the JSON report here");

  int em_n = 0, em_k = 0, em_s = 0;
  std::string em_output;
  auto* v_emc = verify->add_subcommand("emc", "compare the optimum against max(|A|,|B|)");
  v_emc->add_option("--n", em_n)->required();
  v_emc->add_option("--k", em_k)->required();
  v_emc->add_option("--s", em_s)->required();
  v_emc->add_option("--workers", workers, "worker threads (default EMC_WORKERS)");
  v_emc->add_option("--output", em_output, "write the JSON report here");

  // bounds
  int b_s = 3, b_k = 2;
  std::string b_delta, b_c, b_delta0, b_output;
  auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds exactly");
  bounds->add_option("--s", b_s)->required();
  bounds->add_option("--k", b_k)->required();
  bounds->add_option("--delta", b_delta, "exact rational, e.g. 1/1000")->required();
  bounds->add_option("--C", b_c, "exact rational constant")->required();
  bounds->add_option("--delta0", b_delta0, "exact rational threshold")->required();
  bounds->add_option("--output", b_output, "write the JSON report here");

  // sweep
  std::string sw_grid, sw_output;
  auto* sweep = app.add_subcommand("sweep", "solve a grid of instances into CSV");
  sweep->add_option("grid", sw_grid, "grid JSON file with an `instances` array")->required();
  sweep->add_option("--workers", workers, "worker threads (default EMC_WORKERS)");
  sweep->add_option("--output", sw_output, "CSV path (default: stdout)");

  try {
    workers = default_workers();
    solve_args.prob.workers = workers;
  } catch (const std::invalid_argument& e) {
    std::cerr << "emc: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(cons);
    if (compress->parsed()) return run_compress(comp_input, comp_output, comp_stats);
    if (solve->parsed()) return run_solve(solve_args);
    if (verify->parsed()) {
      if (v_kleitman->parsed()) return run_verify_kleitman(vk_s, vk_k, vk_output);
      if (v_shiftdeg->parsed()) return run_verify_shiftdeg(sd_input, sd_output);
      if (v_double->parsed()) return run_verify_double_count(dc_input, dc_output);
      if (v_drop->parsed()) return run_verify_drop_ratio(dr_s, dr_k, workers, dr_output);
      if (v_emc->parsed()) return run_verify_emc(em_n, em_k, em_s, workers, em_output);
    }
    if (bounds->parsed()) return run_bounds(b_s, b_k, b_delta, b_c, b_delta0, b_output);
    if (sweep->parsed()) return run_sweep(sw_grid, sw_output, workers);
  } catch (const emc::CapError& e) {
    std::cerr << "emc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "emc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "emc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "emc: " << e.what() << "\n";
    return kExitTruncated;
  } catch (const std::exception& e) {
    std::cerr << "emc: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
