// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emc/constructions.hpp"
#include "emc/core.hpp"
#include "emc/family.hpp"
#include "emc/numbers.hpp"
#include "emc/partitions.hpp"
#include "emc/random.hpp"
#include "emc/shifting.hpp"
#include "emc/solver.hpp"
#include "support/oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int g_failed = 0;

void report(int index, bool pass, const std::string& detail) {
  std::printf("criterion %2d: %s - %s\n", index, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

void run(int index, bool (*check)(std::ostringstream&)) {
  std::ostringstream detail;
  bool pass = false;
  try {
    pass = check(detail);
  } catch (const std::exception& e) {
    detail << " [exception: " << e.what() << "]";
  }
  report(index, pass, detail.str());
}

std::string fmt_seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2fs", t);
  return buf;
}

// --- 1: exact values at n = sk ------------------------------------------

bool criterion1(std::ostringstream& d) {
  struct Case {
    int n, k, s;
    unsigned want;
  };
  const Case cases[] = {{6, 2, 3, 10}, {8, 2, 4, 21}, {6, 3, 2, 10}};
  bool ok = true;
  for (const Case& c : cases) {
    emc::Problem p;
    p.n = c.n;
    p.k = c.k;
    p.s = c.s;
    auto t0 = Clock::now();
    emc::SolverResult r = emc::solve_max_family(p);
    double dt = seconds_since(t0);
    bool good = r.feasible && r.proven_optimal && r.optimum == c.want && dt < 10.0;
    ok = ok && good;
    d << "f(" << c.n << "," << c.k << "," << c.s << ")=" << emc::to_string(r.optimum)
      << " in " << fmt_seconds(dt) << (good ? "" : " [MISMATCH]") << "; ";
  }
  d << "expected 10, 21, 10, each under 10s";
  return ok;
}

// --- 2: the optima at (6,2,3) are exactly the one-element-avoiding families

bool criterion2(std::ostringstream& d) {
  emc::Problem p;
  p.n = 6;
  p.k = 2;
  p.s = 3;
  std::vector<emc::Family> got = emc::enumerate_optima(p);

  emc::Family complete(6, 2, emc::all_ksets(6, 2));
  std::vector<emc::Family> want;
  for (int x = 1; x <= 6; ++x)
    want.push_back(complete.restrict(0, emc::mask_from_elements({x}, 6)));

  auto by_members = [](const emc::Family& a, const emc::Family& b) {
    return a.members() < b.members();
  };
  std::sort(got.begin(), got.end(), by_members);
  std::sort(want.begin(), want.end(), by_members);
  bool ok = got == want;
  d << got.size() << " optima at (6,2,3); "
    << (ok ? "exactly the 6 one-element-avoiding families"
           : "NOT the 6 one-element-avoiding families");
  return ok;
}

// --- 3: density drop one step above sk ------------------------------------

bool criterion3(std::ostringstream& d) {
  auto t0 = Clock::now();
  emc::DropRatioReport r = emc::drop_ratio_check(3, 2);
  double dt = seconds_since(t0);
  bool ok = r.f_value == 11 && r.ratio == emc::Rational(11, 21) &&
            r.ratio < emc::Rational(2, 3) && r.gap == emc::Rational(1, 7) &&
            r.positive_gap && dt < 60.0;
  d << "f(7,2,3)=" << emc::to_string(r.f_value) << ", ratio " << emc::to_string(r.ratio)
    << ", gap " << emc::to_string(r.gap) << ", proven in " << fmt_seconds(dt)
    << "; expected 11, 11/21, 1/7 under 60s";
  return ok;
}

// --- 4: optimum equals max(|A|,|B|) across the solved grid -----------------

bool criterion4(std::ostringstream& d) {
  bool ok = true;
  int instances = 0;
  std::ostringstream findings;
  auto t0 = Clock::now();
  for (int s = 2; s <= 4; ++s)
    for (int k = 1; k <= 3; ++k)
      for (int n = s * k; n <= s * k + 1; ++n) {
        if (emc::binomial(n, k) > (emc::BigCount(1) << 20)) continue;
        emc::EmcReport r = emc::emc_check(n, k, s);
        ++instances;
        if (!r.consistent) {
          ok = false;
          findings << " finding: f(" << n << "," << k << "," << s << ")="
                   << emc::to_string(r.optimum) << " vs max(|A|,|B|)="
                   << emc::to_string(r.conjectured) << ";";
        }
      }
  d << instances << " grid instances (s<=4, k<=3, sk<=n<=sk+1) in "
    << fmt_seconds(seconds_since(t0)) << "; "
    << (ok ? "optimum = max(|A|,|B|) on every instance"
           : "DEVIATION detected:" + findings.str());
  return ok;
}

// --- 5: shifting invariants on random families -----------------------------

bool criterion5(std::ostringstream& d) {
  emc::SplitMix64 rng(0x5u);
  std::uint64_t families = 0, shifts = 0, violations = 0;
  const std::pair<int, int> shapes[] = {{6, 2}, {7, 2}, {6, 3}};
  auto t0 = Clock::now();
  for (auto [n, k] : shapes) {
    const std::uint64_t universe = emc::binomial64(n, k);
    for (int t = 0; t < 1000; ++t) {
      emc::Family f = emc::random_family(n, k, rng.below(universe + 1), rng);
      ++families;
      const int nu = f.matching_number();
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          emc::Family g = emc::shift_family(f, {i, j});
          ++shifts;
          if (g.size() != f.size()) ++violations;
          if (g.matching_number() > nu) ++violations;
        }
      emc::Family c = emc::left_compress(f);
      if (!emc::verify_shiftdeg_a(c).holds) ++violations;
      if (!emc::verify_shiftdeg_b(c).holds) ++violations;
    }
  }
  d << families << " random families, " << shifts
    << " single shifts, compression fixed points verified in "
    << fmt_seconds(seconds_since(t0)) << "; " << violations << " violations";
  return violations == 0;
}

// --- 6: partition double count on random and named families ----------------

bool criterion6(std::ostringstream& d) {
  auto t0 = Clock::now();
  std::uint64_t checked = 0, bad = 0;
  auto check = [&](const emc::Family& f) {
    emc::DoubleCountReport r = emc::verify_double_count(f);
    bool good = r.identity_holds && r.pair_identity_holds &&
                (!r.nu_within || (r.every_partition_hit && r.chain_holds));
    ++checked;
    if (!good) ++bad;
  };

  emc::SplitMix64 rng(0x6u);
  const std::pair<int, int> shapes[] = {{3, 2}, {2, 3}};  // (s, k)
  for (auto [s, k] : shapes) {
    const int n = s * k;
    const std::uint64_t universe = emc::binomial64(n, k);
    for (int t = 0; t < 200; ++t)
      check(emc::random_family(n, k, rng.below(universe + 1), rng));
  }

  check(emc::construct_A(6, 2, 3));
  check(emc::construct_B(6, 2, 3));
  check(emc::star(6, 2, 1));
  check(emc::kleitman_extremal(6, 2, 6));
  check(emc::construct_A(6, 3, 2));
  check(emc::construct_B(6, 3, 2));
  check(emc::star(6, 3, 1));
  check(emc::Family(6, 2));
  check(emc::Family(6, 2, emc::all_ksets(6, 2)));
  check(emc::Family(6, 3, emc::all_ksets(6, 3)));

  double dt = seconds_since(t0);
  d << checked << " families (400 random at (s,k)=(3,2),(2,3) plus named constructions) in "
    << fmt_seconds(dt) << "; " << bad << " identity failures; budget 30s";
  return bad == 0 && dt < 30.0;
}

// --- 7: counting formulas against enumeration ------------------------------

bool criterion7(std::ostringstream& d) {
  bool ok = emc::count_partitions(3, 2) == 15 && emc::count_M(3, 2) == 3 &&
            emc::count_M_prime(3, 2) == 1 && emc::count_partitions(2, 3) == 10;
  ok = ok && emc::enumerate_partitions(3, 2).size() == 15 &&
       emc::enumerate_partitions(2, 3).size() == 10 &&
       oracle::partitions_containing(3, 2, {{1, 2}}) == 3 &&
       oracle::partitions_containing(3, 2, {{1, 2}, {3, 4}}) == 1;
  d << "count_partitions(3,2)=" << emc::to_string(emc::count_partitions(3, 2))
    << ", count_M(3,2)=" << emc::to_string(emc::count_M(3, 2))
    << ", count_M_prime(3,2)=" << emc::to_string(emc::count_M_prime(3, 2))
    << ", count_partitions(2,3)=" << emc::to_string(emc::count_partitions(2, 3))
    << "; enumeration agrees: " << (ok ? "yes" : "NO");
  return ok;
}

// --- 8: bound formula arithmetic --------------------------------------------

bool criterion8(std::ostringstream& d) {
  emc::EpsilonFormulas ef = emc::epsilon_formulas(3, emc::Rational(100), emc::Rational(1, 100));
  bool values_ok = ef.epsilon_star == emc::Rational(1, 540000) &&
                   ef.epsilon == emc::Rational(1, 2160000);

  emc::BoundParams over;
  over.s = 3;
  over.k = 2;
  over.delta = emc::Rational(1, 100);  // above 1/(200*100)
  over.big_c = 100;
  over.delta0 = emc::Rational(1, 100);
  bool rejected = false;
  try {
    emc::supersat_lower_bound(over);
  } catch (const std::domain_error&) {
    rejected = true;
  }

  emc::BoundParams boundary = over;
  boundary.delta = emc::Rational(1, 20000);  // exactly 1/(200C)
  bool boundary_ok = true;
  try {
    emc::supersat_lower_bound(boundary);
  } catch (const std::exception&) {
    boundary_ok = false;
  }

  d << "epsilon_formulas(3,100,1/100) = (" << emc::to_string(ef.epsilon_star) << ", "
    << emc::to_string(ef.epsilon) << "), expected (1/540000, 1/2160000); delta over 1/(200C) "
    << (rejected ? "rejected" : "NOT rejected") << ", boundary accepted: "
    << (boundary_ok ? "yes" : "NO");
  return values_ok && rejected && boundary_ok;
}

// --- 9: minimum disjoint pairs under a degree cap ---------------------------

bool criterion9(std::ostringstream& d) {
  auto t0 = Clock::now();
  emc::Problem p;
  p.n = 6;
  p.k = 2;
  p.s = 2;
  p.objective = emc::Objective::kMinDisjointPairs;
  p.fixed_size = 5;
  p.max_degree = 4;
  emc::SolverResult r = emc::solve_min_disjoint_pairs(p);
  std::optional<std::uint64_t> oracle_value = oracle::min_disjoint_pairs(6, 2, 5, 4);
  double dt = seconds_since(t0);
  bool ok = r.feasible && r.proven_optimal && r.optimum == 2 && oracle_value &&
            *oracle_value == 2 && dt < 10.0;
  d << "min disjoint pairs at (6,2,size=5,maxdeg=4): solver "
    << emc::to_string(r.optimum) << ", exhaustive oracle "
    << (oracle_value ? std::to_string(*oracle_value) : std::string("none")) << ", in "
    << fmt_seconds(dt) << "; expected 2 under 10s";
  return ok;
}

// --- 10: solver equals the full-enumeration oracle ---------------------------

bool criterion10(std::ostringstream& d) {
  bool ok = true;
  int instances = 0;
  const std::pair<int, int> shapes[] = {{4, 1}, {4, 2}, {5, 2}, {6, 2}, {5, 3}, {6, 4}};
  const std::optional<std::uint64_t> degree_choices[] = {std::nullopt, 1, 2};
  auto t0 = Clock::now();
  for (auto [n, k] : shapes)
    for (int s = 2; s <= 3; ++s)
      for (const auto& md : degree_choices)
        for (const auto& xd : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{2}}) {
          oracle::MaxFamilyConstraints c;
          c.s = s;
          c.min_degree = md;
          c.max_degree = xd;
          oracle::MaxFamilyAnswer want = oracle::max_family(n, k, c);

          emc::Problem p;
          p.n = n;
          p.k = k;
          p.s = s;
          p.min_degree = md;
          p.max_degree = xd;
          emc::SolverResult r = emc::solve_max_family(p);
          ++instances;
          bool good = want.optimum >= 0
                          ? (r.feasible && r.optimum == want.optimum)
                          : !r.feasible;
          if (!good) {
            ok = false;
            d << " mismatch at (" << n << "," << k << ",s=" << s << ");";
          }
        }

  // forced / forbidden members on a mid-size instance
  const emc::Mask lo = emc::mask_from_elements({1, 2}, 5);
  const emc::Mask hi = emc::mask_from_elements({4, 5}, 5);
  for (int variant = 0; variant < 3; ++variant) {
    oracle::MaxFamilyConstraints c;
    c.s = 2;
    if (variant != 1) c.forced = {lo};
    if (variant != 0) c.forbidden = {hi};
    oracle::MaxFamilyAnswer want = oracle::max_family(5, 2, c);

    emc::Problem p;
    p.n = 5;
    p.k = 2;
    p.s = 2;
    if (variant != 1) p.forced_members = {lo};
    if (variant != 0) p.forbidden_members = {hi};
    emc::SolverResult r = emc::solve_max_family(p);
    ++instances;
    bool good = want.optimum >= 0 ? (r.feasible && r.optimum == want.optimum) : !r.feasible;
    if (!good) {
      ok = false;
      d << " mismatch on forced/forbidden variant " << variant << ";";
    }
  }

  d << instances << " instances with C(n,k) <= 20 across degree and membership constraints in "
    << fmt_seconds(seconds_since(t0)) << "; "
    << (ok ? "solver equals the exhaustive oracle everywhere" : "MISMATCHES above");
  return ok;
}

// --- 11: determinism across worker counts ------------------------------------

bool criterion11(std::ostringstream& d) {
  struct Case {
    int n, k, s;
  };
  const Case cases[] = {{6, 2, 3}, {8, 2, 4}, {6, 3, 2}, {7, 2, 3}};
  bool ok = true;
  for (const Case& c : cases) {
    emc::BigCount first_opt;
    std::vector<emc::Mask> first_witness;
    std::uint64_t first_nodes = 0;
    bool have_first = false;
    for (int workers : {1, 2, 8}) {
      emc::Problem p;
      p.n = c.n;
      p.k = c.k;
      p.s = c.s;
      p.workers = workers;
      p.canonical_witness = true;
      emc::SolverResult r = emc::solve_max_family(p);
      if (!have_first) {
        first_opt = r.optimum;
        first_witness = r.witnesses.at(0).members();
        first_nodes = r.nodes_explored;
        have_first = true;
      } else if (r.optimum != first_opt || r.witnesses.at(0).members() != first_witness ||
                 r.nodes_explored != first_nodes) {
        ok = false;
        d << " divergence at (" << c.n << "," << c.k << "," << c.s << ") workers=" << workers
          << ";";
      }
    }
  }
  d << "workers {1,2,8} on (6,2,3), (8,2,4), (6,3,2), (7,2,3): "
    << (ok ? "identical optimum, canonical witness, and node count"
           : "DIVERGENCE above");
  return ok;
}

}  // namespace

int main() {
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  run(9, criterion9);
  run(10, criterion10);
  run(11, criterion11);
  std::printf("acceptance: %d/11 criteria passed\n", 11 - g_failed);
  return g_failed == 0 ? 0 : 1;
}
