#include "emc/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "emc/constructions.hpp"
#include "emc/core.hpp"
#include "emc/errors.hpp"

namespace emc {

namespace {

constexpr std::uint64_t kUniverseCap = std::uint64_t{1} << 20;
constexpr std::uint64_t kTupleCap = std::uint64_t{1} << 22;
constexpr int kFrontierDepth = 6;  // fixed split depth; independent of worker count

std::uint32_t rank_of(Mask m) { return static_cast<std::uint32_t>(colex_rank(KSet{m})); }

// ---------------------------------------------------------------------------
// Prepared instance: candidate universe plus the static structures the search
// kernels consult. Shared read-only by all tasks.

struct Instance {
  Problem prob;
  std::uint32_t m = 0;          // C(n,k)
  std::vector<Mask> cand;       // index == colex rank
  std::vector<int> cand_k;      // elements per candidate, cached as int lists
  std::vector<std::uint32_t> forced_ranks;
  std::vector<std::uint32_t> forbidden_ranks;

  // dominance upper covers (only built when restrict_left_compressed)
  std::vector<std::uint32_t> cover_off;
  std::vector<std::uint32_t> cover_dat;

  // all s-tuples of pairwise disjoint candidates, for the covering bound
  bool use_match_bound = false;
  std::uint64_t mu = 0;
  std::vector<std::uint32_t> minc_off;  // per candidate: matching ids
  std::vector<std::uint32_t> minc_dat;
  std::uint64_t max_incidence = 0;
};

void for_each_disjoint_tuple(const std::vector<Mask>& sets, int s,
                             const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> pick;
  pick.reserve(s);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t from, Mask used, int need) -> void {
    if (stop) return;
    if (need == 0) {
      if (!fn(pick)) stop = true;
      return;
    }
    for (std::size_t i = from; i + need <= sets.size() && !stop; ++i) {
      if (sets[i] & used) continue;
      pick.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1, used | sets[i], need - 1);
      pick.pop_back();
    }
  };
  rec(rec, 0, 0, s);
}

Instance build_instance(const Problem& p, bool build_match_bound) {
  Instance ins;
  ins.prob = p;
  KSetStream stream(p.n, p.k);
  ins.m = static_cast<std::uint32_t>(stream.total());
  ins.cand.reserve(ins.m);
  KSet ks;
  while (stream.next(ks)) ins.cand.push_back(ks.bits);

  for (Mask f : p.forced_members) ins.forced_ranks.push_back(rank_of(f));
  for (Mask f : p.forbidden_members) ins.forbidden_ranks.push_back(rank_of(f));
  std::sort(ins.forced_ranks.begin(), ins.forced_ranks.end());
  std::sort(ins.forbidden_ranks.begin(), ins.forbidden_ranks.end());

  if (p.restrict_left_compressed) {
    ins.cover_off.resize(ins.m + 1, 0);
    std::vector<std::vector<std::uint32_t>> covers(ins.m);
    for (std::uint32_t r = 0; r < ins.m; ++r) {
      Mask s = ins.cand[r];
      for (int e : elements_of(s)) {
        if (e == p.n) continue;
        Mask up = Mask{1} << e;  // element e+1
        if (s & up) continue;
        Mask image = (s & ~(Mask{1} << (e - 1))) | up;
        covers[r].push_back(rank_of(image));
      }
    }
    for (std::uint32_t r = 0; r < ins.m; ++r) {
      ins.cover_off[r] = static_cast<std::uint32_t>(ins.cover_dat.size());
      for (std::uint32_t c : covers[r]) ins.cover_dat.push_back(c);
    }
    ins.cover_off[ins.m] = static_cast<std::uint32_t>(ins.cover_dat.size());
  }

  if (build_match_bound && p.objective == Objective::kMaxSize) {
    std::vector<std::vector<std::uint32_t>> inc(ins.m);
    std::uint64_t id = 0;
    bool capped = false;
    for_each_disjoint_tuple(ins.cand, p.s, [&](const std::vector<std::uint32_t>& t) {
      if (id >= kTupleCap) {
        capped = true;
        return false;
      }
      for (std::uint32_t r : t) inc[r].push_back(static_cast<std::uint32_t>(id));
      ++id;
      return true;
    });
    if (!capped) {
      ins.mu = id;
      ins.use_match_bound = ins.mu > 0;
      ins.minc_off.resize(ins.m + 1, 0);
      for (std::uint32_t r = 0; r < ins.m; ++r) {
        ins.minc_off[r] = static_cast<std::uint32_t>(ins.minc_dat.size());
        ins.max_incidence = std::max<std::uint64_t>(ins.max_incidence, inc[r].size());
        for (std::uint32_t x : inc[r]) ins.minc_dat.push_back(x);
      }
      ins.minc_off[ins.m] = static_cast<std::uint32_t>(ins.minc_dat.size());
    }
  }
  return ins;
}

// ---------------------------------------------------------------------------
// Mutable search state with trail-based undo.

enum : std::uint8_t { kUndecided = 0, kIncluded = 1, kExcluded = 2 };

struct State {
  const Instance* ins = nullptr;
  std::vector<std::uint8_t> status;
  std::vector<Mask> included;      // masks, in inclusion order (ascending rank)
  std::uint32_t included_count = 0;
  std::uint32_t available_count = 0;
  std::vector<std::uint16_t> excl_blocks;  // per matching id
  std::uint64_t alive = 0;
  std::vector<std::uint32_t> deg;        // per element 1..n
  std::vector<std::uint32_t> avail_deg;  // per element: undecided candidates through it
  std::uint64_t pairs = 0;               // disjoint pairs among included
  std::vector<std::uint32_t> trail;      // rank<<1 | (1 = include)
  std::vector<std::uint32_t> cached_witness;  // ranks of an (s-1)-matching seen included

  void init(const Instance& instance) {
    ins = &instance;
    status.assign(ins->m, kUndecided);
    included.clear();
    included_count = 0;
    available_count = ins->m;
    excl_blocks.assign(static_cast<std::size_t>(ins->mu), 0);
    alive = ins->mu;
    deg.assign(ins->prob.n + 1, 0);
    avail_deg.assign(ins->prob.n + 1, 0);
    for (std::uint32_t r = 0; r < ins->m; ++r)
      for (int x : elements_of(ins->cand[r])) ++avail_deg[x];
    pairs = 0;
    trail.clear();
    cached_witness.clear();
  }

  void apply_exclude(std::uint32_t r) {
    status[r] = kExcluded;
    --available_count;
    for (int x : elements_of(ins->cand[r])) --avail_deg[x];
    if (ins->use_match_bound)
      for (std::uint32_t t = ins->minc_off[r]; t < ins->minc_off[r + 1]; ++t)
        if (excl_blocks[ins->minc_dat[t]]++ == 0) --alive;
    trail.push_back(r << 1);
  }

  // Excludes r and, in restricted mode, its whole dominance upper cone.
  // Returns false on contradiction (an included candidate in the cone);
  // the caller must unwind to its own mark either way.
  bool exclude(std::uint32_t r) {
    if (status[r] == kIncluded) return false;
    if (status[r] == kExcluded) return true;
    apply_exclude(r);
    if (ins->prob.restrict_left_compressed) {
      // BFS over upper covers; trail doubles as the queue
      std::size_t head = trail.size() - 1;
      while (head < trail.size()) {
        std::uint32_t cur = trail[head++] >> 1;
        for (std::uint32_t t = ins->cover_off[cur]; t < ins->cover_off[cur + 1]; ++t) {
          std::uint32_t up = ins->cover_dat[t];
          if (status[up] == kIncluded) return false;
          if (status[up] == kUndecided) apply_exclude(up);
        }
      }
    }
    return true;
  }

  void include(std::uint32_t r) {
    status[r] = kIncluded;
    --available_count;
    ++included_count;
    const Mask m = ins->cand[r];
    for (Mask x : included)
      if (!(x & m)) ++pairs;
    included.push_back(m);
    for (int x : elements_of(m)) {
      ++deg[x];
      --avail_deg[x];
    }
    trail.push_back((r << 1) | 1);
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      std::uint32_t e = trail.back();
      trail.pop_back();
      std::uint32_t r = e >> 1;
      if (e & 1) {
        status[r] = kUndecided;
        ++available_count;
        --included_count;
        included.pop_back();
        const Mask m = ins->cand[r];
        for (Mask x : included)
          if (!(x & m)) --pairs;
        for (int x : elements_of(m)) {
          --deg[x];
          ++avail_deg[x];
        }
      } else {
        status[r] = kUndecided;
        ++available_count;
        for (int x : elements_of(ins->cand[r])) ++avail_deg[x];
        if (ins->use_match_bound)
          for (std::uint32_t t = ins->minc_off[r]; t < ins->minc_off[r + 1]; ++t)
            if (--excl_blocks[ins->minc_dat[t]] == 0) ++alive;
      }
    }
  }

  // Upper bound on the best completion size: every alive s-tuple forces at
  // least one more exclusion, and one exclusion kills at most max_incidence
  // alive tuples.
  std::uint64_t bound() const {
    std::uint64_t lb = 0;
    if (ins->use_match_bound && alive > 0)
      lb = (alive + ins->max_incidence - 1) / ins->max_incidence;
    return included_count + available_count - lb;
  }

  bool max_degree_ok(Mask m) const {
    if (!ins->prob.max_degree) return true;
    for (int x : elements_of(m))
      if (deg[x] + 1 > *ins->prob.max_degree) return false;
    return true;
  }

  bool min_degree_feasible() const {
    if (!ins->prob.min_degree) return true;
    for (int x = 1; x <= ins->prob.n; ++x)
      if (deg[x] + avail_deg[x] < *ins->prob.min_degree) return false;
    return true;
  }

  bool min_degree_met() const {
    if (!ins->prob.min_degree) return true;
    for (int x = 1; x <= ins->prob.n; ++x)
      if (deg[x] < *ins->prob.min_degree) return false;
    return true;
  }

  // True iff the family stays at matching number <= s-1 after adding cand[r].
  bool include_keeps_nu(std::uint32_t r) {
    const int need = ins->prob.s - 1;
    if (need == 0) return included_count == 0;
    const Mask m = ins->cand[r];
    if (cached_witness.size() == static_cast<std::size_t>(need)) {
      bool live = true;
      for (std::uint32_t w : cached_witness)
        if (status[w] != kIncluded || (ins->cand[w] & m)) {
          live = false;
          break;
        }
      if (live) return false;
    }
    std::vector<Mask> pool;
    pool.reserve(included.size());
    for (Mask x : included)
      if (!(x & m)) pool.push_back(x);
    if (static_cast<int>(pool.size()) < need) return true;
    std::vector<Mask> witness;
    auto rec = [&](auto&& self, std::size_t from, Mask used, int left) -> bool {
      if (left == 0) return true;
      for (std::size_t i = from; i + left <= pool.size(); ++i) {
        if (pool[i] & used) continue;
        witness.push_back(pool[i]);
        if (self(self, i + 1, used | pool[i], left - 1)) return true;
        witness.pop_back();
      }
      return false;
    };
    if (!rec(rec, 0, 0, need)) return true;
    cached_witness.clear();
    for (Mask w : witness) cached_witness.push_back(rank_of(w));
    return false;
  }

  bool include_feasible(std::uint32_t r) {
    return max_degree_ok(ins->cand[r]) && include_keeps_nu(r);
  }
};

// Applies forced/forbidden members. Returns false when contradictory.
bool init_root(State& st, const Instance& ins) {
  st.init(ins);
  for (std::uint32_t r : ins.forbidden_ranks)
    if (!st.exclude(r)) return false;
  for (std::uint32_t r : ins.forced_ranks) {
    if (st.status[r] == kExcluded) return false;
    if (st.status[r] == kIncluded) continue;
    if (ins.prob.objective == Objective::kMaxSize && !st.include_keeps_nu(r)) return false;
    if (!st.max_degree_ok(ins.cand[r])) return false;
    st.include(r);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Max-size search: frontier split into tasks, task-local incumbents seeded
// with a shared initial value so node counts do not depend on worker count.

struct TaskSpec {
  std::vector<std::pair<std::uint32_t, bool>> path;  // genuine branch decisions
  std::uint32_t scan_from = 0;
};

struct MaxSearch {
  const Instance& ins;
  std::int64_t seed_best = -1;
  std::uint64_t budget = 0;  // 0 = unlimited
  std::uint64_t nodes = 0;
  bool truncated = false;

  std::int64_t best = -1;
  std::vector<Mask> best_family;

  explicit MaxSearch(const Instance& i) : ins(i) {}

  std::uint32_t next_undecided(const State& st, std::uint32_t from) const {
    while (from < ins.m && st.status[from] != kUndecided) ++from;
    return from;
  }

  void record_leaf(State& st) {
    if (static_cast<std::int64_t>(st.included_count) > best && st.min_degree_met()) {
      best = st.included_count;
      best_family = st.included;
    }
  }

  void dfs(State& st, std::uint32_t scan_from) {
    if (truncated) return;
    ++nodes;
    if (budget && nodes > budget) {
      truncated = true;
      return;
    }
    const std::size_t mark = st.trail.size();
    std::uint32_t c;
    while (true) {
      if (!st.min_degree_feasible() ||
          static_cast<std::int64_t>(st.bound()) <= best) {
        st.undo_to(mark);
        return;
      }
      c = next_undecided(st, scan_from);
      if (c >= ins.m) {
        record_leaf(st);
        st.undo_to(mark);
        return;
      }
      scan_from = c + 1;
      if (st.include_feasible(c)) break;
      if (!st.exclude(c)) {
        st.undo_to(mark);
        return;
      }
    }
    {
      const std::size_t m2 = st.trail.size();
      st.include(c);
      dfs(st, scan_from);
      st.undo_to(m2);
    }
    if (!truncated) {
      const std::size_t m2 = st.trail.size();
      if (st.exclude(c)) dfs(st, scan_from);
      st.undo_to(m2);
    }
    st.undo_to(mark);
  }

  // Limited-depth DFS that emits frontier tasks instead of recursing past
  // kFrontierDepth genuine decisions. Prunes with seed_best only, so the
  // emitted task set never depends on any task outcome.
  void split(State& st, std::uint32_t scan_from, int depth,
             std::vector<std::pair<std::uint32_t, bool>>& path,
             std::vector<TaskSpec>& out) {
    if (depth == kFrontierDepth) {
      out.push_back(TaskSpec{path, scan_from});
      return;
    }
    ++nodes;
    const std::size_t mark = st.trail.size();
    std::uint32_t c;
    while (true) {
      if (!st.min_degree_feasible() ||
          static_cast<std::int64_t>(st.bound()) <= seed_best) {
        st.undo_to(mark);
        return;
      }
      c = next_undecided(st, scan_from);
      if (c >= ins.m) {
        record_leaf(st);
        st.undo_to(mark);
        return;
      }
      scan_from = c + 1;
      if (st.include_feasible(c)) break;
      if (!st.exclude(c)) {
        st.undo_to(mark);
        return;
      }
    }
    {
      const std::size_t m2 = st.trail.size();
      st.include(c);
      path.emplace_back(c, true);
      split(st, scan_from, depth + 1, path, out);
      path.pop_back();
      st.undo_to(m2);
    }
    {
      const std::size_t m2 = st.trail.size();
      if (st.exclude(c)) {
        path.emplace_back(c, false);
        split(st, scan_from, depth + 1, path, out);
        path.pop_back();
      }
      st.undo_to(m2);
    }
    st.undo_to(mark);
  }

  // Rebuilds the state along a task path (no node accounting: these are the
  // splitter's nodes, already counted once).
  bool replay(State& st, const TaskSpec& task) const {
    std::uint32_t scan_from = 0;
    for (auto [rank, inc] : task.path) {
      while (true) {
        std::uint32_t c = next_undecided(st, scan_from);
        if (c >= ins.m) return false;
        scan_from = c + 1;
        if (c == rank) {
          if (inc) {
            st.include(c);
          } else if (!st.exclude(c)) {
            return false;
          }
          break;
        }
        if (st.include_feasible(c)) return false;  // path mismatch
        if (!st.exclude(c)) return false;
      }
    }
    return true;
  }
};

struct TaskOutcome {
  std::int64_t best = -1;
  std::vector<Mask> family;
  std::uint64_t nodes = 0;
  bool truncated = false;
};

// Seed incumbents: named constructions plus a greedy dive, all validated
// against the full constraint set. Pure function of the problem, so every
// worker layout sees the same starting bound.
std::vector<Family> candidate_seeds(const Problem& p, const Instance& ins) {
  std::vector<Family> seeds;
  auto add = [&](const Family& f) {
    if (satisfies_constraints(p, f)) seeds.push_back(f);
  };
  if (p.n >= p.s * p.k - 1) add(construct_A(p.n, p.k, p.s));
  add(construct_B(p.n, p.k, p.s));
  if (p.n % p.k == 0 && p.n / p.k >= 2)
    for (int x = 1; x <= p.n; ++x) add(kleitman_extremal(p.n, p.k, x));
  // greedy dive with the search's own propagation rules
  State st;
  if (init_root(st, ins)) {
    MaxSearch helper(ins);
    std::uint32_t scan = 0;
    bool complete = true;
    while (true) {
      std::uint32_t c = helper.next_undecided(st, scan);
      if (c >= ins.m) break;
      scan = c + 1;
      if (st.include_feasible(c)) {
        st.include(c);
      } else if (!st.exclude(c)) {
        complete = false;
        break;
      }
    }
    if (complete) add(Family(p.n, p.k, st.included));
  }
  return seeds;
}

SolverResult run_max_search(const Problem& p) {
  const auto t0 = std::chrono::steady_clock::now();
  Instance ins = build_instance(p, true);
  SolverResult res;

  State root;
  if (!init_root(root, ins)) {
    res.proven_optimal = true;
    res.feasible = false;
    res.nodes_explored = 0;
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  std::int64_t v0 = -1;
  std::vector<Mask> v0_family;
  for (const Family& f : candidate_seeds(p, ins))
    if (static_cast<std::int64_t>(f.size()) > v0) {
      v0 = static_cast<std::int64_t>(f.size());
      v0_family = f.members();
    }

  MaxSearch splitter(ins);
  splitter.seed_best = v0;
  splitter.best = v0;
  splitter.best_family = v0_family;
  std::vector<TaskSpec> tasks;
  std::vector<std::pair<std::uint32_t, bool>> path;
  splitter.split(root, 0, 0, path, tasks);
  root.undo_to(0);

  std::uint64_t total_nodes = splitter.nodes;
  std::int64_t best = splitter.best;  // leaves can complete above v0 inside the splitter
  std::vector<Mask> best_family = splitter.best_family;
  bool truncated = false;

  if (!tasks.empty()) {
    const std::uint64_t per_task_budget =
        p.node_budget ? std::max<std::uint64_t>(1, *p.node_budget / tasks.size()) : 0;
    std::vector<TaskOutcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    const int workers = std::max(1, std::min<int>(p.workers, static_cast<int>(tasks.size())));
    auto worker_fn = [&]() {
      State st;
      while (true) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= tasks.size()) return;
        st.init(ins);
        TaskOutcome& out = outcomes[idx];
        if (!init_root(st, ins)) continue;
        MaxSearch search(ins);
        if (!search.replay(st, tasks[idx])) continue;
        search.seed_best = v0;
        search.best = v0;
        search.budget = per_task_budget;
        search.dfs(st, tasks[idx].scan_from);
        out.best = search.best;
        out.family = std::move(search.best_family);
        out.nodes = search.nodes;
        out.truncated = search.truncated;
      }
    };
    if (workers == 1) {
      worker_fn();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
      for (auto& t : pool) t.join();
    }
    for (const TaskOutcome& out : outcomes) {
      total_nodes += out.nodes;
      truncated = truncated || out.truncated;
      if (out.best > best) {
        best = out.best;
        best_family = out.family;
      }
    }
  }

  res.nodes_explored = total_nodes;
  res.proven_optimal = !truncated;
  res.feasible = best >= 0;
  if (res.feasible) {
    res.optimum = BigCount(best);
    res.witnesses.emplace_back(p.n, p.k, best_family);
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

// Second phase: depth-first over the same tree with the optimum known,
// include-first, collecting leaves that attain it. The first leaf found is
// the colex-least optimal family.
struct TargetSearch {
  const Instance& ins;
  std::int64_t target;
  bool first_only;
  std::vector<std::vector<Mask>> found;
  std::uint64_t nodes = 0;

  std::uint32_t next_undecided(const State& st, std::uint32_t from) const {
    while (from < ins.m && st.status[from] != kUndecided) ++from;
    return from;
  }

  bool done() const { return first_only && !found.empty(); }

  void dfs(State& st, std::uint32_t scan_from) {
    if (done()) return;
    ++nodes;
    const std::size_t mark = st.trail.size();
    std::uint32_t c;
    while (true) {
      if (!st.min_degree_feasible() ||
          static_cast<std::int64_t>(st.bound()) < target) {
        st.undo_to(mark);
        return;
      }
      c = next_undecided(st, scan_from);
      if (c >= ins.m) {
        if (static_cast<std::int64_t>(st.included_count) == target && st.min_degree_met())
          found.push_back(st.included);
        st.undo_to(mark);
        return;
      }
      scan_from = c + 1;
      if (st.include_feasible(c)) break;
      if (!st.exclude(c)) {
        st.undo_to(mark);
        return;
      }
    }
    {
      const std::size_t m2 = st.trail.size();
      st.include(c);
      dfs(st, scan_from);
      st.undo_to(m2);
    }
    if (!done()) {
      const std::size_t m2 = st.trail.size();
      if (st.exclude(c)) dfs(st, scan_from);
      st.undo_to(m2);
    }
    st.undo_to(mark);
  }
};

}  // namespace

void Problem::validate() const {
  if (k < 1 || n < k) throw std::invalid_argument("problem: need 1 <= k <= n");
  if (s < 2) throw std::invalid_argument("problem: need s >= 2");
  GroundSet gs(n);
  if (binomial(n, k) > BigCount(kUniverseCap))
    throw CapError("candidate universe exceeds 2^20");
  if (workers < 1) throw std::invalid_argument("problem: workers must be >= 1");
  if (restrict_left_compressed && (min_degree || max_degree))
    throw std::invalid_argument(
        "problem: left-compressed restriction is incompatible with degree constraints");
  if (restrict_left_compressed && objective == Objective::kMinDisjointPairs)
    throw std::invalid_argument(
        "problem: left-compressed restriction applies to the max-size objective only");
  if (objective == Objective::kMinDisjointPairs && (!fixed_size || !max_degree))
    throw std::invalid_argument("problem: pair minimization needs fixed_size and max_degree");
  for (Mask f : forced_members)
    if (std::popcount(f) != k || (f & ~gs.full_mask()))
      throw std::invalid_argument("problem: forced member is not a valid k-set");
  for (Mask f : forbidden_members)
    if (std::popcount(f) != k || (f & ~gs.full_mask()))
      throw std::invalid_argument("problem: forbidden member is not a valid k-set");
  for (Mask f : forced_members)
    for (Mask g : forbidden_members)
      if (f == g) throw std::invalid_argument("problem: forced and forbidden members overlap");
}

bool satisfies_constraints(const Problem& p, const Family& fam) {
  if (fam.n() != p.n || fam.k() != p.k) return false;
  for (Mask f : p.forced_members)
    if (!fam.contains(f)) return false;
  for (Mask f : p.forbidden_members)
    if (fam.contains(f)) return false;
  if (p.objective == Objective::kMaxSize && fam.has_matching_of_size(p.s)) return false;
  if (p.fixed_size && fam.size() != *p.fixed_size) return false;
  if (p.min_degree || p.max_degree) {
    DegreeProfile prof = fam.degree_profile();
    if (p.min_degree && prof.min_degree < *p.min_degree) return false;
    if (p.max_degree && prof.max_degree > *p.max_degree) return false;
  }
  return true;
}

SolverResult solve_max_family(const Problem& p) {
  p.validate();
  if (p.objective != Objective::kMaxSize)
    throw std::invalid_argument("solve_max_family: wrong objective");
  SolverResult res = run_max_search(p);
  if (res.feasible && p.canonical_witness && res.proven_optimal) {
    Instance ins = build_instance(p, true);
    State st;
    if (init_root(st, ins)) {
      TargetSearch ts{ins, static_cast<std::int64_t>(res.optimum.convert_to<std::uint64_t>()),
                      true, {}, 0};
      ts.dfs(st, 0);
      res.nodes_explored += ts.nodes;
      if (!ts.found.empty()) res.witnesses = {Family(p.n, p.k, ts.found.front())};
    }
  }
  return res;
}

std::vector<Family> enumerate_optima(const Problem& p) {
  Problem q = p;
  q.restrict_left_compressed = false;
  q.validate();
  if (q.objective != Objective::kMaxSize)
    throw std::invalid_argument("enumerate_optima: wrong objective");
  SolverResult base = run_max_search(q);
  if (!base.feasible) return {};
  if (!base.proven_optimal)
    throw std::runtime_error("enumerate_optima: search truncated by budget");

  Instance ins = build_instance(q, true);
  State st;
  if (!init_root(st, ins)) return {};
  TargetSearch ts{ins, static_cast<std::int64_t>(base.optimum.convert_to<std::uint64_t>()),
                  false, {}, 0};
  ts.dfs(st, 0);
  for (auto& members : ts.found) std::sort(members.begin(), members.end());
  std::sort(ts.found.begin(), ts.found.end());
  std::vector<Family> out;
  out.reserve(ts.found.size());
  for (auto& members : ts.found) out.emplace_back(q.n, q.k, members);
  return out;
}

SolverResult solve_min_disjoint_pairs(const Problem& p) {
  p.validate();
  if (p.objective != Objective::kMinDisjointPairs)
    throw std::invalid_argument("solve_min_disjoint_pairs: wrong objective");
  const auto t0 = std::chrono::steady_clock::now();
  Instance ins = build_instance(p, false);
  SolverResult res;

  State st;
  if (!init_root(st, ins)) {
    res.proven_optimal = true;
    res.feasible = false;
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  const std::uint64_t want = *p.fixed_size;
  std::int64_t best = -1;
  std::uint64_t best_pairs = 0;
  std::vector<Mask> best_family;
  std::uint64_t nodes = 0;
  bool truncated = false;

  auto rec = [&](auto&& self, std::uint32_t scan_from) -> void {
    if (truncated) return;
    ++nodes;
    if (p.node_budget && nodes > *p.node_budget) {
      truncated = true;
      return;
    }
    if (st.included_count > want) return;
    if (st.included_count + st.available_count < want) return;
    // pairs never decrease along a branch, so no strict improvement remains
    if (best >= 0 && st.pairs >= best_pairs) return;
    if (st.included_count == want) {
      if (st.min_degree_met()) {
        best = static_cast<std::int64_t>(want);
        best_pairs = st.pairs;
        best_family = st.included;
      }
      return;
    }
    std::uint32_t c = scan_from;
    while (c < ins.m && st.status[c] != kUndecided) ++c;
    if (c >= ins.m) return;
    const std::size_t mark = st.trail.size();
    if (st.max_degree_ok(ins.cand[c])) {
      st.include(c);
      self(self, c + 1);
      st.undo_to(mark);
    }
    if (!truncated && st.exclude(c)) self(self, c + 1);
    st.undo_to(mark);
  };
  rec(rec, 0);

  res.nodes_explored = nodes;
  res.proven_optimal = !truncated;
  res.feasible = best >= 0;
  if (res.feasible) {
    res.optimum = BigCount(best_pairs);
    res.witnesses.emplace_back(p.n, p.k, best_family);
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

std::string export_lp(const Problem& p) {
  p.validate();
  Instance ins = build_instance(p, false);
  std::ostringstream lp;
  lp << "\\ emc instance n=" << p.n << " k=" << p.k << " s=" << p.s << "\n";

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_vars;  // for the pair objective
  if (p.objective == Objective::kMaxSize) {
    lp << "Maximize\n obj:";
    int on_line = 0;
    for (std::uint32_t r = 0; r < ins.m; ++r) {
      lp << (r == 0 ? " " : " + ") << "x" << r;
      if (++on_line == 10 && r + 1 < ins.m) {
        lp << "\n     ";
        on_line = 0;
      }
    }
    lp << "\n";
  } else {
    for (std::uint32_t a = 0; a < ins.m; ++a)
      for (std::uint32_t b = a + 1; b < ins.m; ++b)
        if (!(ins.cand[a] & ins.cand[b])) pair_vars.emplace_back(a, b);
    lp << "Minimize\n obj:";
    if (pair_vars.empty()) {
      lp << " 0 x0";
    } else {
      int on_line = 0;
      for (std::size_t t = 0; t < pair_vars.size(); ++t) {
        lp << (t == 0 ? " " : " + ") << "y" << t;
        if (++on_line == 10 && t + 1 < pair_vars.size()) {
          lp << "\n     ";
          on_line = 0;
        }
      }
    }
    lp << "\n";
  }

  lp << "Subject To\n";
  std::uint64_t row = 0;
  if (p.objective == Objective::kMaxSize) {
    bool capped = false;
    for_each_disjoint_tuple(ins.cand, p.s, [&](const std::vector<std::uint32_t>& t) {
      if (row >= kTupleCap) {
        capped = true;
        return false;
      }
      lp << " m" << row << ":";
      for (std::size_t i = 0; i < t.size(); ++i) lp << (i == 0 ? " " : " + ") << "x" << t[i];
      lp << " <= " << (p.s - 1) << "\n";
      ++row;
      return true;
    });
    if (capped) throw CapError("disjoint s-tuple count exceeds export cap");
  } else {
    for (std::size_t t = 0; t < pair_vars.size(); ++t)
      lp << " p" << t << ": x" << pair_vars[t].first << " + x" << pair_vars[t].second
         << " - y" << t << " <= 1\n";
    lp << " size:";
    int on_line = 0;
    for (std::uint32_t r = 0; r < ins.m; ++r) {
      lp << (r == 0 ? " " : " + ") << "x" << r;
      if (++on_line == 10 && r + 1 < ins.m) {
        lp << "\n     ";
        on_line = 0;
      }
    }
    lp << " = " << *p.fixed_size << "\n";
  }
  if (p.min_degree || p.max_degree) {
    for (int x = 1; x <= p.n; ++x) {
      const Mask bit = Mask{1} << (x - 1);
      std::vector<std::uint32_t> through;
      for (std::uint32_t r = 0; r < ins.m; ++r)
        if (ins.cand[r] & bit) through.push_back(r);
      if (p.max_degree) {
        lp << " dmax" << x << ":";
        for (std::size_t i = 0; i < through.size(); ++i)
          lp << (i == 0 ? " " : " + ") << "x" << through[i];
        lp << " <= " << *p.max_degree << "\n";
      }
      if (p.min_degree) {
        lp << " dmin" << x << ":";
        for (std::size_t i = 0; i < through.size(); ++i)
          lp << (i == 0 ? " " : " + ") << "x" << through[i];
        lp << " >= " << *p.min_degree << "\n";
      }
    }
  }

  if (!ins.forced_ranks.empty() || !ins.forbidden_ranks.empty()) {
    lp << "Bounds\n";
    for (std::uint32_t r : ins.forced_ranks) lp << " x" << r << " = 1\n";
    for (std::uint32_t r : ins.forbidden_ranks) lp << " x" << r << " = 0\n";
  }

  lp << "Binaries\n";
  int on_line = 0;
  for (std::uint32_t r = 0; r < ins.m; ++r) {
    lp << " x" << r;
    if (++on_line == 16) {
      lp << "\n";
      on_line = 0;
    }
  }
  for (std::size_t t = 0; t < pair_vars.size(); ++t) {
    lp << " y" << t;
    if (++on_line == 16) {
      lp << "\n";
      on_line = 0;
    }
  }
  if (on_line) lp << "\n";
  lp << "End\n";
  return lp.str();
}

KleitmanReport kleitman_check(int s, int k) {
  if (s < 2 || k < 2) throw std::invalid_argument("kleitman_check: need s,k >= 2");
  KleitmanReport r;
  r.s = s;
  r.k = k;
  r.n = s * k;
  r.expected = binomial(r.n, k) - binomial(r.n - 1, k - 1);

  Problem p;
  p.n = r.n;
  p.k = k;
  p.s = s;
  p.validate();

  std::vector<Family> optima = enumerate_optima(p);
  r.optima_count = optima.size();
  r.optimum = optima.empty() ? BigCount(0) : BigCount(optima.front().size());
  r.value_ok = r.optimum == r.expected;

  std::vector<Family> kleitman;
  kleitman.reserve(r.n);
  for (int x = 1; x <= r.n; ++x) kleitman.push_back(kleitman_extremal(r.n, k, x));

  r.kleitman_families_optimal = true;
  for (const Family& f : kleitman) {
    bool present = false;
    for (const Family& g : optima)
      if (f == g) {
        present = true;
        break;
      }
    if (!present) r.kleitman_families_optimal = false;
  }

  r.uniqueness_checked = s >= 3;
  if (r.uniqueness_checked) {
    r.uniqueness_ok = optima.size() == static_cast<std::size_t>(r.n);
    if (r.uniqueness_ok)
      for (const Family& g : optima) {
        bool is_kleitman = false;
        for (const Family& f : kleitman)
          if (f == g) {
            is_kleitman = true;
            break;
          }
        if (!is_kleitman) r.uniqueness_ok = false;
      }
    r.pass = r.value_ok && r.kleitman_families_optimal && r.uniqueness_ok;
  } else {
    r.pass = r.value_ok && r.kleitman_families_optimal;
  }
  return r;
}

DropRatioReport drop_ratio_check(int s, int k, int workers) {
  if (s < 2 || k < 2) throw std::invalid_argument("drop_ratio_check: need s,k >= 2");
  DropRatioReport r;
  r.s = s;
  r.k = k;
  r.n = s * k + 1;

  Problem p;
  p.n = r.n;
  p.k = k;
  p.s = s;
  p.workers = workers;
  p.restrict_left_compressed = true;
  SolverResult sol = solve_max_family(p);
  if (!sol.proven_optimal) throw std::runtime_error("drop_ratio_check: search truncated");
  r.f_value = sol.optimum;
  r.ratio = Rational(r.f_value) / Rational(binomial(r.n, k));
  r.target = Rational(s - 1) / s;
  r.gap = r.target - r.ratio;
  r.positive_gap = r.gap > 0;
  return r;
}

EmcReport emc_check(int n, int k, int s, int workers) {
  if (n < s * k - 1) throw std::invalid_argument("emc_check: need n >= sk-1");
  EmcReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.a_size = binomial(static_cast<long long>(s) * k - 1, k);
  r.b_size = binomial(n, k) - binomial(n - s + 1, k);
  r.conjectured = r.a_size > r.b_size ? r.a_size : r.b_size;

  Problem p;
  p.n = n;
  p.k = k;
  p.s = s;
  p.restrict_left_compressed = true;
  p.workers = workers;
  SolverResult sol = solve_max_family(p);
  if (!sol.proven_optimal) throw std::runtime_error("emc_check: search truncated");
  r.optimum = sol.optimum;
  r.nodes_explored = sol.nodes_explored;
  r.consistent = r.optimum == r.conjectured;
  return r;
}

}  // namespace emc
