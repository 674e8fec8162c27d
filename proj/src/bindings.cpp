#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "emc/constructions.hpp"
#include "emc/core.hpp"
#include "emc/errors.hpp"
#include "emc/family.hpp"
#include "emc/json_io.hpp"
#include "emc/numbers.hpp"
#include "emc/partitions.hpp"
#include "emc/random.hpp"
#include "emc/shifting.hpp"
#include "emc/solver.hpp"

namespace py = pybind11;

namespace {

py::int_ big_to_py(const emc::BigCount& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(emc::to_string(v).c_str(), nullptr, 10));
}

py::object fraction_type() {
  return py::module_::import("fractions").attr("Fraction");
}

py::object rational_to_py(const emc::Rational& q) {
  return fraction_type()(big_to_py(boost::multiprecision::numerator(q)),
                         big_to_py(boost::multiprecision::denominator(q)));
}

// Accepts int, str ("p/q" or a decimal), fractions.Fraction, or float
// (converted through its shortest decimal repr, so 0.01 means 1/100).
emc::Rational rational_from_py(const py::object& value) {
  const std::string text = py::str(value);
  auto parsed = emc::parse_rational(text);
  if (!parsed) throw std::invalid_argument("not a rational: " + text);
  return *parsed;
}

emc::Mask mask_from_py(const std::vector<int>& elems, int n) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  return emc::mask_from_elements(sorted, n);
}

py::tuple mask_to_py(emc::Mask m) {
  return py::cast(emc::elements_of(m));
}

py::list members_to_py(const emc::Family& f) {
  py::list out;
  for (emc::Mask m : f.members()) out.append(mask_to_py(m));
  return out;
}

emc::Family family_from_sets(int n, int k, const std::vector<std::vector<int>>& sets) {
  std::vector<emc::Mask> members;
  members.reserve(sets.size());
  for (const auto& s : sets) members.push_back(mask_from_py(s, n));
  std::sort(members.begin(), members.end());
  return emc::Family(n, k, std::move(members));
}

std::vector<emc::Mask> masks_from_py(const std::vector<std::vector<int>>& sets, int n) {
  std::vector<emc::Mask> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(mask_from_py(s, n));
  return out;
}

emc::Problem make_problem(int n, int k, int s, const std::string& objective,
                          std::optional<std::uint64_t> min_degree,
                          std::optional<std::uint64_t> max_degree,
                          std::optional<std::uint64_t> fixed_size,
                          bool restrict_left_compressed,
                          const std::vector<std::vector<int>>& forced,
                          const std::vector<std::vector<int>>& forbidden,
                          std::optional<std::uint64_t> node_budget, int workers,
                          bool canonical_witness) {
  emc::Problem p;
  p.n = n;
  p.k = k;
  p.s = s;
  if (objective == "max-size")
    p.objective = emc::Objective::kMaxSize;
  else if (objective == "min-disjoint-pairs")
    p.objective = emc::Objective::kMinDisjointPairs;
  else
    throw std::invalid_argument("objective must be 'max-size' or 'min-disjoint-pairs'");
  p.min_degree = min_degree;
  p.max_degree = max_degree;
  p.fixed_size = fixed_size;
  p.restrict_left_compressed = restrict_left_compressed;
  p.forced_members = masks_from_py(forced, n);
  p.forbidden_members = masks_from_py(forbidden, n);
  p.node_budget = node_budget;
  p.workers = workers;
  p.canonical_witness = canonical_witness;
  return p;
}

py::dict result_to_py(const emc::SolverResult& r) {
  py::dict d;
  d["feasible"] = r.feasible;
  d["proven_optimal"] = r.proven_optimal;
  d["optimum"] = r.feasible ? py::object(big_to_py(r.optimum)) : py::none();
  d["witnesses"] = py::cast(r.witnesses);
  d["nodes_explored"] = r.nodes_explored;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

py::dict double_count_to_py(const emc::DoubleCountReport& r) {
  py::dict d;
  d["s"] = r.s;
  d["k"] = r.k;
  d["g_size"] = big_to_py(r.g_size);
  d["m"] = big_to_py(r.m);
  d["m_prime"] = big_to_py(r.m_prime);
  d["sum_hits"] = big_to_py(r.sum_hits);
  d["g_times_m"] = big_to_py(r.g_times_m);
  d["identity_holds"] = r.identity_holds;
  d["partitions_total"] = big_to_py(r.partitions_total);
  d["partitions_ge1"] = big_to_py(r.partitions_ge1);
  d["partitions_ge2"] = big_to_py(r.partitions_ge2);
  d["nu"] = r.nu;
  d["nu_within"] = r.nu_within;
  d["every_partition_hit"] = r.every_partition_hit;
  d["disjoint_pairs_in_g"] = big_to_py(r.disjoint_pairs_in_g);
  d["sum_pair_hits"] = big_to_py(r.sum_pair_hits);
  d["pair_identity_holds"] = r.pair_identity_holds;
  d["chain_holds"] = r.chain_holds;
  return d;
}

emc::BoundParams make_bound_params(int s, int k, const py::object& delta,
                                   const py::object& big_c, const py::object& delta0) {
  emc::BoundParams p;
  p.s = s;
  p.k = k;
  p.delta = rational_from_py(delta);
  p.big_c = rational_from_py(big_c);
  p.delta0 = rational_from_py(delta0);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact search and verification toolkit for maximum k-uniform set "
            "families with bounded matching number.";

  py::register_exception<emc::CapError>(m, "CapError", PyExc_ValueError);

  py::class_<emc::Family>(m, "Family")
      .def(py::init(&family_from_sets), py::arg("n"), py::arg("k"),
           py::arg("sets") = std::vector<std::vector<int>>{},
           "A duplicate-free k-uniform family on {1..n}; sets are iterables "
           "of 1-indexed elements.")
      .def_property_readonly("n", &emc::Family::n)
      .def_property_readonly("k", &emc::Family::k)
      .def("__len__", &emc::Family::size)
      .def("members", &members_to_py, "Member sets as sorted tuples, in colex order.")
      .def("__contains__",
           [](const emc::Family& f, const std::vector<int>& set) {
             return f.contains(mask_from_py(set, f.n()));
           })
      .def("__eq__",
           [](const emc::Family& a, const emc::Family& b) { return a == b; })
      .def("__repr__",
           [](const emc::Family& f) {
             return "Family(n=" + std::to_string(f.n()) + ", k=" + std::to_string(f.k()) +
                    ", size=" + std::to_string(f.size()) + ")";
           })
      .def("degree", &emc::Family::degree, py::arg("x"))
      .def("degree_profile",
           [](const emc::Family& f) {
             emc::DegreeProfile p = f.degree_profile();
             py::dict d;
             d["degrees"] = py::cast(p.degrees);
             d["min_degree"] = p.min_degree;
             d["max_degree"] = p.max_degree;
             return d;
           })
      .def("matching_number", &emc::Family::matching_number)
      .def("has_matching_of_size", &emc::Family::has_matching_of_size, py::arg("s"))
      .def("count_disjoint_pairs",
           [](const emc::Family& f) { return big_to_py(f.count_disjoint_pairs()); })
      .def("complement", &emc::Family::complement)
      .def("restrict",
           [](const emc::Family& f, const std::vector<int>& contains_all,
              const std::vector<int>& avoids_all) {
             return f.restrict(mask_from_py(contains_all, f.n()),
                               mask_from_py(avoids_all, f.n()));
           },
           py::arg("contains_all") = std::vector<int>{},
           py::arg("avoids_all") = std::vector<int>{});

  m.def("loads", &emc::family_from_json_text, py::arg("text"),
        "Family from its JSON document text.");
  m.def("dumps", &emc::family_to_json_text, py::arg("family"), py::arg("indent") = -1,
        "JSON document text for a family.");

  m.def("construct_A", &emc::construct_A, py::arg("n"), py::arg("k"), py::arg("s"),
        "All k-sets inside {1..sk-1}.");
  m.def("construct_B", &emc::construct_B, py::arg("n"), py::arg("k"), py::arg("s"),
        "All k-sets meeting {1..s-1}.");
  m.def("star", &emc::star, py::arg("n"), py::arg("k"), py::arg("x"),
        "All k-sets through the element x.");
  m.def("kleitman_extremal", &emc::kleitman_extremal, py::arg("n"), py::arg("k"),
        py::arg("x"), "All k-sets of {1..n} avoiding x; n must be a multiple of k.");
  m.def("random_family",
        [](int n, int k, std::uint64_t m_, std::uint64_t seed) {
          emc::SplitMix64 rng(seed);
          return emc::random_family(n, k, m_, rng);
        },
        py::arg("n"), py::arg("k"), py::arg("m"), py::arg("seed"),
        "Uniform random m-member family (deterministic in the seed).");

  m.def("shift",
        [](const emc::Family& f, int i, int j) {
          return emc::shift_family(f, emc::ShiftPair{i, j});
        },
        py::arg("family"), py::arg("i"), py::arg("j"),
        "One (i,j)-shift: replaces j by i in every member where that image "
        "is new.");
  m.def("is_left_compressed", &emc::is_left_compressed, py::arg("family"));
  m.def("left_compress", &emc::left_compress, py::arg("family"),
        "Shift fixed point; preserves size, never raises the matching number.");
  m.def("verify_shiftdeg",
        [](const emc::Family& f) {
          emc::ShiftDegAReport a = emc::verify_shiftdeg_a(f);
          emc::ShiftDegBReport b = emc::verify_shiftdeg_b(f);
          py::dict da, db, d;
          da["lhs"] = big_to_py(a.lhs);
          da["rhs"] = big_to_py(a.rhs);
          da["holds"] = a.holds;
          db["lhs_num"] = big_to_py(b.lhs_num);
          db["lhs_den"] = big_to_py(b.lhs_den);
          db["rhs_num"] = big_to_py(b.rhs_num);
          db["rhs_den"] = big_to_py(b.rhs_den);
          db["holds"] = b.holds;
          d["a"] = da;
          d["b"] = db;
          d["pass"] = a.holds && b.holds;
          return d;
        },
        py::arg("family"),
        "Both last-element degree inequalities; the family must be "
        "left-compressed.");

  m.def("count_partitions",
        [](int s, int k) { return big_to_py(emc::count_partitions(s, k)); },
        py::arg("s"), py::arg("k"), "Partitions of {1..sk} into s blocks of size k.");
  m.def("count_M", [](int s, int k) { return big_to_py(emc::count_M(s, k)); },
        py::arg("s"), py::arg("k"), "Partitions through one fixed block.");
  m.def("count_M_prime",
        [](int s, int k) { return big_to_py(emc::count_M_prime(s, k)); }, py::arg("s"),
        py::arg("k"), "Partitions through a fixed disjoint pair of blocks.");
  m.def("enumerate_partitions",
        [](int s, int k) {
          py::list out;
          for (const emc::Partition& p : emc::enumerate_partitions(s, k)) {
            py::list blocks;
            for (emc::Mask b : p.blocks) blocks.append(mask_to_py(b));
            out.append(blocks);
          }
          return out;
        },
        py::arg("s"), py::arg("k"));
  m.def("verify_double_count",
        [](const emc::Family& f) { return double_count_to_py(emc::verify_double_count(f)); },
        py::arg("family"),
        "Exact (G, partition) double count for a family on exactly sk "
        "elements.");

  m.def("stab_upper_bound",
        [](int s, int k, const py::object& delta, const py::object& big_c,
           const py::object& delta0) {
          return rational_to_py(emc::stab_upper_bound(make_bound_params(s, k, delta, big_c, delta0)));
        },
        py::arg("s"), py::arg("k"), py::arg("delta"), py::arg("C"), py::arg("delta0"));
  m.def("supersat_lower_bound",
        [](int s, int k, const py::object& delta, const py::object& big_c,
           const py::object& delta0) {
          return rational_to_py(
              emc::supersat_lower_bound(make_bound_params(s, k, delta, big_c, delta0)));
        },
        py::arg("s"), py::arg("k"), py::arg("delta"), py::arg("C"), py::arg("delta0"));
  m.def("epsilon_formulas",
        [](int s, const py::object& big_c, const py::object& delta0) {
          emc::EpsilonFormulas ef =
              emc::epsilon_formulas(s, rational_from_py(big_c), rational_from_py(delta0));
          return py::make_tuple(rational_to_py(ef.epsilon_star), rational_to_py(ef.epsilon));
        },
        py::arg("s"), py::arg("C"), py::arg("delta0"),
        "(epsilon_star, epsilon) as exact fractions.");

  m.def("solve",
        [](int n, int k, int s, const std::string& objective,
           std::optional<std::uint64_t> min_degree, std::optional<std::uint64_t> max_degree,
           std::optional<std::uint64_t> fixed_size, bool restrict_left_compressed,
           const std::vector<std::vector<int>>& forced,
           const std::vector<std::vector<int>>& forbidden,
           std::optional<std::uint64_t> node_budget, int workers, bool canonical_witness) {
          emc::Problem p = make_problem(n, k, s, objective, min_degree, max_degree,
                                        fixed_size, restrict_left_compressed, forced,
                                        forbidden, node_budget, workers, canonical_witness);
          emc::SolverResult r = p.objective == emc::Objective::kMinDisjointPairs
                                    ? emc::solve_min_disjoint_pairs(p)
                                    : emc::solve_max_family(p);
          return result_to_py(r);
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::kw_only(),
        py::arg("objective") = "max-size", py::arg("min_degree") = py::none(),
        py::arg("max_degree") = py::none(), py::arg("fixed_size") = py::none(),
        py::arg("restrict_left_compressed") = false,
        py::arg("forced") = std::vector<std::vector<int>>{},
        py::arg("forbidden") = std::vector<std::vector<int>>{},
        py::arg("node_budget") = py::none(), py::arg("workers") = 1,
        py::arg("canonical_witness") = false,
        "Exact branch-and-bound optimum over families with no s pairwise "
        "disjoint members.");
  m.def("enumerate_optima",
        [](int n, int k, int s, std::optional<std::uint64_t> min_degree,
           std::optional<std::uint64_t> max_degree,
           const std::vector<std::vector<int>>& forced,
           const std::vector<std::vector<int>>& forbidden,
           std::optional<std::uint64_t> node_budget, int workers) {
          emc::Problem p = make_problem(n, k, s, "max-size", min_degree, max_degree,
                                        std::nullopt, false, forced, forbidden, node_budget,
                                        workers, false);
          return emc::enumerate_optima(p);
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::kw_only(),
        py::arg("min_degree") = py::none(), py::arg("max_degree") = py::none(),
        py::arg("forced") = std::vector<std::vector<int>>{},
        py::arg("forbidden") = std::vector<std::vector<int>>{},
        py::arg("node_budget") = py::none(), py::arg("workers") = 1,
        "Every optimal family, in colex order of member vectors.");
  m.def("export_lp",
        [](int n, int k, int s, const std::string& objective,
           std::optional<std::uint64_t> min_degree, std::optional<std::uint64_t> max_degree,
           std::optional<std::uint64_t> fixed_size,
           const std::vector<std::vector<int>>& forced,
           const std::vector<std::vector<int>>& forbidden) {
          emc::Problem p = make_problem(n, k, s, objective, min_degree, max_degree,
                                        fixed_size, false, forced, forbidden, std::nullopt,
                                        1, false);
          return emc::export_lp(p);
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::kw_only(),
        py::arg("objective") = "max-size", py::arg("min_degree") = py::none(),
        py::arg("max_degree") = py::none(), py::arg("fixed_size") = py::none(),
        py::arg("forced") = std::vector<std::vector<int>>{},
        py::arg("forbidden") = std::vector<std::vector<int>>{},
        "CPLEX LP text for the instance.");

  m.def("kleitman_check",
        [](int s, int k) {
          emc::KleitmanReport r = emc::kleitman_check(s, k);
          py::dict d;
          d["s"] = r.s;
          d["k"] = r.k;
          d["n"] = r.n;
          d["expected"] = big_to_py(r.expected);
          d["optimum"] = big_to_py(r.optimum);
          d["value_ok"] = r.value_ok;
          d["optima_count"] = r.optima_count;
          d["kleitman_families_optimal"] = r.kleitman_families_optimal;
          d["uniqueness_checked"] = r.uniqueness_checked;
          d["uniqueness_ok"] = r.uniqueness_ok;
          d["pass"] = r.pass;
          return d;
        },
        py::arg("s"), py::arg("k"),
        "Value and extremal-family check at n = sk.");
  m.def("drop_ratio_check",
        [](int s, int k, int workers) {
          emc::DropRatioReport r = emc::drop_ratio_check(s, k, workers);
          py::dict d;
          d["s"] = r.s;
          d["k"] = r.k;
          d["n"] = r.n;
          d["f_value"] = big_to_py(r.f_value);
          d["ratio"] = rational_to_py(r.ratio);
          d["target"] = rational_to_py(r.target);
          d["gap"] = rational_to_py(r.gap);
          d["positive_gap"] = r.positive_gap;
          return d;
        },
        py::arg("s"), py::arg("k"), py::arg("workers") = 1,
        "Density drop one step above n = sk.");
  m.def("emc_check",
        [](int n, int k, int s, int workers) {
          emc::EmcReport r = emc::emc_check(n, k, s, workers);
          py::dict d;
          d["n"] = r.n;
          d["k"] = r.k;
          d["s"] = r.s;
          d["optimum"] = big_to_py(r.optimum);
          d["a_size"] = big_to_py(r.a_size);
          d["b_size"] = big_to_py(r.b_size);
          d["conjectured"] = big_to_py(r.conjectured);
          d["consistent"] = r.consistent;
          d["nodes_explored"] = r.nodes_explored;
          return d;
        },
        py::arg("n"), py::arg("k"), py::arg("s"), py::arg("workers") = 1,
        "Solved optimum against max(|A|,|B|).");

  m.def("binomial", [](long long n, long long k) { return big_to_py(emc::binomial(n, k)); },
        py::arg("n"), py::arg("k"));
}
