#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shanks/dedekind.hpp"
#include "shanks/errors.hpp"
#include "shanks/fq.hpp"
#include "shanks/intpoly.hpp"
#include "shanks/output.hpp"
#include "shanks/recurrence.hpp"
#include "shanks/search.hpp"

namespace py = pybind11;
using namespace shanks;

namespace {

py::object big(const BigInt& v) { return py::module_::import("builtins").attr("int")(to_decimal(v)); }

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& e : j) out.append(to_python(e));
      return std::move(out);
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return std::move(out);
    }
    default:
      throw DomainError("unsupported JSON value");
  }
}

RoutePolicy parse_route(const std::string& s) {
  if (s == "auto") return RoutePolicy::automatic;
  if (s == "full") return RoutePolicy::full;
  if (s == "ring") return RoutePolicy::ring;
  if (s == "both") return RoutePolicy::both;
  throw DomainError("unknown route: " + s);
}

LiftStyle parse_lift(const std::string& s) {
  if (s == "canonical") return LiftStyle::canonical;
  if (s == "symmetric") return LiftStyle::symmetric;
  throw DomainError("unknown lift: " + s);
}

py::object period(i64 k, u64 m, const std::string& method, u64 seed) {
  const Ceilings ceil = Ceilings::from_env();
  if (method == "brute") return to_python(to_json(period_brute(k, m, ceil.iterations)));
  if (method != "fast") throw DomainError("method must be 'brute' or 'fast'");
  if (is_prime(m)) return to_python(to_json(period_fast(k, m, ceil, seed)));
  unsigned exponent = 0;
  const std::optional<u64> base = prime_base_of_power(m, exponent);
  if (!base || exponent != 2) throw DomainError("fast method needs m prime or a prime square");
  const PeriodRecord at_p = period_fast(k, *base, ceil, seed);
  return to_python(to_json(PeriodRecord{k, m, period_prime_square(k, *base, at_p.pi), at_p.method}));
}

py::object certify(i64 k, std::optional<u64> p, const std::string& route, const std::string& lift, u64 seed) {
  CertifyOptions opts;
  opts.policy = parse_route(route);
  opts.lift = parse_lift(lift);
  opts.seed = seed;
  opts.factor_ceiling = Ceilings::from_env().factor;
  return to_python(to_json(p ? certify_power(k, *p, opts) : certify_base(k, opts)));
}

py::list search(i64 k_min, i64 k_max, u64 p_min, u64 p_max, unsigned jobs, u64 seed) {
  SearchConfig cfg;
  cfg.k_min = k_min;
  cfg.k_max = k_max;
  cfg.p_min = p_min;
  cfg.p_max = p_max;
  cfg.jobs = jobs;
  cfg.seed = seed;
  cfg.ceilings = Ceilings::from_env();
  cfg.validate();
  std::vector<Json> records;
  {
    py::gil_scoped_release release;
    search_shanks_primes(cfg, [&](const SearchRecord& r) { records.push_back(to_json(r)); });
  }
  py::list out;
  for (const Json& j : records) out.append(to_python(j));
  return out;
}

py::list table1() {
  VerifyOptions opts;
  opts.ceilings = Ceilings::from_env();
  py::list out;
  for (const Table1Row& row : verify_table1(opts).rows) {
    py::dict d;
    d["k"] = row.k;
    d["p"] = row.p;
    d["expected_pi"] = row.expected_pi;
    d["pi_p"] = row.pi_p;
    d["pi_p2"] = row.pi_p2;
    d["is_shanks"] = row.is_shanks;
    d["non_monogenic"] = row.non_monogenic;
    d["pass"] = row.pass;
    d["error"] = row.error;
    out.append(d);
  }
  return out;
}

py::list factor_mod(const std::vector<i64>& coeffs, u64 q, u64 seed) {
  std::vector<u64> reduced;
  for (i64 c : coeffs) reduced.push_back(reduce_signed(c, q));
  py::list out;
  for (const ModFactor& f : factor_mod_q(ModPoly(q, reduced), seed)) {
    out.append(py::make_tuple(f.factor.coeffs(), f.multiplicity));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shanks polynomial periods, k-Shanks primes and monogenicity certificates";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CeilingExceeded>(m, "CeilingExceeded", PyExc_RuntimeError);
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_ValueError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);
  py::register_exception<ExactDivisionFailed>(m, "ExactDivisionFailed", PyExc_ArithmeticError);
  py::register_exception<CheckpointError>(m, "CheckpointError", PyExc_IOError);

  m.def(
      "shanks_poly",
      [](i64 k) {
        const IntPoly s = shanks_poly(k);
        py::list out;
        for (const BigInt& c : s.coeffs()) out.append(big(c));
        return out;
      },
      py::arg("k"), "Coefficients of S_k(x), constant term first.");
  m.def(
      "params", [](i64 k) { return to_python(to_json(compute_params(k, Ceilings::from_env().factor))); },
      py::arg("k"), "Admissibility parameters of k.");
  m.def(
      "discriminant",
      [](i64 k, std::optional<u64> p) {
        return big(p ? factored_disc_power(k, *p).expand() : discriminant_exact(shanks_poly(k)));
      },
      py::arg("k"), py::arg("p") = py::none(), "Discriminant of S_k(x), or of S_k(x^p) when p is given.");
  m.def(
      "discriminant_factored", [](i64 k, u64 p) { return to_python(to_json(factored_disc_power(k, p))); },
      py::arg("k"), py::arg("p"), "Discriminant of S_k(x^p) as sign * p^exp_p * base^exp_base.");
  m.def(
      "classify", [](i64 k, u64 p, u64 seed) { return to_python(to_json(classify_shanks_mod_p(k, p, seed))); },
      py::arg("k"), py::arg("p"), py::arg("seed") = 0, "Factorization shape of S_k modulo p.");
  m.def("period", &period, py::arg("k"), py::arg("m"), py::arg("method") = "fast", py::arg("seed") = 0,
        "Period of U_n modulo m.");
  m.def(
      "is_k_shanks",
      [](i64 k, u64 p, u64 seed) { return to_python(to_json(is_k_shanks(k, p, Ceilings::from_env(), seed))); },
      py::arg("k"), py::arg("p"), py::arg("seed") = 0, "Whether p is a k-Shanks prime.");
  m.def("certify", &certify, py::arg("k"), py::arg("p") = py::none(), py::arg("route") = "auto",
        py::arg("lift") = "canonical", py::arg("seed") = 0, "Monogenicity certificate for S_k(x) or S_k(x^p).");
  m.def("search", &search, py::arg("k_min"), py::arg("k_max"), py::arg("p_min"), py::arg("p_max"),
        py::arg("jobs") = 1, py::arg("seed") = 0, "Grid search records in (k, p) order.");
  m.def("verify_table1", &table1, "Checks the five tabulated k-Shanks primes.");
  m.def("factor_mod", &factor_mod, py::arg("coeffs"), py::arg("q"), py::arg("seed") = 0,
        "Monic irreducible factors of a polynomial over F_q with multiplicities.");
}
