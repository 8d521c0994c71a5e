#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phigraph/claimlab.hpp"
#include "phigraph/errors.hpp"
#include "phigraph/io.hpp"
#include "phigraph/numtheory.hpp"
#include "phigraph/phifamily.hpp"
#include "phigraph/setgraph.hpp"

namespace py = pybind11;
using namespace phigraph;

namespace {

FamilyId family_from(const std::string& name) {
  auto id = parse_family(name);
  if (!id) throw UsageError("unknown family '" + name + "'");
  return *id;
}

Graph build(const std::string& family, py::object arg, unsigned phi_cap) {
  const FamilyId id = family_from(family);
  Guards guards;
  guards.phi_cap = phi_cap;
  if (takes_explicit_set(id)) return set_family(id, arg.cast<std::vector<std::uint64_t>>());
  return phi_family(arg.cast<std::uint64_t>(), id, guards);
}

py::object big(const BigNat& x) { return py::int_(py::str(x.str())); }

template <class T>
py::object exact(const Exact<T>& e) {
  if (!e) return py::none();
  return py::cast(*e);
}

}  // namespace

PYBIND11_MODULE(phigraph, m) {
  m.doc() = "Euler phi divisor, coprime and set-graphs";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_ValueError);

  m.def("euler_phi", &euler_phi, py::arg("n"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("lcm_of_set", [](const std::vector<std::uint64_t>& xs) { return big(lcm_of_set(xs)); },
        py::arg("xs"));

  m.def("phi_context", [](std::uint64_t n) {
    const auto ctx = phi_context(n);
    py::dict d;
    d["n"] = ctx.n;
    d["phi"] = ctx.phi;
    d["phi_set"] = ctx.phi_set;
    d["theta_set"] = ctx.theta_set;
    d["x"] = ctx.min_above_one ? py::cast(*ctx.min_above_one) : py::none();
    return d;
  }, py::arg("n"));

  m.def("factorize", [](std::uint64_t n) {
    const auto f = factorize_oracle(n);
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::size_t j = 0; j < f.primes.size(); ++j) out.emplace_back(f.primes[j], f.exponents[j]);
    return out;
  }, py::arg("n"));

  m.def("garg_compute", [](std::uint64_t n) {
    const auto g = garg_compute(n);
    py::dict d;
    d["prime_set"] = g.prime_set;
    d["phi_set"] = g.phi_set;
    d["phi"] = g.phi;
    d["residual_completion"] = g.residual_completion;
    return d;
  }, py::arg("n"));

  m.def("iota_weights", [](const std::vector<std::uint64_t>& base) {
    py::list out;
    for (const auto& v : assign_iota_weights(base)) {
      out.append(py::make_tuple(v.s, v.i, big(v.iota)));
    }
    return out;
  }, py::arg("base"));

  m.def("families", [] {
    std::vector<std::string> out;
    for (FamilyId id : kAllFamilies) out.emplace_back(to_string(id));
    return out;
  });

  m.def("build", [](const std::string& family, py::object arg, unsigned phi_cap) {
    const Graph g = build(family, arg, phi_cap);
    std::vector<std::string> labels;
    for (const auto& l : g.labels()) labels.push_back(l.render());
    return py::make_tuple(labels, g.edges());
  }, py::arg("family"), py::arg("arg"), py::arg("phi_cap") = 12,
        "Returns (labels, edges) with edges as index pairs u < v.");

  m.def("to_dot", [](const std::string& family, py::object arg, unsigned phi_cap) {
    return to_dot(build(family, arg, phi_cap));
  }, py::arg("family"), py::arg("arg"), py::arg("phi_cap") = 12);

  m.def("invariants", [](const std::string& family, py::object arg, unsigned phi_cap) {
    Guards guards;
    guards.phi_cap = phi_cap;
    const auto r = invariant_report(build(family, arg, phi_cap), guards);
    py::dict d;
    d["order"] = r.order;
    d["size"] = r.size;
    d["max_degree"] = r.max_degree;
    d["connected"] = r.is_connected;
    d["acyclic"] = r.is_acyclic;
    d["complete"] = r.is_complete;
    d["eulerian"] = r.is_eulerian;
    d["triangles"] = r.triangle_count;
    d["chromatic_number"] = exact(r.chromatic_number);
    d["clique_number"] = exact(r.clique_number);
    d["domination_number"] = exact(r.domination_number);
    return d;
  }, py::arg("family"), py::arg("arg"), py::arg("phi_cap") = 12);

  m.def("claim_ids", [] {
    std::vector<std::string> out;
    for (const auto& c : list_claims()) out.push_back(c.id);
    for (const auto& c : list_variants()) out.push_back(c.id);
    return out;
  });

  m.def("check", [](const std::string& id, std::uint64_t lo, std::uint64_t hi, unsigned jobs) {
    ClaimParams params;
    params.n = {lo, hi};
    params.jobs = jobs;
    Guards guards;
    guards.phi_cap = params.phi_cap;
    return report_json(evaluate_claim(id, params, guards));
  }, py::arg("id"), py::arg("lo") = 1, py::arg("hi") = 200, py::arg("jobs") = 1,
        "Evaluates one claim over n in [lo, hi]; returns the report as JSON text.");
}
