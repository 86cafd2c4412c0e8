// pybind11 module: the library's main operations with JSON-string payloads
// on the boundary, so the Python side stays schema-identical to the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffpoints/construct.hpp"
#include "ffpoints/curves.hpp"
#include "ffpoints/errors.hpp"
#include "ffpoints/json_io.hpp"
#include "ffpoints/search.hpp"

namespace py = pybind11;
using namespace ffp;

namespace {

PointSetOptions make_options(const std::string& family, std::uint64_t p,
                             std::uint64_t r, std::uint64_t n,
                             const std::optional<std::vector<std::uint64_t>>& f,
                             bool negations, bool involutions) {
    PointSetOptions o;
    o.family = family_from_name(family);
    o.p = p;
    o.r = r;
    o.n = n;
    o.include_negations = negations;
    o.include_involutions = involutions;
    if (f) {
        PrimeField F(p);
        std::vector<fp_t> cs;
        cs.reserve(f->size());
        for (std::uint64_t c : *f) cs.push_back(static_cast<fp_t>(c % p));
        o.f = DensePoly(F, cs);
    }
    return o;
}

std::string py_generate(const std::string& family, std::uint64_t p,
                        std::uint64_t r, std::uint64_t n,
                        std::optional<std::vector<std::uint64_t>> f,
                        bool negations, bool involutions) {
    return point_set_to_json(
               point_set(make_options(family, p, r, n, f, negations, involutions)))
        .dump();
}

EqOptions make_eq_options(const std::string& mode, int eps_log2,
                          std::uint64_t dense_cap, std::uint64_t seed) {
    EqOptions eq;
    if (mode == "canonical")
        eq.mode = EqMode::Canonical;
    else if (mode == "probabilistic")
        eq.mode = EqMode::Probabilistic;
    else if (mode == "dense")
        eq.mode = EqMode::Dense;
    else if (mode == "auto")
        eq.mode = EqMode::Auto;
    else
        throw ParameterError("unknown equality mode: " + mode);
    eq.eps_target_log2 = eps_log2;
    eq.dense_cap = BigInt(static_cast<unsigned long>(dense_cap));
    eq.seed = seed;
    return eq;
}

// Same result shape and overall precedence as the command-line verifier.
std::string py_verify(const std::string& points_json, const std::string& mode,
                      int eps_log2, std::uint64_t dense_cap, std::uint64_t seed,
                      const std::string& curve_json) {
    json pj = json::parse(points_json);
    CurveModel curve = [&] {
        if (!curve_json.empty()) return curve_from_json(json::parse(curve_json));
        if (pj.is_object() && pj.contains("curve")) return curve_from_json(pj["curve"]);
        throw ParseError("no curve: pass curve_json or embed one in the points");
    }();
    json plist = json::array();
    if (pj.is_array())
        plist = pj;
    else if (pj.is_object() && pj.contains("points"))
        plist = pj["points"];
    else if (pj.is_object() && pj.contains("repr"))
        plist.push_back(pj);
    else
        throw ParseError("points JSON holds neither a point set nor points");

    EqOptions eq = make_eq_options(mode, eps_log2, dense_cap, seed);
    json results = json::array();
    bool refuted = false, inconclusive = false;
    for (std::size_t i = 0; i < plist.size(); ++i) {
        CurvePoint pt = point_from_json(curve, plist[i]);
        json entry;
        entry["index"] = i;
        try {
            VerificationResult r = is_on_curve(pt, eq);
            entry["result"] = verification_to_json(r);
            if (r.verdict == Verdict::ProvenUnequal)
                refuted = true;
            else if (r.verdict == Verdict::ProbUnequal)
                inconclusive = true;
        } catch (const CapExceeded& e) {
            entry["result"] = json{{"verdict", "inconclusive"}, {"detail", e.what()}};
            inconclusive = true;
        } catch (const FieldTooLargeInfeasible& e) {
            entry["result"] = json{{"verdict", "inconclusive"}, {"detail", e.what()}};
            inconclusive = true;
        }
        results.push_back(std::move(entry));
    }
    json out;
    out["mode"] = mode;
    out["points"] = plist.size();
    out["overall"] = refuted ? "refuted" : inconclusive ? "inconclusive" : "verified";
    out["results"] = results;
    return out.dump();
}

std::string py_search(const std::string& family, std::uint64_t p, std::uint64_t d,
                      std::uint64_t r, std::uint64_t k,
                      std::optional<std::vector<std::uint64_t>> f,
                      unsigned max_num_deg, unsigned max_den_deg,
                      std::uint64_t budget, unsigned threads) {
    PrimeField F(p);
    FactoredExpr a = FactoredExpr::make(F, 1, BigInt(static_cast<unsigned long>(d)), {});
    CurveModel curve = [&]() -> CurveModel {
        if (family == "theorem") return make_theorem_curve(F, r, a);
        if (family == "kummer") return make_kummer_curve(F, k, a);
        if (family == "example1") return make_kummer_curve(F, 6, a);
        if (family == "example3") return make_kummer_curve(F, r, a);
        if (family == "palindromic" || family == "example2") {
            if (!f) throw ParameterError("this family requires f coefficients");
            std::vector<fp_t> cs;
            cs.reserve(f->size());
            for (std::uint64_t c : *f) cs.push_back(static_cast<fp_t>(c % p));
            return make_palindromic_curve(F, DensePoly(F, cs), a);
        }
        throw ParameterError("unknown family: " + family);
    }();
    SearchOptions opts;
    opts.budget = BigInt(static_cast<unsigned long>(budget));
    opts.threads = threads;
    SearchReport rep = exhaustive_search(curve, SearchBounds{max_num_deg, max_den_deg},
                                         opts);
    json out;
    json pts = json::array();
    for (const auto& pt : rep.points) pts.push_back(point_to_json(pt));
    out["points"] = pts;
    out["summary"] = search_report_summary_json(rep)["summary"];
    return out.dump();
}

std::string py_table(std::uint64_t p, std::uint64_t r,
                     const std::vector<std::uint64_t>& ns) {
    return table_to_json(unboundedness_table(p, r, ns)).dump();
}

std::string py_equal(const std::string& lhs_json, const std::string& rhs_json,
                     std::uint64_t p, const std::string& mode, int eps_log2,
                     std::uint64_t dense_cap, std::uint64_t seed) {
    PrimeField F(p);
    FactoredExpr lhs = fe_from_json(F, json::parse(lhs_json));
    FactoredExpr rhs = fe_from_json(F, json::parse(rhs_json));
    return verification_to_json(
               fe_eq(lhs, rhs, make_eq_options(mode, eps_log2, dense_cap, seed)))
        .dump();
}

std::string py_canonicalize(const std::string& fe_json, std::uint64_t p) {
    PrimeField F(p);
    return fe_to_json(canonicalize(fe_from_json(F, json::parse(fe_json)))).dump();
}

std::string py_expr_str(const std::string& fe_json, std::uint64_t p) {
    PrimeField F(p);
    return fe_from_json(F, json::parse(fe_json)).to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "explicit rational points on curves over F_p(t)";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<DivisibilityError>(m, "DivisibilityError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

    m.def("generate", &py_generate, py::arg("family"), py::arg("p") = 5,
          py::arg("r") = 3, py::arg("n") = 1, py::arg("f") = std::nullopt,
          py::arg("negations") = false, py::arg("involutions") = false,
          "construct the explicit point set; returns point-set JSON");
    m.def("verify", &py_verify, py::arg("points_json"), py::arg("mode") = "auto",
          py::arg("eps_log2") = -60, py::arg("dense_cap") = 1000000,
          py::arg("seed") = kDefaultSeed, py::arg("curve_json") = "",
          "verify points against their curve; returns results JSON");
    m.def("search", &py_search, py::arg("family"), py::arg("p"), py::arg("d"),
          py::arg("r") = 3, py::arg("k") = 6, py::arg("f") = std::nullopt,
          py::arg("max_num_deg") = 0, py::arg("max_den_deg") = 0,
          py::arg("budget") = 100000000, py::arg("threads") = 1,
          "exhaustive low-degree point search; returns JSON");
    m.def("table", &py_table, py::arg("p"), py::arg("r"), py::arg("ns"),
          "tau_odd / point-count growth table; returns JSON rows");
    m.def("equal", &py_equal, py::arg("lhs_json"), py::arg("rhs_json"), py::arg("p"),
          py::arg("mode") = "auto", py::arg("eps_log2") = -60,
          py::arg("dense_cap") = 1000000, py::arg("seed") = kDefaultSeed,
          "compare two factored expressions; returns verification JSON");
    m.def("canonicalize", &py_canonicalize, py::arg("fe_json"), py::arg("p"),
          "canonical form of a factored expression as JSON");
    m.def("expr_str", &py_expr_str, py::arg("fe_json"), py::arg("p"),
          "human-readable form of a factored expression");
    m.def("tau_odd",
          [](std::uint64_t n) { return odd_quotient_divisors(n).size(); },
          py::arg("n"), "number of divisors m of n with n/m odd");
    m.def("odd_quotient_divisors", &odd_quotient_divisors, py::arg("n"));
    m.def("lte",
          [](std::uint64_t p, std::uint64_t ell, std::uint64_t k) {
              LteCheck c = lte_valuation(p, ell, k);
              return py::make_tuple(c.v_exact, c.v_predicted);
          },
          py::arg("p"), py::arg("ell"), py::arg("k"),
          "(exact, predicted) valuation v_ell(p^k + 1)");
}
