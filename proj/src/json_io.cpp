#include "ffpoints/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ffpoints/errors.hpp"

namespace ffp {

namespace {

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::uint64_t get_u64(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned()) throw ParseError(std::string(key) + " must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

BigInt get_big(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) throw ParseError(std::string(key) + " must be a decimal string");
    return big_from_dec(v.get<std::string>());
}

std::vector<fp_t> get_coeffs(const json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of coefficients");
    std::vector<fp_t> c;
    c.reserve(v.size());
    for (const auto& e : v) {
        if (!e.is_number_unsigned()) throw ParseError(std::string(what) + " coefficients must be nonnegative integers");
        c.push_back(e.get<std::uint64_t>());
    }
    return c;
}

json coeffs_json(const DensePoly& g) {
    json arr = json::array();
    for (fp_t c : g.coeffs()) arr.push_back(c);
    return arr;
}

DensePoly poly_from_coeffs(const PrimeField& F, const json& v, const char* what) {
    std::vector<fp_t> c = get_coeffs(v, what);
    for (fp_t x : c)
        if (x >= F.p()) throw ParseError(std::string(what) + " coefficient out of range for p");
    return DensePoly(F, std::move(c));
}

json rational_json(const DenseRational& r) {
    return json{{"num", coeffs_json(r.num)}, {"den", coeffs_json(r.den)}};
}

DenseRational rational_from_json(const PrimeField& F, const json& j) {
    DensePoly num = poly_from_coeffs(F, need(j, "num"), "num");
    DensePoly den = poly_from_coeffs(F, need(j, "den"), "den");
    return DenseRational(std::move(num), std::move(den));
}

}  // namespace

json fe_to_json(const FactoredExpr& a) {
    json j;
    j["coeff"] = a.coeff();
    j["t_exp"] = big_to_dec(a.t_exp());
    json factors = json::array();
    for (const FeFactor& f : a.factors()) {
        json fj;
        fj["base"] = coeffs_json(f.base);
        fj["inner"] = big_to_dec(f.inner);
        fj["outer"] = big_to_dec(f.outer);
        factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    return j;
}

FactoredExpr fe_from_json(const PrimeField& F, const json& j) {
    if (!j.is_object()) throw ParseError("factored expression must be an object");
    std::uint64_t coeff = get_u64(j, "coeff");
    if (coeff >= F.p()) throw ParseError("coeff out of range for p");
    BigInt t_exp = get_big(j, "t_exp");
    std::vector<FeFactor> factors;
    const json& fl = need(j, "factors");
    if (!fl.is_array()) throw ParseError("factors must be an array");
    for (const auto& fj : fl) {
        DensePoly base = poly_from_coeffs(F, need(fj, "base"), "base");
        BigInt inner = get_big(fj, "inner");
        BigInt outer = get_big(fj, "outer");
        if (inner <= 0) throw ParseError("inner must be >= 1");
        factors.push_back(FeFactor{std::move(base), BigNat(inner), std::move(outer)});
    }
    if (coeff == 0) {
        if (!factors.empty() || t_exp != 0)
            throw ParseError("zero expression must have t_exp 0 and no factors");
        return FactoredExpr::zero(F);
    }
    return FactoredExpr::make(F, coeff, std::move(t_exp), std::move(factors));
}

json curve_to_json(const CurveModel& c) {
    json j;
    j["family"] = curve_family_name(c);
    j["p"] = curve_field(c).p();
    if (const auto* tc = std::get_if<TheoremCurve>(&c)) {
        j["r"] = tc->r;
    } else if (const auto* kc = std::get_if<KummerCurve>(&c)) {
        j["k"] = kc->k;
    } else {
        const auto& pc = std::get<PalindromicCurve>(c);
        j["f"] = coeffs_json(pc.f);
        j["b"] = pc.b;
    }
    j["a"] = fe_to_json(curve_a(c));
    return j;
}

CurveModel curve_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("curve must be an object");
    const json& fam = need(j, "family");
    if (!fam.is_string()) throw ParseError("family must be a string");
    std::string family = fam.get<std::string>();
    PrimeField F(get_u64(j, "p"));
    FactoredExpr a = fe_from_json(F, need(j, "a"));
    if (family == "theorem") return make_theorem_curve(F, get_u64(j, "r"), std::move(a));
    if (family == "kummer") return make_kummer_curve(F, get_u64(j, "k"), std::move(a));
    if (family == "palindromic") {
        DensePoly f = poly_from_coeffs(F, need(j, "f"), "f");
        CurveModel c = make_palindromic_curve(F, std::move(f), std::move(a));
        if (j.contains("b") && get_u64(j, "b") != std::get<PalindromicCurve>(c).b)
            throw ParseError("b does not match deg(f)/2");
        return c;
    }
    throw ParseError("unknown family \"" + family + "\"");
}

json point_to_json(const CurvePoint& pt) {
    json j;
    if (pt.is_factored()) {
        j["repr"] = "factored";
        j["x"] = fe_to_json(pt.xf());
        j["y"] = fe_to_json(pt.yf());
    } else {
        j["repr"] = "dense";
        j["x"] = rational_json(pt.xd());
        j["y"] = rational_json(pt.yd());
    }
    return j;
}

CurvePoint point_from_json(const CurveModel& curve, const json& j) {
    if (!j.is_object()) throw ParseError("point must be an object");
    const json& repr = need(j, "repr");
    if (!repr.is_string()) throw ParseError("repr must be a string");
    const PrimeField& F = curve_field(curve);
    std::string r = repr.get<std::string>();
    if (r == "factored")
        return make_point(curve, fe_from_json(F, need(j, "x")), fe_from_json(F, need(j, "y")));
    if (r == "dense")
        return make_point(curve, rational_from_json(F, need(j, "x")),
                          rational_from_json(F, need(j, "y")));
    throw ParseError("repr must be \"factored\" or \"dense\"");
}

json point_set_to_json(const PointSetReport& rep) {
    json j;
    j["curve"] = curve_to_json(rep.curve);
    j["tau_odd"] = rep.tau_odd;
    j["count"] = rep.points.size();
    j["max_x_degree"] = big_to_dec(rep.max_x_degree);
    json pts = json::array();
    for (const CurvePoint& pt : rep.points) pts.push_back(point_to_json(pt));
    j["points"] = std::move(pts);
    json prov = json::array();
    for (const PointProvenance& pp : rep.provenance)
        prov.push_back(json{{"m", pp.m}, {"unity", pp.unity}, {"sigma", pp.sigma}});
    j["provenance"] = std::move(prov);
    j["valid_m"] = rep.valid_m;
    json skipped = json::array();
    for (const SkipRecord& s : rep.skipped)
        skipped.push_back(json{{"m", s.m}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    j["warnings"] = rep.warnings;
    return j;
}

PointSetReport point_set_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("point set must be an object");
    PointSetReport rep{curve_from_json(need(j, "curve")), 0, {}, {}, {}, {}, {}, BigNat(0)};
    rep.tau_odd = get_u64(j, "tau_odd");
    rep.max_x_degree = BigNat(get_big(j, "max_x_degree"));
    const json& pts = need(j, "points");
    if (!pts.is_array()) throw ParseError("points must be an array");
    for (const auto& pj : pts) rep.points.push_back(point_from_json(rep.curve, pj));
    if (j.contains("provenance")) {
        for (const auto& pj : j["provenance"])
            rep.provenance.push_back(
                PointProvenance{get_u64(pj, "m"), get_u64(pj, "unity"),
                                need(pj, "sigma").get<bool>()});
        if (rep.provenance.size() != rep.points.size())
            throw ParseError("provenance length does not match points");
    }
    if (j.contains("valid_m"))
        for (const auto& m : j["valid_m"]) rep.valid_m.push_back(m.get<std::uint64_t>());
    if (j.contains("skipped"))
        for (const auto& sj : j["skipped"])
            rep.skipped.push_back(SkipRecord{get_u64(sj, "m"), need(sj, "reason").get<std::string>()});
    if (j.contains("warnings"))
        for (const auto& w : j["warnings"]) rep.warnings.push_back(w.get<std::string>());
    if (j.contains("count") && get_u64(j, "count") != rep.points.size())
        throw ParseError("count does not match points length");
    return rep;
}

json verification_to_json(const VerificationResult& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    if (r.eps_log2) j["eps_log2"] = *r.eps_log2;
    j["detail"] = r.detail;
    if (r.witness) {
        json w = json::parse(*r.witness, nullptr, false);
        j["witness"] = w.is_discarded() ? json(*r.witness) : w;
    }
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    if (r.field_p != 0) {
        j["field_p"] = r.field_p;
        j["field_k"] = r.field_k;
    }
    return j;
}

json table_to_json(const std::vector<TableRow>& rows) {
    json arr = json::array();
    for (const TableRow& row : rows) {
        arr.push_back(json{{"n", row.n},
                           {"tau_odd", row.tau_odd},
                           {"points", row.points},
                           {"points_with_involution", row.points_with_involution},
                           {"max_x_degree", big_to_dec(row.max_x_degree)}});
    }
    return arr;
}

json search_report_summary_json(const SearchReport& rep) {
    return json{{"summary", json{{"points", rep.points.size()}, {"candidates", rep.candidates}}}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw ParseError("write failed for " + path);
}

}  // namespace ffp
