// ffpoints command-line front end.
//
// Subcommands:
//   generate   build the explicit point set for a curve family
//   verify     check points from a JSON file against their curve
//   count      point-set counts only (no point data)
//   search     exhaustive low-degree rational point search
//   table      tau_odd / point-count growth table over several n
//   selfcheck  internal consistency suite
//
// Exit codes: 0 success / verified, 1 refuted, 2 bad parameters or
// malformed input or exceeded budget, 3 inconclusive at the requested
// verification mode.

#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffpoints/construct.hpp"
#include "ffpoints/curves.hpp"
#include "ffpoints/errors.hpp"
#include "ffpoints/json_io.hpp"
#include "ffpoints/search.hpp"

using namespace ffp;

namespace {

struct CommonOpts {
    std::string out;
    std::string format = "json";
    std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* cmd, CommonOpts& c,
                const std::vector<std::string>& formats) {
    cmd->add_option("--out", c.out, "write output to this file instead of stdout");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(formats));
    cmd->add_option("--seed", c.seed, "seed for randomized checks");
}

void emit(const CommonOpts& c, const std::string& body) {
    if (c.out.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(c.out, body.back() == '\n' ? body : body + "\n");
    }
}

int fail_param(const std::string& type, const std::string& msg) {
    json err;
    err["error"]["type"] = type;
    err["error"]["message"] = msg;
    std::cerr << err.dump() << "\n";
    return 2;
}

// ---- family selection shared by generate / count ------------------------

struct FamilyOpts {
    std::string family = "theorem";
    std::uint64_t p = 5;
    std::uint64_t r = 3;
    std::uint64_t n = 1;
    std::vector<std::uint64_t> f;  // example2 coefficients, low to high
    bool negations = false;
    bool involutions = false;
};

void add_family(CLI::App* cmd, FamilyOpts& fo, bool with_n) {
    cmd->add_option("--family", fo.family, "curve family")
        ->check(CLI::IsMember({"theorem", "example1", "example2", "example3"}));
    cmd->add_option("--p", fo.p, "field characteristic");
    cmd->add_option("--r", fo.r, "exponent r (theorem, example3)");
    cmd->add_option("--f", fo.f,
                    "polynomial coefficients c0,c1,... (example2)")
        ->delimiter(',');
    if (with_n) cmd->add_option("--n", fo.n, "exponent n in d = p^n + 1");
    cmd->add_flag("--negations", fo.negations, "include negated points");
    cmd->add_flag("--involutions", fo.involutions,
                  "include involution images (theorem family)");
}

PointSetOptions to_point_set_options(const FamilyOpts& fo) {
    PointSetOptions o;
    o.family = family_from_name(fo.family);
    o.p = fo.p;
    o.r = fo.r;
    o.n = fo.n;
    o.include_negations = fo.negations;
    o.include_involutions = fo.involutions;
    if (o.family == Family::Example2) {
        if (fo.f.empty())
            throw ParameterError("example2 requires --f coefficients");
        PrimeField F(fo.p);
        std::vector<fp_t> cs;
        cs.reserve(fo.f.size());
        for (std::uint64_t c : fo.f) cs.push_back(static_cast<fp_t>(c % fo.p));
        o.f = DensePoly(F, cs);
    }
    return o;
}

std::string summary_line(const PointSetReport& rep) {
    std::ostringstream os;
    os << "tau_odd=" << rep.tau_odd << ", points=" << rep.points.size();
    if (!rep.skipped.empty()) os << ", skipped_m=" << rep.skipped.size();
    if (!rep.warnings.empty()) os << ", warnings=" << rep.warnings.size();
    return os.str();
}

std::string point_set_text(const PointSetReport& rep) {
    std::ostringstream os;
    os << curve_equation(rep.curve) << "\n";
    os << summary_line(rep) << ", max_x_degree=" << rep.max_x_degree.get_str()
       << "\n";
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
        const auto& pr = rep.provenance[i];
        os << "  [" << i << "] m=" << pr.m << " unity=" << pr.unity
           << (pr.sigma ? " sigma" : "") << "  x = " << rep.points[i].xf().to_string()
           << "  y = " << rep.points[i].yf().to_string() << "\n";
    }
    for (const auto& sk : rep.skipped)
        os << "  skipped m=" << sk.m << ": " << sk.reason << "\n";
    for (const auto& w : rep.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

int run_generate(const FamilyOpts& fo, const CommonOpts& co) {
    PointSetReport rep = point_set(to_point_set_options(fo));
    if (co.format == "text") {
        emit(co, point_set_text(rep));
    } else {
        emit(co, point_set_to_json(rep).dump(2));
    }
    std::cerr << summary_line(rep) << "\n";
    return 0;
}

int run_count(const FamilyOpts& fo, const CommonOpts& co) {
    PointSetReport rep = point_set(to_point_set_options(fo));
    if (co.format == "text") {
        emit(co, summary_line(rep) + ", max_x_degree=" + rep.max_x_degree.get_str());
    } else {
        json j;
        j["family"] = fo.family;
        j["p"] = fo.p;
        j["n"] = fo.n;
        j["tau_odd"] = rep.tau_odd;
        j["count"] = rep.points.size();
        j["max_x_degree"] = rep.max_x_degree.get_str();
        j["valid_m"] = rep.valid_m;
        json sk = json::array();
        for (const auto& s : rep.skipped)
            sk.push_back(json{{"m", s.m}, {"reason", s.reason}});
        j["skipped"] = sk;
        emit(co, j.dump(2));
    }
    return 0;
}

// ---- verify --------------------------------------------------------------

struct VerifyOpts {
    std::string points_path;
    std::string curve_path;
    std::string mode = "auto";
    int eps_log2 = -60;
    std::uint64_t dense_cap = 1000000;
};

EqMode parse_mode(const std::string& s) {
    if (s == "canonical") return EqMode::Canonical;
    if (s == "probabilistic") return EqMode::Probabilistic;
    if (s == "dense") return EqMode::Dense;
    return EqMode::Auto;
}

// Points file shapes accepted: a point-set report (object with "curve" and
// "points"), a bare array of points, or a single point object.  A detached
// curve file overrides / supplies the curve.
int run_verify(const VerifyOpts& vo, const CommonOpts& co) {
    json pj = load_json_file(vo.points_path);

    CurveModel curve = [&] {
        if (!vo.curve_path.empty()) return curve_from_json(load_json_file(vo.curve_path));
        if (pj.is_object() && pj.contains("curve")) return curve_from_json(pj["curve"]);
        throw ParseError("no curve: pass --curve or embed one in the points file");
    }();

    json plist = json::array();
    if (pj.is_array())
        plist = pj;
    else if (pj.is_object() && pj.contains("points"))
        plist = pj["points"];
    else if (pj.is_object() && pj.contains("repr"))
        plist.push_back(pj);
    else
        throw ParseError("points file holds neither a point set nor points");

    EqOptions eq;
    eq.mode = parse_mode(vo.mode);
    eq.eps_target_log2 = vo.eps_log2;
    eq.dense_cap = BigInt(static_cast<unsigned long>(vo.dense_cap));
    eq.seed = co.seed;

    json results = json::array();
    bool any_refuted = false, any_inconclusive = false;
    for (std::size_t i = 0; i < plist.size(); ++i) {
        CurvePoint pt = point_from_json(curve, plist[i]);
        json entry;
        entry["index"] = i;
        try {
            VerificationResult r = is_on_curve(pt, eq);
            entry["result"] = verification_to_json(r);
            if (r.verdict == Verdict::ProvenUnequal)
                any_refuted = true;
            else if (r.verdict == Verdict::ProbUnequal)
                any_inconclusive = true;
        } catch (const CapExceeded& e) {
            entry["result"] = json{{"verdict", "inconclusive"}, {"detail", e.what()}};
            any_inconclusive = true;
        } catch (const FieldTooLargeInfeasible& e) {
            entry["result"] = json{{"verdict", "inconclusive"}, {"detail", e.what()}};
            any_inconclusive = true;
        }
        results.push_back(std::move(entry));
    }

    std::string overall = any_refuted        ? "refuted"
                          : any_inconclusive ? "inconclusive"
                                             : "verified";
    json out;
    out["mode"] = vo.mode;
    out["points"] = plist.size();
    out["overall"] = overall;
    out["results"] = results;

    if (co.format == "text") {
        std::ostringstream os;
        for (const auto& e : out["results"]) {
            os << "point " << e["index"] << ": "
               << e["result"]["verdict"].get<std::string>();
            if (e["result"].contains("detail"))
                os << " (" << e["result"]["detail"].get<std::string>() << ")";
            os << "\n";
        }
        os << "overall: " << overall << "\n";
        emit(co, os.str());
    } else {
        emit(co, out.dump(2));
    }
    return any_refuted ? 1 : (any_inconclusive ? 3 : 0);
}

// ---- search ---------------------------------------------------------------

struct SearchOpts {
    std::string family = "theorem";
    std::uint64_t p = 5;
    std::uint64_t r = 3;
    std::uint64_t k = 6;
    std::vector<std::uint64_t> f;
    std::uint64_t d = 6;
    unsigned max_num_deg = 0;
    unsigned max_den_deg = 0;
    std::uint64_t budget = 100000000;
    unsigned threads = 1;
};

CurveModel search_curve(const SearchOpts& so) {
    PrimeField F(so.p);
    FactoredExpr a = FactoredExpr::make(F, 1, BigInt(static_cast<unsigned long>(so.d)), {});
    if (so.family == "theorem") return make_theorem_curve(F, so.r, a);
    if (so.family == "kummer") return make_kummer_curve(F, so.k, a);
    if (so.family == "example1") return make_kummer_curve(F, 6, a);
    if (so.family == "example3") return make_kummer_curve(F, so.r, a);
    // palindromic / example2
    if (so.f.empty()) throw ParameterError("this family requires --f coefficients");
    std::vector<fp_t> cs;
    cs.reserve(so.f.size());
    for (std::uint64_t c : so.f) cs.push_back(static_cast<fp_t>(c % so.p));
    return make_palindromic_curve(F, DensePoly(F, cs), a);
}

int run_search(const SearchOpts& so, const CommonOpts& co) {
    CurveModel curve = search_curve(so);
    SearchBounds bounds{so.max_num_deg, so.max_den_deg};
    SearchOptions opts;
    opts.budget = BigInt(static_cast<unsigned long>(so.budget));
    opts.threads = so.threads;

    auto t0 = std::chrono::steady_clock::now();
    SearchReport rep = exhaustive_search(curve, bounds, opts);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "searched " << rep.candidates << " candidates in " << ms
              << " ms, found " << rep.points.size() << " points\n";

    std::ostringstream os;
    if (co.format == "text") {
        for (const auto& pt : rep.points)
            os << "x = " << pt.xd().to_string()
               << "   y = " << pt.yd().to_string() << "\n";
        os << rep.points.size() << " points, " << rep.candidates
           << " candidates\n";
    } else {
        // JSON lines: one point per line, then a summary record.
        for (const auto& pt : rep.points)
            os << point_to_json(pt).dump() << "\n";
        os << search_report_summary_json(rep).dump() << "\n";
    }
    emit(co, os.str());
    return 0;
}

// ---- table ----------------------------------------------------------------

struct TableOpts {
    std::uint64_t p = 5;
    std::uint64_t r = 3;
    std::vector<std::uint64_t> ns;
};

int run_table(const TableOpts& to, const CommonOpts& co) {
    if (to.ns.empty()) throw ParameterError("table requires --n n1,n2,...");
    std::vector<TableRow> rows = unboundedness_table(to.p, to.r, to.ns);
    if (co.format == "json") {
        emit(co, table_to_json(rows).dump(2));
    } else {
        emit(co, table_to_csv(rows));  // csv and text agree
    }
    return 0;
}

// ---- selfcheck --------------------------------------------------------------

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

void check_field_axioms(std::mt19937_64& rng) {
    for (std::uint64_t p : {5ull, 11ull, 61ull}) {
        PrimeField F(p);
        std::uniform_int_distribution<fp_t> dist(0, p - 1);
        for (int i = 0; i < 200; ++i) {
            fp_t a = dist(rng), b = dist(rng), c = dist(rng);
            require(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)),
                    "distributivity");
            require(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)),
                    "mul associativity");
            require(F.add(a, F.neg(a)) == 0, "additive inverse");
            if (a != 0) {
                require(F.mul(a, F.inv(a)) == 1, "multiplicative inverse");
                require(F.pow(a, p - 1) == 1, "Fermat little theorem");
            }
        }
    }
}

void check_kth_roots() {
    for (std::uint64_t p : {5ull, 13ull}) {
        PrimeField F(p);
        for (std::uint64_t k : {2ull, 3ull, 6ull}) {
            for (fp_t c = 1; c < p; ++c) {
                if (!is_kth_power_residue(c, k, F)) continue;
                fp_t x = kth_root_in_fp(c, k, F);
                require(F.pow(x, k) == c, "k-th root does not invert pow");
            }
        }
    }
}

FactoredExpr random_expr(const PrimeField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<fp_t> coeff(1, F.p() - 1);
    std::uniform_int_distribution<int> small(0, 3), nfac(0, 3);
    std::uniform_int_distribution<long> texp(-30, 30), inner(1, 50), outer(-20, 20);
    std::vector<FeFactor> fs;
    int count = nfac(rng);
    for (int i = 0; i < count; ++i) {
        std::vector<fp_t> cs;
        int deg = small(rng);
        for (int j = 0; j <= deg; ++j) cs.push_back(coeff(rng));
        DensePoly b(F, cs);
        if (b.degree() < 1) continue;  // constants fold into coeff anyway
        long o = outer(rng);
        if (o == 0) o = 1;
        fs.push_back({std::move(b), BigInt(inner(rng)), BigInt(o)});
    }
    return FactoredExpr::make(F, coeff(rng), BigInt(texp(rng)), std::move(fs));
}

void check_canonicalizer(std::mt19937_64& rng) {
    PrimeField F(5);
    for (int i = 0; i < 40; ++i) {
        FactoredExpr e = random_expr(F, rng);
        FactoredExpr c1 = canonicalize(e);
        FactoredExpr c2 = canonicalize(c1);
        require(c1 == c2, "canonicalize not idempotent");
        VerificationResult r = fe_eq(e, c1, {});
        require(r.equal_verdict(), "canonicalize changed the function");
    }
}

void check_lte() {
    const std::pair<std::uint64_t, std::uint64_t> cases[] = {
        {5, 3}, {11, 3}, {17, 3}, {19, 5}, {29, 5}};
    for (auto [p, ell] : cases) {
        for (std::uint64_t k = 1; k <= 81; k += 2) {
            LteCheck c = lte_valuation(p, ell, k);
            require(c.v_exact == c.v_predicted, "LTE valuation mismatch");
        }
    }
}

void check_sigma() {
    for (std::uint64_t m : {1ull, 3ull}) {
        GeneratedPoint gp = theorem_point(5, 3, 3, m);
        CurvePoint s = involution(gp.point);
        require(is_on_curve(s, {}).verdict == Verdict::ProvenEqual,
                "sigma image not on curve");
        CurvePoint ss = involution(s);
        require(canonicalize(ss.xf()) == canonicalize(gp.point.xf()) &&
                    canonicalize(ss.yf()) == canonicalize(gp.point.yf()),
                "sigma not an involution");
        require(!(canonicalize(s.xf()) == canonicalize(gp.point.xf())),
                "sigma fixes the constructed point");
    }
}

void check_constructions() {
    require(is_on_curve(theorem_point(5, 3, 1, 1).point, {}).verdict ==
                Verdict::ProvenEqual,
            "theorem point fails canonically");
    require(is_on_curve(example1_point(5, 3, 1).point, {}).verdict ==
                Verdict::ProvenEqual,
            "example1 point fails canonically");
    PrimeField F7(7);
    require(is_on_curve(example2_point(7, DensePoly(F7, {1, 0, 1}), 3, 1).point, {})
                    .verdict == Verdict::ProvenEqual,
            "example2 point fails canonically");
    require(is_on_curve(example3_point(11, 3, 21, 1).point, {}).verdict ==
                Verdict::ProvenEqual,
            "example3 point fails canonically");
    EqOptions prob;
    prob.mode = EqMode::Probabilistic;
    require(is_on_curve(theorem_point(5, 3, 1, 1).point, prob).equal_verdict(),
            "theorem point fails probabilistically");
}

void check_oracle_agreement() {
    PointSetOptions o;
    o.p = 5;
    o.r = 3;
    o.n = 1;
    o.include_negations = true;
    o.include_involutions = true;
    PointSetReport rep = point_set(o);
    ConfirmReport cr = confirm_constructed(rep.curve, rep, SearchBounds{6, 0});
    require(cr.ok, "constructed points not confirmed by exhaustive search");
    SearchReport sr = exhaustive_search(rep.curve, SearchBounds{6, 0});
    require(sr.points.size() == 15, "search point count changed");
}

void check_refutation() {
    GeneratedPoint gp = theorem_point(5, 3, 1, 1);
    CurvePoint bad = make_point(gp.point.curve, gp.point.xf(),
                                fe_scale(gp.point.yf(), 2));
    VerificationResult c = is_on_curve(bad, {});
    require(c.verdict != Verdict::ProvenEqual, "corrupted point passed canonically");
    EqOptions prob;
    prob.mode = EqMode::Probabilistic;
    require(is_on_curve(bad, prob).verdict == Verdict::ProvenUnequal,
            "corrupted point not refuted probabilistically");
}

int run_selfcheck(const CommonOpts& co) {
    std::mt19937_64 rng(co.seed);
    struct Check {
        const char* name;
        std::function<void()> fn;
    };
    const Check checks[] = {
        {"field-axioms", [&] { check_field_axioms(rng); }},
        {"kth-roots", [] { check_kth_roots(); }},
        {"canonicalizer", [&] { check_canonicalizer(rng); }},
        {"lte-valuations", [] { check_lte(); }},
        {"sigma-involution", [] { check_sigma(); }},
        {"constructions", [] { check_constructions(); }},
        {"oracle-agreement", [] { check_oracle_agreement(); }},
        {"refutation", [] { check_refutation(); }},
    };
    int failed = 0;
    for (const auto& c : checks) {
        try {
            c.fn();
            std::cout << "ok    " << c.name << "\n";
        } catch (const std::exception& e) {
            std::cout << "FAIL  " << c.name << ": " << e.what() << "\n";
            ++failed;
        }
    }
    std::cout << "selfcheck: " << (std::size(checks) - failed) << "/"
              << std::size(checks) << " passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit rational points on curves over F_p(t)"};
    app.require_subcommand(1);

    FamilyOpts gen_fo, cnt_fo;
    CommonOpts gen_co, cnt_co, ver_co, sea_co, tab_co, chk_co;
    VerifyOpts ver;
    SearchOpts sea;
    TableOpts tab;

    auto* gen = app.add_subcommand("generate", "construct the explicit point set");
    add_family(gen, gen_fo, true);
    add_common(gen, gen_co, {"json", "text"});

    auto* cnt = app.add_subcommand("count", "point-set counts only");
    add_family(cnt, cnt_fo, true);
    add_common(cnt, cnt_co, {"json", "text"});

    auto* ver_cmd = app.add_subcommand("verify", "verify points from a JSON file");
    ver_cmd->add_option("--points", ver.points_path, "points JSON file")->required();
    ver_cmd->add_option("--curve", ver.curve_path, "detached curve JSON file");
    ver_cmd->add_option("--mode", ver.mode, "equality mode")
        ->check(CLI::IsMember({"canonical", "probabilistic", "dense", "auto"}));
    ver_cmd->add_option("--eps-log2", ver.eps_log2,
                        "probabilistic error bound exponent (default -60)");
    ver_cmd->add_option("--dense-cap", ver.dense_cap, "dense expansion degree cap");
    add_common(ver_cmd, ver_co, {"json", "text"});

    auto* sea_cmd = app.add_subcommand("search", "exhaustive low-degree point search");
    sea_cmd->add_option("--family", sea.family, "curve family")
        ->check(CLI::IsMember({"theorem", "kummer", "palindromic", "example1",
                               "example2", "example3"}));
    sea_cmd->add_option("--p", sea.p, "field characteristic");
    sea_cmd->add_option("--r", sea.r, "exponent r");
    sea_cmd->add_option("--k", sea.k, "Kummer exponent k");
    sea_cmd->add_option("--f", sea.f, "polynomial coefficients c0,c1,...")
        ->delimiter(',');
    sea_cmd->add_option("--d", sea.d, "a = t^d")->required();
    sea_cmd->add_option("--max-num-deg", sea.max_num_deg,
                        "max numerator degree of x")->required();
    sea_cmd->add_option("--max-den-deg", sea.max_den_deg, "max denominator degree of x");
    sea_cmd->add_option("--budget", sea.budget, "candidate-space budget");
    sea_cmd->add_option("--threads", sea.threads, "worker threads");
    add_common(sea_cmd, sea_co, {"json", "text"});

    auto* tab_cmd = app.add_subcommand("table", "growth table across n values");
    tab_cmd->add_option("--p", tab.p, "field characteristic");
    tab_cmd->add_option("--r", tab.r, "exponent r");
    tab_cmd->add_option("--n", tab.ns, "comma-separated n values")
        ->delimiter(',')->required();
    add_common(tab_cmd, tab_co, {"json", "csv", "text"});
    tab_co.format = "csv";

    auto* chk = app.add_subcommand("selfcheck", "internal consistency suite");
    add_common(chk, chk_co, {"text"});
    chk_co.format = "text";

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // flag misuse is a parameter error
    }

    try {
        if (*gen) return run_generate(gen_fo, gen_co);
        if (*cnt) return run_count(cnt_fo, cnt_co);
        if (*ver_cmd) return run_verify(ver, ver_co);
        if (*sea_cmd) return run_search(sea, sea_co);
        if (*tab_cmd) return run_table(tab, tab_co);
        if (*chk) return run_selfcheck(chk_co);
    } catch (const ParseError& e) {
        return fail_param("parse", e.what());
    } catch (const BudgetExceeded& e) {
        return fail_param("budget", e.what());
    } catch (const ParameterError& e) {
        return fail_param("parameter", e.what());
    } catch (const std::exception& e) {
        return fail_param("internal", e.what());
    }
    return 2;
}
