// Acceptance suite.  Each criterion prints exactly one pass/FAIL line; the
// exit status is the number of failed criteria.  Numeric tolerances and time
// limits are pinned here as constants.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ffpoints/construct.hpp"
#include "ffpoints/curves.hpp"
#include "ffpoints/errors.hpp"
#include "ffpoints/search.hpp"

using namespace ffp;

namespace {

constexpr double kIdentityTimeLimit = 1.0;        // criterion 1, seconds
constexpr double kSearchTimeLimit = 60.0;         // criterion 2, seconds
constexpr double kCanonicalBatchLimit = 10.0;     // criterion 3, largest n
constexpr double kProbabilisticBatchLimit = 60.0; // criterion 3, largest n
constexpr int kEpsLog2 = -60;                     // probabilistic error bound
constexpr unsigned long kCanonicalCompleteBound = 4096;  // criterion 9
const std::vector<std::uint64_t> kTableNs = {1, 3, 15, 105};

struct Checker {
    std::vector<std::string> problems;
    void is(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

EqOptions with_mode(EqMode m) {
    EqOptions o;
    o.mode = m;
    return o;
}

const EqOptions kCanonical = with_mode(EqMode::Canonical);
const EqOptions kProbabilistic = with_mode(EqMode::Probabilistic);
const EqOptions kDense = with_mode(EqMode::Dense);

// The growth-table point sets (p = 5, r = 3, negated partners included) are
// shared by criteria 3, 4, and 11.
const std::map<std::uint64_t, PointSetReport>& growth_sets() {
    static const std::map<std::uint64_t, PointSetReport> sets = [] {
        std::map<std::uint64_t, PointSetReport> s;
        for (std::uint64_t n : kTableNs) {
            PointSetOptions o;
            o.p = 5;
            o.r = 3;
            o.n = n;
            o.include_negations = true;
            s.emplace(n, point_set(o));
        }
        return s;
    }();
    return sets;
}

std::string point_key(const CurvePoint& pt) {
    return canonicalize(pt.xf()).to_string() + " | " +
           canonicalize(pt.yf()).to_string();
}

// 1. The base construction at p = 5, r = 3, n = m = 1 yields the explicit
//    point (t, t^2 (t^3+1)^3), and all three equality engines accept it.
void criterion_construction_identity(Checker& c) {
    auto t0 = std::chrono::steady_clock::now();
    PrimeField F(5);
    GeneratedPoint gp = theorem_point(5, 3, 1, 1);

    c.is(canonicalize(gp.point.xf()) ==
             canonicalize(FactoredExpr::monomial(F, 1, BigInt(1))),
         "x is not t");
    FactoredExpr y_want = FactoredExpr::make(
        F, 1, BigInt(2), {FeFactor{DensePoly(F, {1, 1}), BigNat(3), BigInt(3)}});
    c.is(canonicalize(gp.point.yf()) == canonicalize(y_want),
         "y is not t^2 (t^3+1)^3");

    c.is(is_on_curve(gp.point, kCanonical).verdict == Verdict::ProvenEqual,
         "canonical check fails");
    VerificationResult pr = is_on_curve(gp.point, kProbabilistic);
    c.is(pr.verdict == Verdict::ProbEqual, "probabilistic check fails");
    c.is(pr.eps_log2.has_value() && *pr.eps_log2 <= kEpsLog2,
         "probabilistic bound misses 2^-60");
    c.is(is_on_curve(gp.point, kDense).verdict == Verdict::ProvenEqual,
         "dense check fails");
    double dt = seconds_since(t0);
    c.is(dt < kIdentityTimeLimit,
         "took " + std::to_string(dt) + " s (limit 1 s)");
}

// 2. Brute-force search over x = u/w (deg u <= 6, w = 1) on the n = 1 curve
//    finds exactly the advertised points at x in {0, -1, -t^6, t, t^5}, and
//    every constructed point lies in the search output.
void criterion_search_agreement(Checker& c) {
    auto t0 = std::chrono::steady_clock::now();
    PrimeField F(5);
    CurveModel curve =
        make_theorem_curve(F, 3, FactoredExpr::monomial(F, 1, BigInt(6)));
    SearchReport rep = exhaustive_search(curve, SearchBounds{6, 0});

    DensePoly cube(F, {1, 0, 0, 1});  // t^3 + 1
    DensePoly y1 = DensePoly::monomial(F, 1, 2) * cube.pow(3);
    DensePoly y5 = DensePoly::monomial(F, 1, 10) * cube.pow(3);

    struct Expect {
        DensePoly x;
        std::vector<DensePoly> ys;
    };
    const std::vector<Expect> want = {
        {DensePoly::zero(F), {DensePoly::zero(F)}},
        {DensePoly::constant(F, 4), {DensePoly::zero(F)}},
        {DensePoly::monomial(F, 4, 6), {DensePoly::zero(F)}},
        {DensePoly::monomial(F, 1, 1), {y1, y1.scaled(4)}},
        {DensePoly::monomial(F, 1, 5), {y5, y5.scaled(4)}},
    };

    std::size_t matched = 0;
    for (const Expect& w : want) {
        std::vector<DensePoly> got;
        for (const CurvePoint& pt : rep.points) {
            if (!pt.xd().is_poly() || pt.xd().num != w.x) continue;
            if (!pt.yd().is_poly()) {
                c.is(false, "fractional y at x = " + w.x.to_string());
                continue;
            }
            got.push_back(pt.yd().num);
        }
        auto lt = [](const DensePoly& a, const DensePoly& b) {
            return DensePoly::cmp(a, b) < 0;
        };
        std::vector<DensePoly> ys = w.ys;
        std::sort(got.begin(), got.end(), lt);
        std::sort(ys.begin(), ys.end(), lt);
        c.is(got == ys, "wrong y set at x = " + w.x.to_string());
        matched += got.size();
    }
    c.is(matched == 7, "expected exactly 7 points over the designated x values");

    PointSetOptions o;
    o.p = 5;
    o.r = 3;
    o.n = 1;
    o.include_negations = true;
    o.include_involutions = true;
    PointSetReport constructed = point_set(o);
    ConfirmReport cr = confirm_constructed(curve, constructed, SearchBounds{6, 0});
    c.is(cr.ok && cr.missing.empty(),
         "constructed points are not all found by the search");
    c.is(cr.checked == constructed.points.size(),
         "some constructed points fell outside the search bounds");

    double dt = seconds_since(t0);
    c.is(dt < kSearchTimeLimit,
         "took " + std::to_string(dt) + " s (limit 60 s)");
}

// 3. The point count doubles with each extra odd-quotient divisor of n:
//    2, 4, 8, 16 for n = 1, 3, 15, 105; the points are pairwise distinct and
//    all verify, canonically for every n and probabilistically at n = 105.
void criterion_growth_table(Checker& c) {
    std::vector<TableRow> rows = unboundedness_table(5, 3, kTableNs);
    const std::uint64_t want_tau[] = {1, 2, 4, 8};
    const std::uint64_t want_pts[] = {2, 4, 8, 16};
    if (rows.size() != kTableNs.size()) {
        c.is(false, "table has the wrong number of rows");
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.is(rows[i].n == kTableNs[i], "row n mismatch");
        c.is(rows[i].tau_odd == want_tau[i],
             "tau_odd wrong at n = " + std::to_string(kTableNs[i]));
        c.is(rows[i].points == want_pts[i],
             "point count wrong at n = " + std::to_string(kTableNs[i]));
        c.is(rows[i].points_with_involution == 2 * want_pts[i],
             "involution count wrong at n = " + std::to_string(kTableNs[i]));
    }

    for (std::size_t i = 0; i < kTableNs.size(); ++i) {
        std::uint64_t n = kTableNs[i];
        const PointSetReport& rep = growth_sets().at(n);
        c.is(rep.points.size() == want_pts[i],
             "set size wrong at n = " + std::to_string(n));

        std::set<std::string> keys;
        for (const CurvePoint& pt : rep.points) keys.insert(point_key(pt));
        c.is(keys.size() == rep.points.size(),
             "points not pairwise distinct at n = " + std::to_string(n));

        auto t0 = std::chrono::steady_clock::now();
        for (const CurvePoint& pt : rep.points)
            c.is(is_on_curve(pt, kCanonical).verdict == Verdict::ProvenEqual,
                 "canonical verification fails at n = " + std::to_string(n));
        if (n == 105) {
            double dt = seconds_since(t0);
            c.is(dt < kCanonicalBatchLimit,
                 "canonical batch took " + std::to_string(dt) + " s (limit 10 s)");

            auto t1 = std::chrono::steady_clock::now();
            for (const CurvePoint& pt : rep.points) {
                VerificationResult r = is_on_curve(pt, kProbabilistic);
                c.is(r.verdict == Verdict::ProbEqual &&
                         r.eps_log2.has_value() && *r.eps_log2 <= kEpsLog2,
                     "probabilistic verification fails at n = 105");
            }
            dt = seconds_since(t1);
            c.is(dt < kProbabilisticBatchLimit,
                 "probabilistic batch took " + std::to_string(dt) +
                     " s (limit 60 s)");
        }
    }
}

// 4. The involution sigma(x, y) = (a/x, -a^((r+1)/2) y / x^(r+1)) maps every
//    growth-table point to a distinct curve point with x-exponent d - e, and
//    applying it twice returns the original point.
void criterion_involution_action(Checker& c) {
    for (const auto& [n, rep] : growth_sets()) {
        for (std::size_t i = 0; i < rep.points.size(); ++i) {
            const CurvePoint& pt = rep.points[i];
            ConstructionParams pr = make_params(5, n, rep.provenance[i].m);
            std::string at = " (n = " + std::to_string(n) +
                             ", index " + std::to_string(i) + ")";

            CurvePoint s = involution(pt);
            c.is(is_on_curve(s, kCanonical).verdict == Verdict::ProvenEqual,
                 "sigma image is off the curve" + at);

            CurvePoint ss = involution(s);
            c.is(canonicalize(ss.xf()) == canonicalize(pt.xf()) &&
                     canonicalize(ss.yf()) == canonicalize(pt.yf()),
                 "sigma applied twice is not the identity" + at);

            c.is(!(canonicalize(s.xf()) == canonicalize(pt.xf()) &&
                   canonicalize(s.yf()) == canonicalize(pt.yf())),
                 "sigma fixes the point" + at);

            auto mono = canonicalize(s.xf()).as_monomial();
            BigInt want = BigInt(pr.d) - BigInt(pr.e);
            c.is(mono.has_value() && mono->second == want,
                 "sigma x-exponent is not d - e" + at);
        }
    }
}

// 5. Divisibility obstructions: at p = 11, n = 21 the sixth- and third-root
//    constructions exist exactly for m in {1, 7}; m in {3, 21} is skipped
//    with the divisibility failure recorded, and the direct call throws.
void criterion_divisibility_obstructions(Checker& c) {
    for (Family fam : {Family::Example1, Family::Example3}) {
        PointSetOptions o;
        o.family = fam;
        o.p = 11;
        o.r = 3;
        o.n = 21;
        PointSetReport rep = point_set(o);
        std::string who = family_name(fam);

        c.is(rep.valid_m == std::vector<std::uint64_t>({1, 7}),
             who + ": valid m is not {1, 7}");
        std::vector<std::uint64_t> skipped;
        for (const SkipRecord& s : rep.skipped) {
            skipped.push_back(s.m);
            c.is(s.reason.find("not divisible") != std::string::npos,
                 who + ": skip reason does not name the obstruction");
        }
        c.is(skipped == std::vector<std::uint64_t>({3, 21}),
             who + ": skipped m is not {3, 21}");
        for (const CurvePoint& pt : rep.points)
            c.is(is_on_curve(pt, kCanonical).verdict == Verdict::ProvenEqual,
                 who + ": a surviving point fails verification");
    }

    bool threw = false;
    try {
        example1_point(11, 21, 3);
    } catch (const DivisibilityError&) {
        threw = true;
    }
    c.is(threw, "the obstructed construction did not throw");
}

// 6. Palindromic family: p = 7, f = x^2 + 1, n = 3, m = 1 gives the point
//    (t^43, t^43 (t^86+1)^4); degenerate data (f(0) = 0, repeated roots) is
//    refused at curve construction.
void criterion_palindromic_construction(Checker& c) {
    PrimeField F(7);
    GeneratedPoint gp = example2_point(7, DensePoly(F, {1, 0, 1}), 3, 1);

    c.is(gp.params.d == 344 && gp.params.d_prime == 8 && gp.params.e == 43,
         "parameters are not (d, d', e) = (344, 8, 43)");
    auto xm = canonicalize(gp.point.xf()).as_monomial();
    c.is(xm.has_value() && xm->first == 1 && xm->second == 43, "x is not t^43");
    FactoredExpr y_want = FactoredExpr::make(
        F, 1, BigInt(43), {FeFactor{DensePoly(F, {1, 1}), BigNat(86), BigInt(4)}});
    c.is(canonicalize(gp.point.yf()) == canonicalize(y_want),
         "y is not t^43 (t^86+1)^4");

    c.is(is_on_curve(gp.point, kCanonical).verdict == Verdict::ProvenEqual,
         "canonical check fails");
    VerificationResult pr = is_on_curve(gp.point, kProbabilistic);
    c.is(pr.verdict == Verdict::ProbEqual && pr.eps_log2.has_value() &&
             *pr.eps_log2 <= kEpsLog2,
         "probabilistic check fails");

    FactoredExpr a8 = FactoredExpr::monomial(F, 1, BigInt(8));
    bool threw = false;
    try {
        make_palindromic_curve(F, DensePoly(F, {0, 0, 1}), a8);  // f(0) = 0
    } catch (const InvalidPolynomial&) {
        threw = true;
    }
    c.is(threw, "f with f(0) = 0 was accepted");
    threw = false;
    try {
        make_palindromic_curve(F, DensePoly(F, {1, 2, 1}), a8);  // (x+1)^2
    } catch (const InvalidPolynomial&) {
        threw = true;
    }
    c.is(threw, "non-squarefree f was accepted");
}

// 7. The lifting-the-exponent identity v_ell(p^k + 1) = v_ell(p+1) + v_ell(k)
//    holds for every odd k <= 81 across five (p, ell) pairs, and the
//    preconditions are enforced.
void criterion_lte_valuations(Checker& c) {
    const std::pair<std::uint64_t, std::uint64_t> cases[] = {
        {5, 3}, {11, 3}, {17, 3}, {19, 5}, {29, 5}};
    int bad = 0;
    for (auto [p, ell] : cases)
        for (std::uint64_t k = 1; k <= 81; k += 2) {
            LteCheck ck = lte_valuation(p, ell, k);
            if (ck.v_exact != ck.v_predicted) ++bad;
        }
    c.is(bad == 0, std::to_string(bad) + " valuation mismatches");

    bool threw = false;
    try {
        lte_valuation(5, 7, 3);  // 7 does not divide 5 + 1
    } catch (const PrecondViolation&) {
        threw = true;
    }
    c.is(threw, "ell not dividing p+1 was accepted");
    threw = false;
    try {
        lte_valuation(5, 3, 4);  // even k
    } catch (const PrecondViolation&) {
        threw = true;
    }
    c.is(threw, "even k was accepted");
}

// 8. 1000 corrupted variants of valid points (unit twist of y with a non-unity
//    kappa-th power, or a +-1 shift of the x or y exponent) are never accepted
//    canonically and are always refuted probabilistically.
void criterion_mutant_refutation(Checker& c) {
    std::vector<CurvePoint> pool;
    for (std::uint64_t n : {1ull, 3ull}) {
        PointSetOptions o;
        o.p = 5;
        o.r = 3;
        o.n = n;
        o.include_negations = true;
        o.include_involutions = true;
        PointSetReport rep = point_set(o);
        pool.insert(pool.end(), rep.points.begin(), rep.points.end());
    }
    pool.push_back(example1_point(5, 3, 1).point);
    pool.push_back(example1_point(5, 9, 1).point);
    PrimeField F7(7);
    DensePoly f101(F7, {1, 0, 1});
    pool.push_back(example2_point(7, f101, 1, 1).point);
    pool.push_back(example2_point(7, f101, 3, 1).point);
    pool.push_back(example3_point(11, 3, 21, 1).point);
    pool.push_back(example3_point(11, 3, 21, 7).point);

    std::mt19937_64 rng(kDefaultSeed);
    int accepted_canonically = 0, not_refuted = 0;
    for (int i = 0; i < 1000; ++i) {
        const CurvePoint& base = pool[(i / 3) % pool.size()];
        const PrimeField& F = curve_field(base.curve);
        long dir = ((i / 54) % 2) ? 1 : -1;

        CurvePoint mutant = [&]() -> CurvePoint {
            switch (i % 3) {
                case 0: {  // unit twist of y that moves y^kappa
                    std::uint64_t kappa = curve_exponent(base.curve);
                    std::uniform_int_distribution<fp_t> dist(2, F.p() - 1);
                    fp_t u;
                    do {
                        u = dist(rng);
                    } while (F.pow(u, kappa) == 1);
                    return make_point(base.curve, base.xf(),
                                      fe_scale(base.yf(), u));
                }
                case 1: {  // shift the x valuation
                    const FactoredExpr& x = base.xf();
                    return make_point(
                        base.curve,
                        FactoredExpr::make(F, x.coeff(), x.t_exp() + dir,
                                           x.factors()),
                        base.yf());
                }
                default: {  // shift the y valuation
                    const FactoredExpr& y = base.yf();
                    return make_point(
                        base.curve, base.xf(),
                        FactoredExpr::make(F, y.coeff(), y.t_exp() + dir,
                                           y.factors()));
                }
            }
        }();

        if (is_on_curve(mutant, kCanonical).verdict == Verdict::ProvenEqual)
            ++accepted_canonically;
        if (is_on_curve(mutant, kProbabilistic).verdict != Verdict::ProvenUnequal)
            ++not_refuted;
    }
    c.is(accepted_canonically == 0,
         std::to_string(accepted_canonically) + " mutants accepted canonically");
    c.is(not_refuted == 0,
         std::to_string(not_refuted) + " mutants not refuted probabilistically");
}

// ---- criterion 9 helpers ---------------------------------------------------

FactoredExpr random_small_expr(const PrimeField& F, std::mt19937_64& rng) {
    std::uniform_int_distribution<fp_t> unit(1, F.p() - 1), any(0, F.p() - 1);
    std::uniform_int_distribution<int> nfac(0, 3), degd(1, 3);
    std::uniform_int_distribution<long> texp(-10, 10), innr(1, 8), outr(-4, 6);
    for (;;) {
        std::vector<FeFactor> fs;
        int count = nfac(rng);
        for (int i = 0; i < count; ++i) {
            int deg = degd(rng);
            std::vector<fp_t> cs(static_cast<std::size_t>(deg) + 1);
            cs[0] = unit(rng);  // nonzero constant term
            for (int j = 1; j < deg; ++j) cs[static_cast<std::size_t>(j)] = any(rng);
            cs[static_cast<std::size_t>(deg)] = unit(rng);  // nonzero lead
            long o = outr(rng);
            if (o == 0) o = 1;
            fs.push_back(FeFactor{DensePoly(F, cs), BigNat(innr(rng)), BigInt(o)});
        }
        FactoredExpr e = FactoredExpr::make(F, unit(rng), BigInt(texp(rng)),
                                            std::move(fs));
        auto bound = fe_degree_bound(e);
        if (bound.has_value() && *bound <= 1500) return e;
    }
}

// A pair of spellings of the same function: identical copy, split outer
// exponent, Frobenius move between inner and outer, monomial composition via
// the inner exponent, or a unit folded between the base and the coefficient.
std::pair<FactoredExpr, FactoredExpr> equal_pair(const PrimeField& F,
                                                 const FactoredExpr& e,
                                                 std::mt19937_64& rng) {
    std::vector<FeFactor> fs = e.factors();
    if (fs.empty()) return {e, e};
    std::uniform_int_distribution<int> kindd(0, 4);
    std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
    std::size_t j = pick(rng);
    switch (kindd(rng)) {
        case 1: {
            if (fs[j].outer == 1 || fs[j].outer == -1) return {e, e};
            BigInt sgn = fs[j].outer > 0 ? 1 : -1;
            std::vector<FeFactor> alt = fs;
            alt[j].outer = fs[j].outer - sgn;
            alt.push_back(FeFactor{fs[j].base, fs[j].inner, sgn});
            return {e, FactoredExpr::make(F, e.coeff(), e.t_exp(), std::move(alt))};
        }
        case 2: {
            std::vector<FeFactor> L = fs, R = fs;
            L[j].outer = fs[j].outer * static_cast<long>(F.p());
            R[j].inner = fs[j].inner * F.p();
            return {FactoredExpr::make(F, e.coeff(), e.t_exp(), std::move(L)),
                    FactoredExpr::make(F, e.coeff(), e.t_exp(), std::move(R))};
        }
        case 3: {
            std::uniform_int_distribution<unsigned> sd(2, 3);
            unsigned s = sd(rng);
            std::vector<FeFactor> L = fs, R = fs;
            L[j].inner = fs[j].inner * s;
            R[j].base = fs[j].base.compose_monomial(s);
            return {FactoredExpr::make(F, e.coeff(), e.t_exp(), std::move(L)),
                    FactoredExpr::make(F, e.coeff(), e.t_exp(), std::move(R))};
        }
        case 4: {
            if (!(fs[j].outer >= 1 && fs[j].outer <= 6)) return {e, e};
            std::uniform_int_distribution<fp_t> ud(2, F.p() - 1);
            fp_t u = ud(rng);
            unsigned long o = fs[j].outer.get_ui();
            fp_t uo = 1;
            for (unsigned long i = 0; i < o; ++i) uo = F.mul(uo, u);
            std::vector<FeFactor> R = fs;
            R[j].base = fs[j].base.scaled(u);
            return {e, FactoredExpr::make(F, F.mul(e.coeff(), F.inv(uo)),
                                          e.t_exp(), std::move(R))};
        }
        default:
            return {e, e};
    }
}

// A nearby but different function: the unit, the valuation, or one factor's
// exponent is changed, each of which provably changes the value.
FactoredExpr perturb(const PrimeField& F, const FactoredExpr& e,
                     std::mt19937_64& rng) {
    std::vector<FeFactor> fs = e.factors();
    std::uniform_int_distribution<int> kindd(0, fs.empty() ? 1 : 2);
    switch (kindd(rng)) {
        case 0: {
            std::uniform_int_distribution<fp_t> w(2, F.p() - 1);
            return FactoredExpr::make(F, F.mul(e.coeff(), w(rng)), e.t_exp(),
                                      std::move(fs));
        }
        case 1:
            return FactoredExpr::make(F, e.coeff(),
                                      e.t_exp() + ((rng() & 1) ? 1 : -1),
                                      std::move(fs));
        default: {
            std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
            std::size_t j = pick(rng);
            fs[j].outer += 1;
            if (fs[j].outer == 0) fs[j].outer = 1;
            return FactoredExpr::make(F, e.coeff(), e.t_exp(), std::move(fs));
        }
    }
}

// 9. Equality-engine audit over 200 constructed pairs with known ground
//    truth: dense comparison is exact; the probabilistic engine accepts all
//    equal pairs and refutes all unequal ones; the canonicalizer never
//    proves a false statement and always proves equal pairs whose expansion
//    bound is at most 4096.
void criterion_equality_audit(Checker& c) {
    PrimeField F(5);
    std::mt19937_64 rng(kDefaultSeed);
    int dense_wrong = 0, prob_wrong = 0, canon_unsound = 0, canon_missed = 0;

    for (int i = 0; i < 200; ++i) {
        FactoredExpr e = random_small_expr(F, rng);
        bool equal = (i % 2 == 0);
        FactoredExpr lhs = e, rhs = e;
        if (equal) {
            auto pr = equal_pair(F, e, rng);
            lhs = pr.first;
            rhs = pr.second;
        } else {
            rhs = perturb(F, e, rng);
        }

        Verdict dv = fe_eq(lhs, rhs, kDense).verdict;
        if (dv != (equal ? Verdict::ProvenEqual : Verdict::ProvenUnequal))
            ++dense_wrong;

        VerificationResult pv = fe_eq(lhs, rhs, kProbabilistic);
        if (equal ? !pv.equal_verdict()
                  : pv.verdict != Verdict::ProvenUnequal)
            ++prob_wrong;

        Verdict cv = fe_eq(lhs, rhs, kCanonical).verdict;
        if ((cv == Verdict::ProvenEqual && !equal) ||
            (cv == Verdict::ProvenUnequal && equal))
            ++canon_unsound;
        if (equal) {
            auto bl = fe_degree_bound(lhs), br = fe_degree_bound(rhs);
            bool small = bl.has_value() && br.has_value() &&
                         *bl <= kCanonicalCompleteBound &&
                         *br <= kCanonicalCompleteBound;
            if (small && cv != Verdict::ProvenEqual) ++canon_missed;
        }
    }
    c.is(dense_wrong == 0,
         std::to_string(dense_wrong) + " dense verdicts disagree with ground truth");
    c.is(prob_wrong == 0,
         std::to_string(prob_wrong) + " probabilistic verdicts are wrong");
    c.is(canon_unsound == 0,
         std::to_string(canon_unsound) + " canonical verdicts are unsound");
    c.is(canon_missed == 0,
         std::to_string(canon_missed) +
             " small equal pairs not proven canonically");
}

// 10. Curve invariants: genus r and quotient genus (r+1)/2.
void criterion_genus_values(Checker& c) {
    PrimeField F(11);
    for (std::uint64_t r : {3ull, 5ull, 7ull}) {
        CurveModel cu =
            make_theorem_curve(F, r, FactoredExpr::monomial(F, 1, BigInt(12)));
        c.is(genus(cu) == r, "genus != r at r = " + std::to_string(r));
        c.is(quotient_genus(cu) == (r + 1) / 2,
             "quotient genus != (r+1)/2 at r = " + std::to_string(r));
    }
}

// 11. The degree-2 cover (x, y) -> (x^r, x^((r-1)/2) y) carries every
//     growth-table point onto the exponent-2 quotient curve.
void criterion_quotient_cover(Checker& c) {
    for (const auto& [n, rep] : growth_sets()) {
        for (const CurvePoint& pt : rep.points) {
            CurvePoint img = legendre_cover(pt);
            c.is(curve_family_name(img.curve) == std::string("kummer"),
                 "cover image is not on a kummer curve");
            c.is(curve_exponent(img.curve) == 2,
                 "cover image curve exponent is not 2");
            c.is(is_on_curve(img, kCanonical).verdict == Verdict::ProvenEqual,
                 "cover image is off the quotient curve at n = " +
                     std::to_string(n));
        }
    }
}

}  // namespace

int main() {
    struct Item {
        const char* name;
        void (*fn)(Checker&);
    };
    const Item items[] = {
        {"construction-identity", criterion_construction_identity},
        {"search-agreement", criterion_search_agreement},
        {"growth-table", criterion_growth_table},
        {"involution-action", criterion_involution_action},
        {"divisibility-obstructions", criterion_divisibility_obstructions},
        {"palindromic-construction", criterion_palindromic_construction},
        {"lte-valuations", criterion_lte_valuations},
        {"mutant-refutation", criterion_mutant_refutation},
        {"equality-audit", criterion_equality_audit},
        {"genus-values", criterion_genus_values},
        {"quotient-cover", criterion_quotient_cover},
    };

    int failed = 0;
    for (const Item& it : items) {
        Checker ck;
        auto t0 = std::chrono::steady_clock::now();
        try {
            it.fn(ck);
        } catch (const std::exception& e) {
            ck.problems.push_back(std::string("exception: ") + e.what());
        }
        double dt = seconds_since(t0);
        char timing[32];
        std::snprintf(timing, sizeof(timing), "(%.2fs)", dt);
        if (ck.problems.empty()) {
            std::printf("pass  %-28s %s\n", it.name, timing);
        } else {
            ++failed;
            std::string extra =
                ck.problems.size() > 1
                    ? " [+" + std::to_string(ck.problems.size() - 1) + " more]"
                    : "";
            std::printf("FAIL  %-28s %s: %s%s\n", it.name, timing,
                        ck.problems.front().c_str(), extra.c_str());
        }
    }
    std::printf("acceptance: %d/%d criteria passed\n",
                static_cast<int>(std::size(items)) - failed,
                static_cast<int>(std::size(items)));
    return failed;
}
