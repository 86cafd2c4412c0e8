#include "ffpoints/construct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ffpoints/errors.hpp"

namespace ffp {

std::vector<std::uint64_t> odd_quotient_divisors(std::uint64_t n) {
    if (n == 0) throw PrecondViolation("n must be >= 1");
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= n; ++m) {
        if (n % m == 0 && ((n / m) % 2 == 1)) out.push_back(m);
    }
    return out;
}

ConstructionParams make_params(std::uint64_t p, std::uint64_t n, std::uint64_t m) {
    if (!is_prime_u64(p)) throw ParameterError("p must be prime");
    if (n == 0 || m == 0) throw OddQuotientViolation("n and m must be >= 1");
    if (n % m != 0 || ((n / m) % 2 == 0))
        throw OddQuotientViolation("m = " + std::to_string(m) +
                                   " must divide n = " + std::to_string(n) +
                                   " with odd quotient");
    ConstructionParams cp;
    cp.p = p;
    cp.n = n;
    cp.m = m;
    cp.d = big_pow_ui(p, n) + 1;
    cp.d_prime = big_pow_ui(p, m) + 1;
    if (!big_divisible(cp.d, cp.d_prime))
        throw PrecondViolation("internal: d' does not divide d");
    cp.e = big_divexact(cp.d, cp.d_prime);
    return cp;
}

GeneratedPoint theorem_point(std::uint64_t p, std::uint64_t r, std::uint64_t n,
                             std::uint64_t m) {
    ConstructionParams cp = make_params(p, n, m);
    PrimeField F(p);
    CurveModel curve = make_theorem_curve(F, r, FactoredExpr::monomial(F, 1, cp.d));
    FactoredExpr x = FactoredExpr::monomial(F, 1, cp.e);
    // y = t^(e(r+1)/2) * (t^(re) + 1)^(d'/2)
    DensePoly base(F, {1, 1});
    BigInt half_dp = big_divexact(cp.d_prime, BigInt(2));
    FactoredExpr y = FactoredExpr::make(
        F, 1, cp.e * static_cast<unsigned long>((r + 1) / 2),
        {{std::move(base), cp.e * static_cast<unsigned long>(r), half_dp}});
    GeneratedPoint gp{make_point(std::move(curve), std::move(x), std::move(y)), cp, "", {}};
    std::ostringstream os;
    os << "x = t^e, y = t^(e(r+1)/2) (t^(re)+1)^(d'/2) with d = p^" << n
       << "+1, d' = p^" << m << "+1, e = d/d'";
    gp.note = os.str();
    return gp;
}

GeneratedPoint example1_point(std::uint64_t p, std::uint64_t n, std::uint64_t m) {
    ConstructionParams cp = make_params(p, n, m);
    PrimeField F(p);
    CurveModel curve = make_kummer_curve(F, 6, FactoredExpr::monomial(F, 1, cp.d));
    FactoredExpr x = FactoredExpr::monomial(F, 1, cp.e);
    FactoredExpr rhs = rhs_at(curve, x);
    FactoredExpr y = fe_kth_root(rhs, 6);
    GeneratedPoint gp{make_point(std::move(curve), std::move(x), std::move(y)), cp, "", {}};
    gp.note =
        "y is the exact 6th root of x(x+1)(x+a) at x = t^e; the closed form "
        "t^e (t^e+1)^(d'/2) squares to the right-hand side instead of being its 6th root";
    if (p % 9 != 2)
        gp.warnings.push_back("p = " + std::to_string(p) +
                              " is not 2 mod 9; the 6th root may fail to exist for some m");
    return gp;
}

GeneratedPoint example2_point(std::uint64_t p, const DensePoly& f, std::uint64_t n,
                              std::uint64_t m) {
    ConstructionParams cp = make_params(p, n, m);
    PrimeField F(p);
    if (p == 2) throw InvalidFamilyParams("construction needs odd p for the exponent d'/2");
    CurveModel curve = make_palindromic_curve(F, f, FactoredExpr::monomial(F, 1, cp.d));
    std::uint64_t b = std::get<PalindromicCurve>(curve).b;
    FactoredExpr x = FactoredExpr::monomial(F, 1, cp.e);
    BigInt half_dp = big_divexact(cp.d_prime, BigInt(2));
    FactoredExpr y = FactoredExpr::make(F, 1, cp.e * static_cast<unsigned long>(b),
                                        {{f, cp.e, half_dp}});
    GeneratedPoint gp{make_point(std::move(curve), std::move(x), std::move(y)), cp, "", {}};
    gp.note = "x = t^e, y = t^(be) f(t^e)^(d'/2); f(a/x) at x = t^e equals f(t^e)^(p^m) "
              "coefficientwise";
    return gp;
}

GeneratedPoint example3_point(std::uint64_t p, std::uint64_t r, std::uint64_t n,
                              std::uint64_t m) {
    if (!is_prime_u64(r) || r == 2)
        throw InvalidFamilyParams("exponent r must be an odd prime");
    ConstructionParams cp = make_params(p, n, m);
    PrimeField F(p);
    CurveModel curve = make_kummer_curve(F, r, FactoredExpr::monomial(F, 1, cp.d));
    FactoredExpr x = FactoredExpr::monomial(F, 1, cp.e);
    FactoredExpr rhs = rhs_at(curve, x);
    FactoredExpr y = fe_kth_root(rhs, r);
    GeneratedPoint gp{make_point(std::move(curve), std::move(x), std::move(y)), cp, "", {}};
    gp.note = "y is the exact r-th root of x(x+1)(x+a) at x = t^e";
    std::uint64_t rr = r * r;
    if (p % rr != r - 1)  // p = r - 1 mod r^2
        gp.warnings.push_back("p is not r-1 mod r^2; the r-th root may fail to exist for some m");
    return gp;
}

LteCheck lte_valuation(std::uint64_t p, std::uint64_t ell, std::uint64_t k) {
    if (!is_prime_u64(p)) throw PrecondViolation("p must be prime");
    if (!is_prime_u64(ell) || ell == 2) throw PrecondViolation("ell must be an odd prime");
    if ((p + 1) % ell != 0) throw PrecondViolation("ell must divide p + 1");
    if (k == 0 || k % 2 == 0) throw PrecondViolation("k must be odd and >= 1");
    LteCheck c;
    BigInt pk = big_pow_ui(p, k) + 1;
    c.v_exact = big_valuation(pk, ell);
    c.v_predicted = big_valuation(BigInt(static_cast<unsigned long>(p + 1)), ell) +
                    big_valuation(BigInt(static_cast<unsigned long>(k)), ell);
    return c;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Theorem: return "theorem";
        case Family::Example1: return "example1";
        case Family::Example2: return "example2";
        case Family::Example3: return "example3";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "theorem") return Family::Theorem;
    if (s == "example1") return Family::Example1;
    if (s == "example2") return Family::Example2;
    if (s == "example3") return Family::Example3;
    throw ParseError("unknown family \"" + s + "\"");
}

namespace {

GeneratedPoint build_for(const PointSetOptions& o, std::uint64_t m) {
    switch (o.family) {
        case Family::Theorem: return theorem_point(o.p, o.r, o.n, m);
        case Family::Example1: return example1_point(o.p, o.n, m);
        case Family::Example2:
            if (!o.f) throw ParameterError("family example2 needs the polynomial f");
            return example2_point(o.p, *o.f, o.n, m);
        case Family::Example3: return example3_point(o.p, o.r, o.n, m);
    }
    throw ParameterError("unknown family");
}

CurveModel curve_for(const PointSetOptions& o) {
    PrimeField F(o.p);
    FactoredExpr a = FactoredExpr::monomial(F, 1, big_pow_ui(o.p, o.n) + 1);
    switch (o.family) {
        case Family::Theorem: return make_theorem_curve(F, o.r, std::move(a));
        case Family::Example1: return make_kummer_curve(F, 6, std::move(a));
        case Family::Example2:
            if (!o.f) throw ParameterError("family example2 needs the polynomial f");
            return make_palindromic_curve(F, *o.f, std::move(a));
        case Family::Example3:
            if (!is_prime_u64(o.r) || o.r == 2)
                throw InvalidFamilyParams("exponent r must be an odd prime");
            return make_kummer_curve(F, o.r, std::move(a));
    }
    throw ParameterError("unknown family");
}

}  // namespace

PointSetReport point_set(const PointSetOptions& opts) {
    if (opts.include_involutions && opts.family != Family::Theorem)
        throw NotSupported("involution closure applies to the hyperelliptic family");
    std::vector<std::uint64_t> ms = odd_quotient_divisors(opts.n);
    PrimeField F(opts.p);
    PointSetReport report{curve_for(opts), ms.size(), {}, {}, {}, {}, {}, BigNat(0)};
    std::vector<fp_t> unities =
        kth_roots_of_unity(curve_exponent(report.curve), F);
    std::vector<std::pair<CurvePoint, PointProvenance>> staged;

    for (std::uint64_t m : ms) {
        std::optional<GeneratedPoint> gp;
        try {
            gp = build_for(opts, m);
        } catch (const DivisibilityError& e) {
            report.skipped.push_back({m, e.what()});
            continue;
        }
        for (const auto& w : gp->warnings)
            if (std::find(report.warnings.begin(), report.warnings.end(), w) ==
                report.warnings.end())
                report.warnings.push_back(w);
        report.valid_m.push_back(m);
        std::vector<std::pair<CurvePoint, bool>> bases;
        bases.emplace_back(gp->point, false);
        if (opts.include_involutions) bases.emplace_back(involution(gp->point), true);
        // deterministic order: m, then unity (sign), then sigma flag
        if (opts.include_negations) {
            for (fp_t z : unities) {
                for (auto& [bp, sig] : bases) {
                    CurvePoint q = make_point(bp.curve, bp.xf(), fe_scale(bp.yf(), z));
                    staged.emplace_back(std::move(q), PointProvenance{m, z, sig});
                }
            }
        } else {
            for (auto& [bp, sig] : bases)
                staged.emplace_back(bp, PointProvenance{m, 1, sig});
        }
    }
    // canonicalize coordinates and drop duplicates, keeping first occurrence
    std::vector<std::pair<FactoredExpr, FactoredExpr>> seen;
    for (auto& [pt, prov] : staged) {
        FactoredExpr cx = canonicalize(pt.xf());
        FactoredExpr cy = canonicalize(pt.yf());
        bool dup = false;
        for (const auto& [sx, sy] : seen) {
            if (sx == cx && sy == cy) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        seen.emplace_back(cx, cy);
        auto db = fe_degree_bound(cx);
        if (db && *db > report.max_x_degree) report.max_x_degree = *db;
        report.points.push_back(make_point(pt.curve, std::move(cx), std::move(cy)));
        report.provenance.push_back(prov);
    }
    return report;
}

std::vector<TableRow> unboundedness_table(std::uint64_t p, std::uint64_t r,
                                          const std::vector<std::uint64_t>& ns) {
    std::vector<TableRow> rows;
    for (std::uint64_t n : ns) {
        PointSetOptions o;
        o.family = Family::Theorem;
        o.p = p;
        o.r = r;
        o.n = n;
        o.include_negations = true;
        PointSetReport plain = point_set(o);
        o.include_involutions = true;
        PointSetReport with_inv = point_set(o);
        rows.push_back(TableRow{n, plain.tau_odd, plain.points.size(),
                                with_inv.points.size(), with_inv.max_x_degree});
    }
    return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,tau_odd,points,points_with_involution,max_x_degree\n";
    for (const auto& row : rows) {
        os << row.n << "," << row.tau_odd << "," << row.points << ","
           << row.points_with_involution << "," << big_to_dec(row.max_x_degree) << "\n";
    }
    return os.str();
}

}  // namespace ffp
