#include "ffpoints/curves.hpp"

#include <numeric>
#include <sstream>

#include "ffpoints/errors.hpp"

namespace ffp {

namespace {

void require_nonconstant_a(const FactoredExpr& a) {
    if (a.is_zero() || canonicalize(a).is_constant())
        throw InvalidFamilyParams("a must be a nonconstant element of F_p(t)");
}

}  // namespace

CurveModel make_theorem_curve(const PrimeField& F, std::uint64_t r, FactoredExpr a) {
    if (F.p() <= 3) throw InvalidFamilyParams("family needs p > 3");
    if (r < 1 || r % 2 == 0) throw InvalidFamilyParams("r must be odd and >= 1");
    if (r % F.p() == 0) throw InvalidFamilyParams("r must be coprime to p");
    if (!(a.field() == F)) throw InvalidFamilyParams("a over wrong field");
    require_nonconstant_a(a);
    return TheoremCurve{F, r, std::move(a)};
}

CurveModel make_kummer_curve(const PrimeField& F, std::uint64_t k, FactoredExpr a) {
    if (k < 2) throw InvalidFamilyParams("exponent k must be >= 2");
    if (!(a.field() == F)) throw InvalidFamilyParams("a over wrong field");
    require_nonconstant_a(a);
    return KummerCurve{F, k, std::move(a)};
}

CurveModel make_palindromic_curve(const PrimeField& F, DensePoly f, FactoredExpr a) {
    if (!(f.field() == F)) throw InvalidPolynomial("f over wrong field");
    if (f.degree() < 2 || f.degree() % 2 != 0)
        throw InvalidPolynomial("f must have even degree 2b >= 2");
    if (f.constant_term() == 0)
        throw InvalidPolynomial("f must not vanish at 0");
    DensePoly d = f.derivative();
    if (d.is_zero() || !poly_gcd(f, d).is_one())
        throw InvalidPolynomial("f must be squarefree (distinct roots)");
    if (!(a.field() == F)) throw InvalidFamilyParams("a over wrong field");
    require_nonconstant_a(a);
    std::uint64_t b = static_cast<std::uint64_t>(f.degree()) / 2;
    return PalindromicCurve{F, std::move(f), b, std::move(a)};
}

const PrimeField& curve_field(const CurveModel& c) {
    return std::visit([](const auto& m) -> const PrimeField& { return m.F; }, c);
}

const FactoredExpr& curve_a(const CurveModel& c) {
    return std::visit([](const auto& m) -> const FactoredExpr& { return m.a; }, c);
}

std::uint64_t curve_exponent(const CurveModel& c) {
    if (const auto* k = std::get_if<KummerCurve>(&c)) return k->k;
    return 2;
}

std::string curve_family_name(const CurveModel& c) {
    switch (c.index()) {
        case 0: return "theorem";
        case 1: return "kummer";
        default: return "palindromic";
    }
}

std::string curve_equation(const CurveModel& c) {
    std::ostringstream os;
    if (const auto* t = std::get_if<TheoremCurve>(&c)) {
        os << "y^2 = x(x^" << t->r << " + 1)(x^" << t->r << " + a^" << t->r
           << "),  a = " << t->a.to_string();
    } else if (const auto* k = std::get_if<KummerCurve>(&c)) {
        os << "y^" << k->k << " = x(x + 1)(x + a),  a = " << k->a.to_string();
    } else {
        const auto& pc = std::get<PalindromicCurve>(c);
        os << "y^2 = f(x) x^" << 2 * pc.b << " f(a/x),  f = " << pc.f.to_string("x")
           << ",  a = " << pc.a.to_string();
    }
    return os.str();
}

CurvePoint make_point(CurveModel curve, FactoredExpr x, FactoredExpr y) {
    const PrimeField& F = curve_field(curve);
    if (!(x.field() == F) || !(y.field() == F))
        throw ParameterError("point coordinates over wrong field");
    return CurvePoint{std::move(curve), std::make_pair(std::move(x), std::move(y))};
}

CurvePoint make_point(CurveModel curve, DenseRational x, DenseRational y) {
    const PrimeField& F = curve_field(curve);
    if (!(x.field() == F) || !(y.field() == F))
        throw ParameterError("point coordinates over wrong field");
    return CurvePoint{std::move(curve), std::make_pair(std::move(x), std::move(y))};
}

FactoredExpr monomial_sum(const PrimeField& F, fp_t c1, const BigInt& e1, fp_t c2,
                          const BigInt& e2) {
    if (c1 == 0) return FactoredExpr::monomial(F, c2, e2);
    if (c2 == 0) return FactoredExpr::monomial(F, c1, e1);
    if (e1 == e2) return FactoredExpr::monomial(F, F.add(c1, c2), e1);
    fp_t lo_c = c1, hi_c = c2;
    BigInt lo_e = e1, hi_e = e2;
    if (e2 < e1) {
        std::swap(lo_c, hi_c);
        std::swap(lo_e, hi_e);
    }
    BigInt delta = hi_e - lo_e;
    DensePoly base(F, {lo_c, hi_c});
    return FactoredExpr::make(F, 1, lo_e, {{std::move(base), std::move(delta), BigInt(1)}});
}

namespace {

std::pair<fp_t, BigInt> monomial_or_throw(const FactoredExpr& e, const char* what) {
    FactoredExpr c = canonicalize(e);
    auto m = c.as_monomial();
    if (!m)
        throw SumNotRepresentable(std::string(what) +
                                  " must be a monomial c*t^e for exact sum rules");
    return *m;
}

// f(c * t^E) as a factored expression; f(0) != 0, deg f >= 1.
FactoredExpr compose_f_at_monomial(const DensePoly& f, fp_t c, const BigInt& E) {
    const PrimeField& F = f.field();
    if (c == 0) return FactoredExpr::constant(F, f.constant_term());
    // g(u) = f(c u)
    std::vector<fp_t> gc(f.coeffs());
    fp_t cp = 1;
    for (std::size_t i = 1; i < gc.size(); ++i) {
        cp = F.mul(cp, c);
        gc[i] = F.mul(gc[i], cp);
    }
    DensePoly g(F, std::move(gc));
    if (sgn(E) == 0) return FactoredExpr::constant(F, g.eval(1));
    if (sgn(E) > 0)
        return FactoredExpr::make(F, 1, 0, {{std::move(g), E, BigInt(1)}});
    // E < 0: g(t^E) = t^(E deg g) * rev(g)(t^-E)
    std::vector<fp_t> rev(g.coeffs().rbegin(), g.coeffs().rend());
    DensePoly gr(F, std::move(rev));
    BigInt texp = E * static_cast<long>(g.degree());
    return FactoredExpr::make(F, 1, std::move(texp), {{std::move(gr), -E, BigInt(1)}});
}

}  // namespace

FactoredExpr rhs_at(const CurveModel& c, const FactoredExpr& x) {
    const PrimeField& F = curve_field(c);
    if (!(x.field() == F)) throw ParameterError("x over wrong field");
    if (const auto* tc = std::get_if<TheoremCurve>(&c)) {
        auto [ca, ea] = monomial_or_throw(tc->a, "a");
        if (x.is_zero()) return FactoredExpr::zero(F);
        auto [cx, ex] = monomial_or_throw(x, "x");
        BigInt r(static_cast<unsigned long>(tc->r));
        fp_t cxr = F.pow_big(cx, r);
        fp_t car = F.pow_big(ca, r);
        FactoredExpr s1 = monomial_sum(F, cxr, ex * r, 1, BigInt(0));
        FactoredExpr s2 = monomial_sum(F, cxr, ex * r, car, ea * r);
        return fe_mul(x, fe_mul(s1, s2));
    }
    if (const auto* kc = std::get_if<KummerCurve>(&c)) {
        auto [ca, ea] = monomial_or_throw(kc->a, "a");
        if (x.is_zero()) return FactoredExpr::zero(F);
        auto [cx, ex] = monomial_or_throw(x, "x");
        FactoredExpr s1 = monomial_sum(F, cx, ex, 1, BigInt(0));
        FactoredExpr s2 = monomial_sum(F, cx, ex, ca, ea);
        return fe_mul(x, fe_mul(s1, s2));
    }
    const auto& pc = std::get<PalindromicCurve>(c);
    auto [ca, ea] = monomial_or_throw(pc.a, "a");
    if (x.is_zero()) {
        // h(x) = f(x) sum_j f_j a^j x^(2b-j); at 0 only j = 2b survives.
        fp_t v = curve_field(c).mul(pc.f.constant_term(), pc.f.lc());
        return fe_scale(fe_pow(pc.a, BigInt(static_cast<unsigned long>(2 * pc.b))), v);
    }
    auto [cx, ex] = monomial_or_throw(x, "x");
    FactoredExpr fx = compose_f_at_monomial(pc.f, cx, ex);
    // a / x
    fp_t cq = F.mul(ca, F.inv(cx));
    BigInt eq = ea - ex;
    FactoredExpr fax = compose_f_at_monomial(pc.f, cq, eq);
    FactoredExpr xpow = fe_pow(x, BigInt(static_cast<unsigned long>(2 * pc.b)));
    return fe_mul(fx, fe_mul(xpow, fax));
}

DenseRational rhs_dense(const CurveModel& c, const DenseRational& x, const BigInt& cap) {
    const PrimeField& F = curve_field(c);
    if (!(x.field() == F)) throw ParameterError("x over wrong field");
    DenseRational a = fe_to_dense(curve_a(c), cap);
    DenseRational one = DenseRational::from_poly(DensePoly::one(F));
    if (const auto* tc = std::get_if<TheoremCurve>(&c)) {
        DenseRational xr = x.pow(tc->r);
        return x * (xr + one) * (xr + a.pow(tc->r));
    }
    if (std::get_if<KummerCurve>(&c)) {
        return x * (x + one) * (x + a);
    }
    const auto& pc = std::get<PalindromicCurve>(c);
    // f(x) and sum_j f_j a^j x^(2b - j), by Horner in x
    DenseRational fx = DenseRational::zero(F);
    for (std::size_t i = pc.f.coeffs().size(); i-- > 0;) {
        fx = fx * x;
        if (pc.f.coeff(i) != 0)
            fx = fx + DenseRational::from_poly(DensePoly::constant(F, pc.f.coeff(i)));
    }
    DenseRational mirror = DenseRational::zero(F);
    DenseRational apow = one;
    std::vector<DenseRational> terms;
    for (std::size_t j = 0; j < pc.f.coeffs().size(); ++j) {
        terms.push_back(apow.scaled(pc.f.coeff(j)));
        if (j + 1 < pc.f.coeffs().size()) apow = apow * a;
    }
    // mirror = sum_j terms[j] * x^(2b - j): Horner with terms[0] on top
    for (std::size_t j = 0; j < terms.size(); ++j) {
        mirror = mirror * x + terms[j];
    }
    return fx * mirror;
}

VerificationResult is_on_curve(const CurvePoint& pt, const EqOptions& opts) {
    std::uint64_t kappa = curve_exponent(pt.curve);
    if (pt.is_factored()) {
        FactoredExpr lhs = fe_pow(pt.yf(), BigInt(static_cast<unsigned long>(kappa)));
        FactoredExpr rhs = rhs_at(pt.curve, pt.xf());
        return fe_eq(lhs, rhs, opts);
    }
    VerificationResult r;
    r.seed = opts.seed;
    DenseRational lhs = pt.yd().pow(kappa);
    DenseRational rhs = rhs_dense(pt.curve, pt.xd(), opts.dense_cap);
    if (lhs == rhs) {
        r.verdict = Verdict::ProvenEqual;
        r.detail = "dense coordinates satisfy the equation exactly";
    } else {
        r.verdict = Verdict::ProvenUnequal;
        r.detail = "dense coordinates fail the equation";
    }
    return r;
}

CurvePoint involution(const CurvePoint& pt) {
    const auto* tc = std::get_if<TheoremCurve>(&pt.curve);
    if (!tc) throw NotSupported("involution is defined on the hyperelliptic family");
    const PrimeField& F = tc->F;
    BigInt half(static_cast<unsigned long>((tc->r + 1) / 2));
    BigInt rp1(static_cast<unsigned long>(tc->r + 1));
    if (pt.is_factored()) {
        if (pt.xf().is_zero()) throw NotInvertible("involution undefined at x = 0");
        FactoredExpr nx = fe_mul(tc->a, fe_pow(pt.xf(), BigInt(-1)));
        FactoredExpr factor = fe_scale(fe_pow(tc->a, half), F.neg(1));
        FactoredExpr ny = fe_mul(factor, fe_mul(pt.yf(), fe_pow(pt.xf(), -rp1)));
        return make_point(pt.curve, std::move(nx), std::move(ny));
    }
    if (pt.xd().is_zero()) throw NotInvertible("involution undefined at x = 0");
    DenseRational a = fe_to_dense(tc->a, *fe_degree_bound(tc->a));
    DenseRational nx = a / pt.xd();
    DenseRational ah = a.pow((tc->r + 1) / 2);
    DenseRational ny = -(ah * pt.yd() / pt.xd().pow(tc->r + 1));
    return make_point(pt.curve, std::move(nx), std::move(ny));
}

CurvePoint legendre_cover(const CurvePoint& pt) {
    const auto* tc = std::get_if<TheoremCurve>(&pt.curve);
    if (!tc) throw NotSupported("the covering map starts from the hyperelliptic family");
    CurveModel target = make_kummer_curve(
        tc->F, 2, fe_pow(tc->a, BigInt(static_cast<unsigned long>(tc->r))));
    std::uint64_t half = (tc->r - 1) / 2;
    if (pt.is_factored()) {
        FactoredExpr X = fe_pow(pt.xf(), BigInt(static_cast<unsigned long>(tc->r)));
        FactoredExpr Y = fe_mul(fe_pow(pt.xf(), BigInt(static_cast<unsigned long>(half))),
                                pt.yf());
        return make_point(std::move(target), std::move(X), std::move(Y));
    }
    DenseRational X = pt.xd().pow(tc->r);
    DenseRational Y = pt.xd().pow(half) * pt.yd();
    return make_point(std::move(target), std::move(X), std::move(Y));
}

std::uint64_t genus(const CurveModel& c) {
    if (const auto* tc = std::get_if<TheoremCurve>(&c)) return tc->r;
    throw NotSupported("genus formula implemented for the hyperelliptic family");
}

std::uint64_t quotient_genus(const CurveModel& c) {
    if (const auto* tc = std::get_if<TheoremCurve>(&c)) return (tc->r + 1) / 2;
    throw NotSupported("quotient genus implemented for the hyperelliptic family");
}

}  // namespace ffp
