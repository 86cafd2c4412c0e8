#pragma once

// The three curve families over F_p(t), each a superelliptic model
// y^kappa = h(x) with h built from a distinguished nonconstant a in F_p[t]:
//
//   theorem      y^2 = x (x^r + 1)(x^r + a^r)          p > 3, r odd, gcd(r,p)=1
//   kummer       y^k = x (x + 1)(x + a)                k >= 2
//   palindromic  y^2 = f(x) x^(2b) f(a/x)              deg f = 2b, f squarefree,
//                                                      f(0) != 0
//
// Points carry their curve and either exact factored coordinates or dense
// rational ones.

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "ffpoints/factored_expr.hpp"

namespace ffp {

struct TheoremCurve {
    PrimeField F;
    std::uint64_t r;
    FactoredExpr a;
};

struct KummerCurve {
    PrimeField F;
    std::uint64_t k;
    FactoredExpr a;
};

struct PalindromicCurve {
    PrimeField F;
    DensePoly f;
    std::uint64_t b;  // deg f = 2b
    FactoredExpr a;
};

using CurveModel = std::variant<TheoremCurve, KummerCurve, PalindromicCurve>;

// Factories validate family constraints (InvalidFamilyParams /
// InvalidPolynomial on violation).
CurveModel make_theorem_curve(const PrimeField& F, std::uint64_t r, FactoredExpr a);
CurveModel make_kummer_curve(const PrimeField& F, std::uint64_t k, FactoredExpr a);
CurveModel make_palindromic_curve(const PrimeField& F, DensePoly f, FactoredExpr a);

const PrimeField& curve_field(const CurveModel& c);
const FactoredExpr& curve_a(const CurveModel& c);
std::uint64_t curve_exponent(const CurveModel& c);  // the kappa in y^kappa
std::string curve_family_name(const CurveModel& c);
std::string curve_equation(const CurveModel& c);

struct CurvePoint {
    CurveModel curve;
    std::variant<std::pair<FactoredExpr, FactoredExpr>,
                 std::pair<DenseRational, DenseRational>>
        coords;

    bool is_factored() const { return coords.index() == 0; }
    const FactoredExpr& xf() const { return std::get<0>(coords).first; }
    const FactoredExpr& yf() const { return std::get<0>(coords).second; }
    const DenseRational& xd() const { return std::get<1>(coords).first; }
    const DenseRational& yd() const { return std::get<1>(coords).second; }
};

CurvePoint make_point(CurveModel curve, FactoredExpr x, FactoredExpr y);
CurvePoint make_point(CurveModel curve, DenseRational x, DenseRational y);

// c1 t^e1 + c2 t^e2 as a factored expression (degree-1 base); exact.
FactoredExpr monomial_sum(const PrimeField& F, fp_t c1, const BigInt& e1, fp_t c2,
                          const BigInt& e2);

// Right-hand side h(x) with x a factored monomial (SumNotRepresentable
// otherwise; curve a must be a monomial too for the sum rules to apply).
FactoredExpr rhs_at(const CurveModel& c, const FactoredExpr& x);

// Dense right-hand side at a rational x; the cap vets expanding a.
DenseRational rhs_dense(const CurveModel& c, const DenseRational& x, const BigInt& cap);

// y^kappa == h(x), via fe_eq for factored points and exact comparison for
// dense ones.
VerificationResult is_on_curve(const CurvePoint& pt, const EqOptions& opts = {});

// sigma(x, y) = (a/x, -a^((r+1)/2) y / x^(r+1)); theorem family only,
// undefined at x = 0.
CurvePoint involution(const CurvePoint& pt);

// (x, y) -> (x^r, x^((r-1)/2) y), landing on kummer {k = 2, a' = a^r}.
CurvePoint legendre_cover(const CurvePoint& pt);

std::uint64_t genus(const CurveModel& c);           // theorem family: r
std::uint64_t quotient_genus(const CurveModel& c);  // theorem family: (r+1)/2

}  // namespace ffp
