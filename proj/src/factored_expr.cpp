#include "ffpoints/factored_expr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ffpoints/errors.hpp"

namespace ffp {

FactoredExpr FactoredExpr::constant(const PrimeField& F, fp_t c) {
    FactoredExpr e(F);
    e.coeff_ = c % F.p();
    return e;
}

FactoredExpr FactoredExpr::monomial(const PrimeField& F, fp_t c, BigInt t_exp) {
    FactoredExpr e(F);
    e.coeff_ = c % F.p();
    if (e.coeff_ != 0) e.t_exp_ = std::move(t_exp);
    return e;
}

FactoredExpr FactoredExpr::make(const PrimeField& F, fp_t coeff, BigInt t_exp,
                                std::vector<FeFactor> factors) {
    if (coeff >= F.p()) throw ParameterError("coefficient out of field range");
    if (coeff == 0) {
        if (sgn(t_exp) != 0 || !factors.empty())
            throw ParameterError("zero expression must have no exponent or factors");
        return zero(F);
    }
    for (const auto& f : factors) {
        if (!(f.base.field() == F)) throw ParameterError("factor base over wrong field");
        if (f.base.degree() < 1) throw ParameterError("factor base must be nonconstant");
        if (f.base.constant_term() == 0)
            throw ParameterError("factor base must have nonzero constant term");
        if (sgn(f.inner) <= 0) throw ParameterError("inner exponent must be >= 1");
        if (sgn(f.outer) == 0) throw ParameterError("outer exponent must be nonzero");
    }
    FactoredExpr e(F);
    e.coeff_ = coeff;
    e.t_exp_ = std::move(t_exp);
    e.factors_ = std::move(factors);
    return e;
}

FactoredExpr FactoredExpr::from_poly(const DensePoly& g) {
    const PrimeField& F = g.field();
    if (g.is_zero()) return zero(F);
    std::size_t v = 0;
    while (g.coeff(v) == 0) ++v;
    DensePoly core(F, std::vector<fp_t>(g.coeffs().begin() + v, g.coeffs().end()));
    FactoredExpr e(F);
    e.coeff_ = 1;
    e.t_exp_ = BigInt(static_cast<unsigned long>(v));
    if (core.is_constant()) {
        e.coeff_ = core.constant_term();
    } else {
        e.factors_.push_back({core, BigInt(1), BigInt(1)});
    }
    return e;
}

std::optional<std::pair<fp_t, BigInt>> FactoredExpr::as_monomial() const {
    if (!factors_.empty()) return std::nullopt;
    return std::make_pair(coeff_, t_exp_);
}

static int cmp_big(const BigInt& a, const BigInt& b) {
    return mpz_cmp(a.get_mpz_t(), b.get_mpz_t());
}

static int cmp_factor(const FeFactor& x, const FeFactor& y) {
    int c = DensePoly::cmp(x.base, y.base);
    if (c != 0) return c;
    c = cmp_big(x.inner, y.inner);
    if (c != 0) return c;
    return cmp_big(x.outer, y.outer);
}

int FactoredExpr::cmp(const FactoredExpr& a, const FactoredExpr& b) {
    if (a.coeff_ != b.coeff_) return a.coeff_ < b.coeff_ ? -1 : 1;
    int c = cmp_big(a.t_exp_, b.t_exp_);
    if (c != 0) return c;
    if (a.factors_.size() != b.factors_.size())
        return a.factors_.size() < b.factors_.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
        c = cmp_factor(a.factors_[i], b.factors_[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool FactoredExpr::operator==(const FactoredExpr& o) const {
    return F_ == o.F_ && cmp(*this, o) == 0;
}

std::string FactoredExpr::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool lead = false;
    if (coeff_ != 1 || (sgn(t_exp_) == 0 && factors_.empty())) {
        os << coeff_;
        lead = true;
    }
    if (sgn(t_exp_) != 0) {
        if (lead) os << "*";
        os << var;
        if (t_exp_ != 1) os << "^" << big_to_dec(t_exp_);
        lead = true;
    }
    for (const auto& f : factors_) {
        if (lead) os << "*";
        lead = true;
        std::string inner_var = var;
        if (f.inner != 1) {
            inner_var = var + "^" + big_to_dec(f.inner);
            if (f.base.degree() > 1) inner_var = "(" + inner_var + ")";
        }
        os << "(" << f.base.to_string(inner_var) << ")";
        if (f.outer != 1) os << "^" << big_to_dec(f.outer);
    }
    return os.str();
}

FactoredExpr fe_scale(const FactoredExpr& a, fp_t c) {
    const PrimeField& F = a.field();
    c %= F.p();
    if (c == 0 || a.is_zero()) return FactoredExpr::zero(F);
    return FactoredExpr::make(F, F.mul(a.coeff(), c), a.t_exp(), a.factors());
}

FactoredExpr fe_mul(const FactoredExpr& a, const FactoredExpr& b) {
    const PrimeField& F = a.field();
    if (!(F == b.field())) throw ParameterError("field mismatch in multiplication");
    if (a.is_zero() || b.is_zero()) return FactoredExpr::zero(F);
    std::vector<FeFactor> fs = a.factors();
    fs.insert(fs.end(), b.factors().begin(), b.factors().end());
    return FactoredExpr::make(F, F.mul(a.coeff(), b.coeff()), a.t_exp() + b.t_exp(),
                              std::move(fs));
}

FactoredExpr fe_pow(const FactoredExpr& a, const BigInt& e) {
    const PrimeField& F = a.field();
    if (sgn(e) == 0) return FactoredExpr::one(F);
    if (a.is_zero()) {
        if (sgn(e) < 0) throw PrecondViolation("negative power of the zero expression");
        return a;
    }
    std::vector<FeFactor> fs = a.factors();
    for (auto& f : fs) f.outer *= e;
    return FactoredExpr::make(F, F.pow_big(a.coeff(), e), a.t_exp() * e, std::move(fs));
}

FactoredExpr canonicalize(const FactoredExpr& a, std::uint64_t expansion_threshold) {
    const PrimeField& F = a.field();
    if (a.is_zero()) return a;
    std::uint64_t p = F.p();
    fp_t coeff = a.coeff();
    BigInt t_exp = a.t_exp();
    std::vector<FeFactor> work = a.factors();
    BigInt thr(static_cast<unsigned long>(expansion_threshold));
    // Bases already seen to expand to a single irreducible; keyed by the
    // coefficient vector and inner exponent so later passes skip them.
    std::set<std::pair<std::vector<fp_t>, BigInt>> atomic;

    for (int pass = 0;; ++pass) {
        if (pass > 64) throw PrecondViolation("canonicalization did not stabilize");
        bool changed = false;
        std::vector<FeFactor> out;
        out.reserve(work.size());
        for (FeFactor f : work) {
            if (sgn(f.outer) == 0) {
                changed = true;
                continue;
            }
            if (f.base.is_constant()) {  // can appear after merges of inputs
                coeff = F.mul(coeff, F.pow_big(f.base.constant_term(), f.outer));
                changed = true;
                continue;
            }
            if (f.base.lc() != 1) {
                auto [m, l] = f.base.monic();
                coeff = F.mul(coeff, F.pow_big(l, f.outer));
                f.base = m;
                changed = true;
            }
            std::uint64_t s = f.base.support_gcd();
            if (s > 1) {
                f.base = f.base.decimate(s);
                f.inner *= static_cast<unsigned long>(s);
                changed = true;
            }
            if (f.inner > 1) {
                BigInt reduced;
                unsigned long v = big_remove(f.inner, BigInt(static_cast<unsigned long>(p)), reduced);
                if (v > 0) {
                    f.inner = reduced;
                    f.outer *= big_pow_ui(p, v);
                    changed = true;
                }
            }
            BigInt width = BigInt(static_cast<long>(f.base.degree())) * f.inner;
            if (width <= thr && !atomic.count({f.base.coeffs(), f.inner})) {
                DensePoly expanded = f.base.compose_monomial(big_to_u64(f.inner));
                FactoredPoly fac = factor_poly(expanded);
                bool splits = fac.factors.size() > 1 || fac.factors[0].second > 1 ||
                              fac.factors[0].first != expanded;
                if (splits) {
                    changed = true;
                    for (auto& [q, mult] : fac.factors)
                        out.push_back({q, BigInt(1), f.outer * static_cast<unsigned long>(mult)});
                    continue;
                }
                atomic.insert({f.base.coeffs(), f.inner});
            }
            out.push_back(std::move(f));
        }
        std::sort(out.begin(), out.end(),
                  [](const FeFactor& x, const FeFactor& y) { return cmp_factor(x, y) < 0; });
        std::vector<FeFactor> merged;
        for (auto& f : out) {
            if (!merged.empty() && merged.back().base == f.base &&
                merged.back().inner == f.inner) {
                merged.back().outer += f.outer;
                changed = true;
            } else {
                merged.push_back(std::move(f));
            }
        }
        std::erase_if(merged, [&changed](const FeFactor& f) {
            if (sgn(f.outer) == 0) {
                changed = true;
                return true;
            }
            return false;
        });
        work = std::move(merged);
        if (!changed) break;
    }
    return FactoredExpr::make(F, coeff, std::move(t_exp), std::move(work));
}

FactoredExpr fe_kth_root(const FactoredExpr& a, std::uint64_t k) {
    if (k == 0) throw PrecondViolation("k must be positive");
    const PrimeField& F = a.field();
    if (k == 1) return canonicalize(a);
    FactoredExpr c = canonicalize(a);
    if (c.is_zero()) return c;
    fp_t unit_root;
    try {
        unit_root = kth_root_in_fp(c.coeff(), k, F);
    } catch (const NotAResidue&) {
        throw DivisibilityError("leading unit " + std::to_string(c.coeff()) +
                                " has no " + std::to_string(k) + "-th root in F_p");
    }
    BigInt bk(static_cast<unsigned long>(k));
    if (!big_divisible(c.t_exp(), bk))
        throw DivisibilityError("t-exponent " + big_to_dec(c.t_exp()) +
                                " not divisible by " + std::to_string(k));
    std::vector<FeFactor> fs = c.factors();
    for (auto& f : fs) {
        if (!big_divisible(f.outer, bk))
            throw DivisibilityError("factor exponent " + big_to_dec(f.outer) +
                                    " on (" + f.base.to_string() + ") not divisible by " +
                                    std::to_string(k));
        f.outer = big_divexact(f.outer, bk);
    }
    return FactoredExpr::make(F, unit_root, big_divexact(c.t_exp(), bk), std::move(fs));
}

std::optional<BigInt> fe_degree_bound(const FactoredExpr& a) {
    if (a.is_zero()) return std::nullopt;
    BigInt b = abs(a.t_exp());
    for (const auto& f : a.factors())
        b += BigInt(static_cast<long>(f.base.degree())) * f.inner * abs(f.outer);
    return b;
}

DenseRational fe_to_dense(const FactoredExpr& a, const BigInt& cap) {
    const PrimeField& F = a.field();
    if (a.is_zero()) return DenseRational::zero(F);
    auto db = fe_degree_bound(a);
    if (*db > cap)
        throw CapExceeded("dense expansion bound " + big_to_dec(*db) +
                          " exceeds cap " + big_to_dec(cap));
    DensePoly num = DensePoly::constant(F, a.coeff());
    DensePoly den = DensePoly::one(F);
    if (sgn(a.t_exp()) > 0)
        num = num.shifted(big_to_u64(a.t_exp()));
    else if (sgn(a.t_exp()) < 0)
        den = den.shifted(big_to_u64(-a.t_exp()));
    for (const auto& f : a.factors()) {
        DensePoly ex = f.base.compose_monomial(big_to_u64(f.inner));
        DensePoly pw = ex.pow(big_to_u64(abs(f.outer)));
        if (sgn(f.outer) > 0)
            num = num * pw;
        else
            den = den * pw;
    }
    return DenseRational(std::move(num), std::move(den));
}

std::optional<ExtElem> fe_eval(const FactoredExpr& a, const ExtField& E,
                               const ExtElem& theta) {
    if (theta.is_zero()) throw PrecondViolation("evaluation point must be nonzero");
    if (a.is_zero()) return E.zero();
    bool hit_zero = false;
    ExtElem acc = E.from_base(a.coeff());
    acc = E.mul(acc, E.pow_big(theta, a.t_exp()));
    for (const auto& f : a.factors()) {
        ExtElem ti = E.pow_big(theta, f.inner);
        ExtElem v = E.eval_poly(f.base, ti);
        if (v.is_zero()) {
            if (sgn(f.outer) < 0) return std::nullopt;  // pole
            hit_zero = true;
            continue;
        }
        acc = E.mul(acc, E.pow_big(v, f.outer));
    }
    if (hit_zero) return E.zero();
    return acc;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ProvenEqual: return "proven_equal";
        case Verdict::ProbEqual: return "probably_equal";
        case Verdict::ProvenUnequal: return "proven_unequal";
        case Verdict::ProbUnequal: return "probably_unequal";
    }
    return "?";
}

}  // namespace ffp
