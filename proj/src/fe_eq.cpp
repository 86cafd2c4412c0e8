// Three-tier equality for factored expressions:
//   canonical      exact, syntactic after normal form; "differ" is not proof
//   probabilistic  Schwartz–Zippel over F_{p^k}, field sized from the degree
//                  bound so one trial fails with probability <= 2^-30 and
//                  the trial count pushes the total below 2^-60
//   dense          exact expansion, vetoed by a degree cap

#include <sstream>

#include "ffpoints/errors.hpp"
#include "ffpoints/factored_expr.hpp"

namespace ffp {

namespace {

std::string elem_to_json_array(const ExtElem& e, unsigned k) {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < k; ++i) {
        if (i) os << ",";
        os << e.coeff(i);
    }
    os << "]";
    return os.str();
}

VerificationResult canonical_compare(const FactoredExpr& a, const FactoredExpr& b,
                                     const EqOptions& opts) {
    VerificationResult r;
    r.seed = opts.seed;
    FactoredExpr ca = canonicalize(a, opts.expansion_threshold);
    FactoredExpr cb = canonicalize(b, opts.expansion_threshold);
    if (ca == cb) {
        r.verdict = Verdict::ProvenEqual;
        r.detail = "canonical forms coincide";
    } else if (ca.is_zero() != cb.is_zero()) {
        // A nonzero factored expression is a product of nonzero rational
        // functions, hence nonzero: this direction is exact.
        r.verdict = Verdict::ProvenUnequal;
        r.detail = "one side is identically zero, the other is a unit times nonzero factors";
    } else {
        r.verdict = Verdict::ProbUnequal;
        r.detail = "canonical forms differ (not a proof of inequality)";
    }
    return r;
}

VerificationResult probabilistic_compare(const FactoredExpr& a, const FactoredExpr& b,
                                         const EqOptions& opts) {
    VerificationResult r;
    r.seed = opts.seed;
    const PrimeField& F = a.field();
    if (a.is_zero() != b.is_zero()) {
        r.verdict = Verdict::ProvenUnequal;
        r.detail = "zero versus nonzero product";
        return r;
    }
    if (a.is_zero() && b.is_zero()) {
        r.verdict = Verdict::ProvenEqual;
        r.detail = "both identically zero";
        return r;
    }
    if (a.is_constant() && b.is_constant()) {
        bool eq = a.coeff() == b.coeff();
        r.verdict = eq ? Verdict::ProvenEqual : Verdict::ProvenUnequal;
        r.detail = "constant comparison";
        return r;
    }
    BigInt bound = *fe_degree_bound(a) + *fe_degree_bound(b);
    if (bound < 1) bound = 1;
    // Smallest k with p^k - 1 - 64 > bound * 2^(-eps_trial_log2).
    BigInt need = bound << static_cast<unsigned>(-opts.eps_trial_log2);
    unsigned k = 1;
    BigInt q = BigInt(static_cast<unsigned long>(F.p()));
    while (q - 1 - 64 <= need) {
        ++k;
        q *= static_cast<unsigned long>(F.p());
        if (k > opts.max_ext_degree)
            throw FieldTooLargeInfeasible(
                "sampling field would need extension degree > " +
                std::to_string(opts.max_ext_degree) + " (degree bound " +
                big_to_dec(bound) + ")");
    }
    auto E = get_ext_field(F.p(), k, opts.seed);
    r.field_p = F.p();
    r.field_k = k;
    // Exact per-trial exponent: largest s with bound * 2^s <= q - 1 - 64.
    BigInt ratio = (q - 1 - 64) / bound;
    int s = static_cast<int>(big_bits(ratio)) - 1;
    int target = -opts.eps_target_log2;
    unsigned trials = static_cast<unsigned>((target + s - 1) / s);
    if (trials < 2) trials = 2;
    std::mt19937_64 rng(derive_seed(opts.seed, 0xef1));
    for (unsigned t = 1; t <= trials; ++t) {
        ExtElem theta = E->zero();
        std::optional<ExtElem> va, vb;
        int resamples = 0;
        for (;;) {
            theta = E->sample_nonzero(rng);
            va = fe_eval(a, *E, theta);
            vb = fe_eval(b, *E, theta);
            if (va && vb) break;
            if (++resamples > 64)
                throw CapExceeded("forbidden-point resample budget exhausted");
        }
        r.trials = t;
        if (!(*va == *vb)) {
            r.verdict = Verdict::ProvenUnequal;
            std::ostringstream os;
            os << "{\"p\":" << F.p() << ",\"k\":" << k << ",\"modulus\":"
               << elem_to_json_array(E->modulus(), k + 1) << ",\"theta\":"
               << elem_to_json_array(theta, k) << ",\"lhs\":"
               << elem_to_json_array(*va, k) << ",\"rhs\":"
               << elem_to_json_array(*vb, k) << "}";
            r.witness = os.str();
            r.detail = "values differ at a sampled point";
            return r;
        }
    }
    r.verdict = Verdict::ProbEqual;
    r.eps_log2 = -(s * static_cast<int>(trials));
    std::ostringstream os;
    os << trials << " agreeing trials in F_{" << F.p() << "^" << k
       << "}, per-trial failure <= 2^-" << s;
    r.detail = os.str();
    return r;
}

VerificationResult dense_compare(const FactoredExpr& a, const FactoredExpr& b,
                                 const EqOptions& opts) {
    VerificationResult r;
    r.seed = opts.seed;
    DenseRational da = fe_to_dense(a, opts.dense_cap);
    DenseRational db = fe_to_dense(b, opts.dense_cap);
    if (da == db) {
        r.verdict = Verdict::ProvenEqual;
        r.detail = "dense expansions coincide";
    } else {
        r.verdict = Verdict::ProvenUnequal;
        std::ostringstream os;
        os << "dense expansions differ: lhs num/den degrees " << da.num.degree() << "/"
           << da.den.degree() << ", rhs " << db.num.degree() << "/" << db.den.degree();
        // find the first differing coefficient of the cross product
        DensePoly lhs = da.num * db.den, rhs = db.num * da.den;
        for (std::size_t i = 0;; ++i) {
            if (lhs.coeff(i) != rhs.coeff(i)) {
                os << "; first mismatch at t^" << i;
                break;
            }
        }
        r.detail = os.str();
    }
    return r;
}

}  // namespace

VerificationResult fe_eq(const FactoredExpr& a, const FactoredExpr& b,
                         const EqOptions& opts) {
    if (!(a.field() == b.field())) throw ParameterError("field mismatch in comparison");
    switch (opts.mode) {
        case EqMode::Canonical:
            return canonical_compare(a, b, opts);
        case EqMode::Probabilistic:
            return probabilistic_compare(a, b, opts);
        case EqMode::Dense:
            return dense_compare(a, b, opts);
        case EqMode::Auto: {
            VerificationResult r = canonical_compare(a, b, opts);
            if (r.verdict == Verdict::ProvenEqual || r.verdict == Verdict::ProvenUnequal)
                return r;
            VerificationResult pr = probabilistic_compare(a, b, opts);
            pr.detail = "canonical forms differ; " + pr.detail;
            return pr;
        }
    }
    throw ParameterError("unknown comparison mode");
}

}  // namespace ffp
