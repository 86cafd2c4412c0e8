#pragma once

// Sparse closed forms: coeff * t^a * prod base_j(t^inner_j)^outer_j with
// arbitrary-precision exponents.  This is the representation that keeps
// towers like (t^e + 1)^((p^m+1)/2) exact when e has hundreds of digits.
//
// Invariants: coeff == 0 only for the zero expression (then no factors and
// t_exp == 0); every base has degree >= 1 and nonzero constant term; every
// inner >= 1; every outer != 0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffpoints/dense_poly.hpp"
#include "ffpoints/ext_field.hpp"

namespace ffp {

struct FeFactor {
    DensePoly base;
    BigNat inner;
    BigInt outer;
};

class FactoredExpr {
  public:
    static FactoredExpr zero(const PrimeField& F) { return FactoredExpr(F); }
    static FactoredExpr constant(const PrimeField& F, fp_t c);
    static FactoredExpr one(const PrimeField& F) { return constant(F, 1); }
    // c * t^e
    static FactoredExpr monomial(const PrimeField& F, fp_t c, BigInt t_exp);
    // Validates the invariants above; throws ParameterError.
    static FactoredExpr make(const PrimeField& F, fp_t coeff, BigInt t_exp,
                             std::vector<FeFactor> factors);
    // Splits off the t-power so the base invariant holds.
    static FactoredExpr from_poly(const DensePoly& g);

    const PrimeField& field() const { return F_; }
    fp_t coeff() const { return coeff_; }
    const BigInt& t_exp() const { return t_exp_; }
    const std::vector<FeFactor>& factors() const { return factors_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_constant() const { return factors_.empty() && sgn(t_exp_) == 0; }
    // (coeff, t_exp) when there are no polynomial factors.
    std::optional<std::pair<fp_t, BigInt>> as_monomial() const;

    bool operator==(const FactoredExpr& o) const;
    static int cmp(const FactoredExpr& a, const FactoredExpr& b);

    std::string to_string(const std::string& var = "t") const;

  private:
    explicit FactoredExpr(const PrimeField& F) : F_(F), coeff_(0), t_exp_(0) {}

    PrimeField F_;
    fp_t coeff_;
    BigInt t_exp_;
    std::vector<FeFactor> factors_;
};

FactoredExpr fe_mul(const FactoredExpr& a, const FactoredExpr& b);
FactoredExpr fe_scale(const FactoredExpr& a, fp_t c);
// a^e; 0^0 = 1, 0^e = 0 for e > 0, negative powers of zero throw.
FactoredExpr fe_pow(const FactoredExpr& a, const BigInt& e);

inline constexpr std::uint64_t kDefaultExpansionThreshold = 4096;

// Normal form: monic bases, support-gcd decimation, Frobenius reduction of
// the inner exponent, dense splitting of small expansions, merge, sort.
// Equal functions whose expansions stay within the threshold canonicalize
// identically; beyond it the form is reduced but not a decision procedure.
FactoredExpr canonicalize(const FactoredExpr& a,
                          std::uint64_t expansion_threshold = kDefaultExpansionThreshold);

// k-th root visible in the canonical factored form: requires the unit, t
// exponent, and every outer exponent to divide.  Throws DivisibilityError
// naming the obstruction otherwise.
FactoredExpr fe_kth_root(const FactoredExpr& a, std::uint64_t k);

// max(deg num, deg den) bound for the expression as a rational function;
// nullopt for zero.
std::optional<BigInt> fe_degree_bound(const FactoredExpr& a);

// Expand to an exact reduced rational function; CapExceeded if the degree
// bound tops the cap.
DenseRational fe_to_dense(const FactoredExpr& a, const BigInt& cap);

// Value at theta in F_{p^k} (theta nonzero); nullopt when theta hits a pole.
std::optional<ExtElem> fe_eval(const FactoredExpr& a, const ExtField& E,
                               const ExtElem& theta);

// ---- equality verdicts ----

enum class Verdict { ProvenEqual, ProbEqual, ProvenUnequal, ProbUnequal };

const char* verdict_name(Verdict v);

struct VerificationResult {
    Verdict verdict;
    std::optional<int> eps_log2;  // ProbEqual: log2 of the failure bound
    std::string detail;
    std::optional<std::string> witness;  // serialized disagreeing sample
    std::uint64_t seed = 0;
    unsigned trials = 0;
    std::uint64_t field_p = 0;
    unsigned field_k = 0;

    bool equal_verdict() const {
        return verdict == Verdict::ProvenEqual || verdict == Verdict::ProbEqual;
    }
};

enum class EqMode { Canonical, Probabilistic, Dense, Auto };

struct EqOptions {
    EqMode mode = EqMode::Auto;
    int eps_target_log2 = -60;  // overall false-equal bound
    int eps_trial_log2 = -30;   // per-trial bound used to size the field
    BigInt dense_cap = 1000000;
    std::uint64_t seed = kDefaultSeed;
    unsigned max_ext_degree = 4096;
    std::uint64_t expansion_threshold = kDefaultExpansionThreshold;
};

VerificationResult fe_eq(const FactoredExpr& a, const FactoredExpr& b,
                         const EqOptions& opts = {});

}  // namespace ffp
