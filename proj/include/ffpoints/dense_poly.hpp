#pragma once

// Dense univariate polynomials over F_p, coefficients lowest-degree first.
// The zero polynomial has an empty coefficient vector and degree() == -1.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffpoints/fp.hpp"

namespace ffp {

class DensePoly {
  public:
    explicit DensePoly(const PrimeField& F) : F_(F) {}
    DensePoly(const PrimeField& F, std::vector<fp_t> coeffs)
        : F_(F), c_(std::move(coeffs)) {
        trim();
    }

    static DensePoly zero(const PrimeField& F) { return DensePoly(F); }
    static DensePoly constant(const PrimeField& F, fp_t c) {
        return DensePoly(F, {c});
    }
    static DensePoly one(const PrimeField& F) { return constant(F, 1); }
    // c * t^d
    static DensePoly monomial(const PrimeField& F, fp_t c, std::size_t d);

    const PrimeField& field() const { return F_; }
    const std::vector<fp_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    fp_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    fp_t lc() const { return c_.empty() ? 0 : c_.back(); }
    fp_t constant_term() const { return coeff(0); }

    bool operator==(const DensePoly& o) const { return F_ == o.F_ && c_ == o.c_; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }
    // Total order: degree first, then coefficient vectors high-to-low.
    static int cmp(const DensePoly& a, const DensePoly& b);

    DensePoly operator+(const DensePoly& o) const;
    DensePoly operator-(const DensePoly& o) const;
    DensePoly operator-() const;
    DensePoly operator*(const DensePoly& o) const;
    DensePoly scaled(fp_t c) const;
    DensePoly shifted(std::size_t d) const;  // * t^d
    DensePoly pow(std::uint64_t e) const;

    // quotient, remainder; divisor nonzero
    std::pair<DensePoly, DensePoly> divmod(const DensePoly& d) const;
    DensePoly mod(const DensePoly& d) const { return divmod(d).second; }

    DensePoly derivative() const;
    fp_t eval(fp_t x) const;

    // g -> g(t^s), s >= 1
    DensePoly compose_monomial(std::uint64_t s) const;
    // inverse of the above; requires every nonzero exponent divisible by s
    DensePoly decimate(std::uint64_t s) const;
    // gcd of the exponents of nonzero terms of positive degree (0 for constants)
    std::uint64_t support_gcd() const;

    std::pair<DensePoly, fp_t> monic() const;  // (poly/lc, lc); zero -> (0, 0)

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimeField F_;
    std::vector<fp_t> c_;
};

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b);  // monic or zero

// base^e mod m, e arbitrary precision (used by factorization and the field
// tower); m nonconstant.
DensePoly poly_powmod(const DensePoly& base, const BigInt& e, const DensePoly& m);

// Exact k-th root: h = g^(1/k) with h^k == g, or nullopt.
std::optional<DensePoly> kth_root_exact(const DensePoly& g, std::uint64_t k);

// Largest squarefree divisor (monic up to the input's unit).
DensePoly squarefree_part(const DensePoly& g);

struct DenseRational {
    DensePoly num, den;

    // Reduces to lowest terms with monic denominator.
    DenseRational(DensePoly n, DensePoly d);
    static DenseRational from_poly(DensePoly n);
    static DenseRational zero(const PrimeField& F) {
        return from_poly(DensePoly::zero(F));
    }

    const PrimeField& field() const { return num.field(); }
    bool is_zero() const { return num.is_zero(); }
    bool is_poly() const { return den.is_one(); }

    DenseRational operator+(const DenseRational& o) const;
    DenseRational operator-(const DenseRational& o) const;
    DenseRational operator-() const;
    DenseRational operator*(const DenseRational& o) const;
    DenseRational operator/(const DenseRational& o) const;
    DenseRational pow(std::uint64_t e) const;
    DenseRational scaled(fp_t c) const;
    bool operator==(const DenseRational& o) const {
        return num == o.num && den == o.den;
    }
    std::string to_string(const std::string& var = "t") const;
};

// Exact k-th root in F_p(t): h with h^k == g, or nullopt.  Equivalent to
// testing num*den^(k-1) for a polynomial k-th power.
std::optional<DenseRational> is_kth_power_rational(const DenseRational& g,
                                                   std::uint64_t k);

// Monic irreducible factorization: g = unit * prod q_i^{e_i}, q_i monic
// irreducible sorted by cmp.  Deterministic for a fixed seed.
struct FactoredPoly {
    fp_t unit;
    std::vector<std::pair<DensePoly, unsigned>> factors;
};
FactoredPoly factor_poly(const DensePoly& g, std::uint64_t seed = 0x5eed);

bool is_irreducible(const DensePoly& g);

}  // namespace ffp
