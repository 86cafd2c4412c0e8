#pragma once

// F_{p^k} as F_p[x] mod a monic irreducible of degree k.  Elements are
// DensePoly values of degree < k over the base field.  The modulus search is
// seeded and the chosen seed is recorded, so a (p, k, seed) triple pins the
// field presentation exactly.

#include <cstdint>
#include <memory>

#include "ffpoints/dense_poly.hpp"
#include "ffpoints/rng.hpp"

namespace ffp {

using ExtElem = DensePoly;

class ExtField {
  public:
    // Searches monic degree-k candidates with a seeded generator until the
    // irreducibility oracle accepts one.
    ExtField(std::uint64_t p, unsigned k, std::uint64_t seed = kDefaultSeed);

    const PrimeField& base() const { return F_; }
    std::uint64_t p() const { return F_.p(); }
    unsigned k() const { return k_; }
    std::uint64_t seed() const { return seed_; }
    const DensePoly& modulus() const { return mod_; }
    const BigInt& order() const { return order_; }              // p^k
    const BigInt& unit_order() const { return unit_order_; }    // p^k - 1

    ExtElem zero() const { return DensePoly::zero(F_); }
    ExtElem one() const { return DensePoly::one(F_); }
    ExtElem from_base(fp_t c) const { return DensePoly::constant(F_, c); }
    ExtElem reduce(const DensePoly& a) const { return a.mod(mod_); }

    ExtElem add(const ExtElem& a, const ExtElem& b) const { return a + b; }
    ExtElem sub(const ExtElem& a, const ExtElem& b) const { return a - b; }
    ExtElem neg(const ExtElem& a) const { return -a; }
    ExtElem mul(const ExtElem& a, const ExtElem& b) const { return (a * b).mod(mod_); }
    ExtElem inv(const ExtElem& a) const;
    // Exponent reduced mod p^k - 1 for nonzero bases; negative exponents
    // invert.  0^0 = 1, 0^e = 0 for e > 0, negative power of 0 throws.
    ExtElem pow_big(const ExtElem& a, const BigInt& e) const;

    // g(theta) for g with F_p coefficients.
    ExtElem eval_poly(const DensePoly& g, const ExtElem& theta) const;

    ExtElem sample(std::mt19937_64& rng) const;
    ExtElem sample_nonzero(std::mt19937_64& rng) const;

  private:
    PrimeField F_;
    unsigned k_;
    std::uint64_t seed_;
    DensePoly mod_;
    BigInt order_, unit_order_;
};

// Process-wide cache keyed by (p, k, seed); building big fields is costly.
std::shared_ptr<const ExtField> get_ext_field(std::uint64_t p, unsigned k,
                                              std::uint64_t seed);

}  // namespace ffp
