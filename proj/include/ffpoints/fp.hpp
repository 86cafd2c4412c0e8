#pragma once

// Arithmetic in F_p for machine-word p.  Elements are plain uint64_t values
// in [0, p); the field object carries p and the operations.  Exponents may
// be arbitrary-precision: for nonzero bases they reduce mod p-1.

#include <cstdint>
#include <vector>

#include "ffpoints/bigint.hpp"
#include "ffpoints/errors.hpp"

namespace ffp {

using fp_t = std::uint64_t;

bool is_prime_u64(std::uint64_t n);

class PrimeField {
  public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    fp_t from_int(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<fp_t>(m);
    }
    fp_t add(fp_t a, fp_t b) const {
        fp_t s = a + b;  // p < 2^63 so no overflow
        return s >= p_ ? s - p_ : s;
    }
    fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p_ - b; }
    fp_t neg(fp_t a) const { return a == 0 ? 0 : p_ - a; }
    fp_t mul(fp_t a, fp_t b) const {
        return static_cast<fp_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    fp_t inv(fp_t a) const;
    fp_t pow(fp_t a, std::uint64_t e) const;
    // Negative e allowed for nonzero a; 0^0 = 1, 0^e = 0 for e > 0,
    // and 0 with e < 0 throws.
    fp_t pow_big(fp_t a, const BigInt& e) const;

  private:
    std::uint64_t p_;
};

// true iff c is in the image of x -> x^k on F_p^* (c nonzero).
bool is_kth_power_residue(fp_t c, std::uint64_t k, const PrimeField& F);

// Smallest x with x^k = c, c nonzero; throws NotAResidue when none exists.
fp_t kth_root_in_fp(fp_t c, std::uint64_t k, const PrimeField& F);

// All solutions of z^k = 1, sorted ascending.  Size gcd(k, p-1).
std::vector<fp_t> kth_roots_of_unity(std::uint64_t k, const PrimeField& F);

}  // namespace ffp
