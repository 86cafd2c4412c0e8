#pragma once

// Thin helpers over GMP's C++ interface.  All multi-precision integers in
// the library are mpz_class; these wrappers exist so call sites read like
// arithmetic instead of mpz_* incantations.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "ffpoints/errors.hpp"

namespace ffp {

using BigInt = mpz_class;  // signed
using BigNat = mpz_class;  // nonnegative by convention at each use site

inline BigInt big_pow_ui(std::uint64_t base, std::uint64_t exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, static_cast<unsigned long>(exp));
    return r;
}

// Nonnegative remainder, defined for negative a as well.
inline BigInt big_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool big_divisible(const BigInt& a, const BigInt& d) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt big_divexact(const BigInt& a, const BigInt& d) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return r;
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// v_f(n) for n != 0: also returns n / f^v via the out parameter.
inline unsigned long big_remove(const BigInt& n, const BigInt& f, BigInt& reduced) {
    return static_cast<unsigned long>(
        mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), f.get_mpz_t()));
}

inline unsigned long big_valuation(const BigInt& n, std::uint64_t f) {
    BigInt reduced;
    return big_remove(n, BigInt(static_cast<unsigned long>(f)), reduced);
}

inline std::string big_to_dec(const BigInt& a) { return a.get_str(10); }

inline BigInt big_from_dec(const std::string& s) {
    BigInt r;
    if (s.empty() || mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        throw ParseError("not a decimal integer: \"" + s + "\"");
    return r;
}

inline bool big_fits_u64(const BigInt& a) {
    return sgn(a) >= 0 && mpz_sizeinbase(a.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t big_to_u64(const BigInt& a) {
    static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long expected");
    if (!big_fits_u64(a)) throw CapExceeded("integer does not fit in 64 bits: " + big_to_dec(a));
    return static_cast<std::uint64_t>(mpz_get_ui(a.get_mpz_t()));
}

inline std::size_t big_bits(const BigInt& a) {
    if (sgn(a) == 0) return 0;
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

}  // namespace ffp
