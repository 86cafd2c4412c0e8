#include "ffpoints/fp.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace ffp {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// (prime, multiplicity) pairs by trial division; only ever called on small
// values (k-th root orders), never on p-1.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        if (n % q) continue;
        unsigned a = 0;
        while (n % q == 0) n /= q, ++a;
        out.emplace_back(q, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // This witness set is deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ull << 62)) throw ParameterError("p too large for machine-word field");
    if (!is_prime_u64(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
}

fp_t PrimeField::pow(fp_t a, std::uint64_t e) const { return powmod_u64(a, e, p_); }

fp_t PrimeField::inv(fp_t a) const {
    if (a == 0) throw PrecondViolation("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

fp_t PrimeField::pow_big(fp_t a, const BigInt& e) const {
    if (a == 0) {
        if (sgn(e) < 0) throw PrecondViolation("negative power of zero");
        return sgn(e) == 0 ? 1 % p_ : 0;
    }
    BigInt r = big_mod(e, BigInt(static_cast<unsigned long>(p_ - 1)));
    return pow(a, big_to_u64(r));
}

bool is_kth_power_residue(fp_t c, std::uint64_t k, const PrimeField& F) {
    if (c == 0) throw PrecondViolation("residue test asks for nonzero c");
    if (k == 0) throw PrecondViolation("k must be positive");
    std::uint64_t P = F.p() - 1;
    std::uint64_t g = std::gcd(k, P);
    return F.pow(c, P / g) == 1;
}

namespace {

// z of exact multiplicative order g (g | p-1), found by a deterministic
// scan of base elements.
fp_t element_of_order(std::uint64_t g, const PrimeField& F) {
    std::uint64_t P = F.p() - 1;
    auto primes = factor_small(g);
    for (fp_t x = 1; x < F.p(); ++x) {
        fp_t z = F.pow(x, P / g);
        bool ok = z != 0;
        for (auto& [ell, a] : primes) {
            (void)a;
            if (F.pow(z, g / ell) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return z;
    }
    throw PrecondViolation("no element of requested order (g must divide p-1)");
}

// One solution of x^ell = y for prime ell | p-1, assuming y is an ell-th
// power.  Adleman–Manders–Miller with a Pohlig–Hellman digit walk in the
// ell-Sylow subgroup.
fp_t amm_prime_root(fp_t y, std::uint64_t ell, const PrimeField& F) {
    std::uint64_t P = F.p() - 1;
    unsigned s = 0;
    std::uint64_t q = P;
    while (q % ell == 0) q /= ell, ++s;
    if (s == 0) {
        // ell invertible mod P: unique root.
        BigInt li;
        BigInt bl(static_cast<unsigned long>(ell)), bP(static_cast<unsigned long>(P));
        mpz_invert(li.get_mpz_t(), bl.get_mpz_t(), bP.get_mpz_t());
        return F.pow(y, big_to_u64(li));
    }
    // omega generates the ell-Sylow subgroup (order ell^s).
    fp_t rho = 0;
    for (fp_t x = 2; x < F.p(); ++x) {
        if (F.pow(x, P / ell) != 1) {
            rho = x;
            break;
        }
    }
    fp_t omega = F.pow(rho, q);
    // Digits of E with y^q = omega^E, base ell.  y an ell-th power forces
    // ell | E.
    std::uint64_t ell_pow_s = 1;
    for (unsigned i = 0; i < s; ++i) ell_pow_s *= ell;
    fp_t gamma = F.pow(omega, ell_pow_s / ell);  // order ell
    std::uint64_t E = 0;
    fp_t A = F.pow(y, q);
    std::uint64_t ell_pow = 1;
    for (unsigned j = 0; j < s; ++j) {
        fp_t probe = F.mul(A, F.inv(F.pow(omega, E)));
        probe = F.pow(probe, ell_pow_s / (ell_pow * ell));
        std::uint64_t dj = 0;
        fp_t acc = 1;
        while (acc != probe) {
            acc = F.mul(acc, gamma);
            ++dj;
            if (dj >= ell) throw PrecondViolation("discrete log digit not found");
        }
        E += dj * ell_pow;
        ell_pow *= ell;
    }
    if (E % ell != 0) throw NotAResidue("not an ell-th power in the Sylow subgroup");
    // 1 = alpha*q + beta*ell^s; x = omega^(E*alpha/ell) * y^(beta stuff).
    // Work with exponents mod P to keep everything in uint64 range.
    BigInt bl = BigInt(static_cast<unsigned long>(ell_pow_s));
    BigInt bq = BigInt(static_cast<unsigned long>(q));
    BigInt alpha, beta, gg;
    mpz_gcdext(gg.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t(), bq.get_mpz_t(), bl.get_mpz_t());
    // y = omega^(E*alpha) * y^(beta*ell^s); take the ell-th root of each part.
    BigInt e1 = big_mod(BigInt(static_cast<unsigned long>(E / ell)) * alpha,
                        BigInt(static_cast<unsigned long>(P)));
    BigInt e2 = big_mod(beta * BigInt(static_cast<unsigned long>(ell_pow_s / ell)),
                        BigInt(static_cast<unsigned long>(P)));
    fp_t x = F.mul(F.pow(omega, big_to_u64(e1)), F.pow(y, big_to_u64(e2)));
    return x;
}

bool is_power_of(fp_t c, std::uint64_t M, const PrimeField& F) {
    std::uint64_t P = F.p() - 1;
    std::uint64_t g = std::gcd(M, P);
    return F.pow(c, P / g) == 1;
}

// x with x^(ell^a) = y, assuming y is an ell^a-th power.  Between levels the
// specific root chosen matters: pick, among the ell roots, one that is still
// a power of the remaining factor.
fp_t root_prime_power(fp_t y, std::uint64_t ell, unsigned a, const PrimeField& F) {
    std::uint64_t P = F.p() - 1;
    fp_t z = y;
    for (unsigned i = 1; i <= a; ++i) {
        fp_t r0 = amm_prime_root(z, ell, F);
        std::uint64_t g = std::gcd(ell, P);  // = ell since ell | P here
        std::vector<fp_t> cands;
        if (g == ell) {
            fp_t zeta = element_of_order(ell, F);
            fp_t cur = r0;
            for (std::uint64_t j = 0; j < ell; ++j) {
                cands.push_back(cur);
                cur = F.mul(cur, zeta);
            }
        } else {
            cands.push_back(r0);
        }
        std::sort(cands.begin(), cands.end());
        std::uint64_t rest = 1;
        for (unsigned j = i; j < a; ++j) rest *= ell;
        fp_t pick = 0;
        bool found = false;
        for (fp_t cand : cands) {
            if (rest == 1 || is_power_of(cand, rest, F)) {
                pick = cand;
                found = true;
                break;
            }
        }
        if (!found) throw NotAResidue("no descendable root at prime-power level");
        z = pick;
    }
    return z;
}

}  // namespace

fp_t kth_root_in_fp(fp_t c, std::uint64_t k, const PrimeField& F) {
    if (k == 0) throw PrecondViolation("k must be positive");
    if (c == 0) return 0;
    std::uint64_t P = F.p() - 1;
    std::uint64_t kr = k % P;
    if (kr == 0) {
        // x^k = x^(k mod P) = 1 for every nonzero x.
        if (c == 1) return 1;
        throw NotAResidue("c is not a k-th power (k kills the whole group)");
    }
    std::uint64_t g = std::gcd(kr, P);
    if (F.pow(c, P / g) != 1)
        throw NotAResidue("c fails the k-th power residue criterion");
    std::uint64_t h = kr / g;
    BigInt hinv;
    BigInt bh(static_cast<unsigned long>(h)), bm(static_cast<unsigned long>(P / g));
    if (P / g == 1) {
        hinv = 0;
    } else if (mpz_invert(hinv.get_mpz_t(), bh.get_mpz_t(), bm.get_mpz_t()) == 0) {
        throw PrecondViolation("h not invertible (internal)");
    }
    fp_t y = F.pow(c, big_to_u64(hinv));
    fp_t x = y;
    for (auto& [ell, a] : factor_small(g)) x = root_prime_power(x, ell, a, F);
    // Minimize over the full solution set x * mu_g.
    fp_t best = x;
    if (g > 1) {
        fp_t zeta = element_of_order(g, F);
        fp_t cur = x;
        for (std::uint64_t j = 1; j < g; ++j) {
            cur = F.mul(cur, zeta);
            best = std::min(best, cur);
        }
    }
    return best;
}

std::vector<fp_t> kth_roots_of_unity(std::uint64_t k, const PrimeField& F) {
    if (k == 0) throw PrecondViolation("k must be positive");
    std::uint64_t P = F.p() - 1;
    if (P == 0) return {1};  // p = 2
    std::uint64_t g = std::gcd(k, P);
    fp_t zeta = g == 1 ? 1 : element_of_order(g, F);
    std::vector<fp_t> out;
    fp_t cur = 1;
    for (std::uint64_t j = 0; j < g; ++j) {
        out.push_back(cur);
        cur = F.mul(cur, zeta);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ffp
