// Cantor–Zassenhaus factorization over F_p: squarefree split, then
// distinct-degree, then equal-degree.  Deterministic for a fixed seed.

#include <algorithm>

#include "ffpoints/dense_poly.hpp"
#include "ffpoints/rng.hpp"

namespace ffp {

namespace {

DensePoly x_poly(const PrimeField& F) { return DensePoly(F, {0, 1}); }

// (factor, multiplicity) pairs with the factors squarefree and pairwise
// coprime; input monic nonconstant.
std::vector<std::pair<DensePoly, unsigned>> squarefree_split(const DensePoly& f0) {
    const PrimeField& F = f0.field();
    std::uint64_t p = F.p();
    std::vector<std::pair<DensePoly, unsigned>> out;
    DensePoly f = f0;
    DensePoly d = f.derivative();
    DensePoly c = d.is_zero() ? f : poly_gcd(f, d);
    DensePoly w = f.divmod(c).first;
    unsigned i = 1;
    while (!w.is_one()) {
        DensePoly y = poly_gcd(w, c);
        DensePoly z = w.divmod(y).first;
        if (!z.is_one()) out.emplace_back(z, i);
        ++i;
        c = c.divmod(y).first;
        w = std::move(y);
    }
    if (!c.is_one()) {
        for (auto& [q, m] : squarefree_split(c.decimate(p)))
            out.emplace_back(q, m * static_cast<unsigned>(p));
    }
    return out;
}

// (product-of-irreducibles, degree) pairs; input monic squarefree.
std::vector<std::pair<DensePoly, std::size_t>> distinct_degree(const DensePoly& f0) {
    const PrimeField& F = f0.field();
    std::vector<std::pair<DensePoly, std::size_t>> out;
    DensePoly f = f0;
    DensePoly h = x_poly(F).mod(f);
    BigInt p(static_cast<unsigned long>(F.p()));
    std::size_t i = 0;
    while (f.degree() >= static_cast<std::int64_t>(2 * (i + 1))) {
        ++i;
        h = poly_powmod(h, p, f);
        DensePoly g = poly_gcd(h - x_poly(F), f);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f.divmod(g).first;
            h = h.mod(f);
        }
    }
    if (!f.is_one()) out.emplace_back(f, static_cast<std::size_t>(f.degree()));
    return out;
}

DensePoly random_poly_below(const PrimeField& F, std::size_t deg_bound,
                            std::mt19937_64& rng) {
    std::vector<fp_t> c(deg_bound);
    for (auto& v : c) v = static_cast<fp_t>(bounded_u64(rng, F.p()));
    return DensePoly(F, std::move(c));
}

// Splits a monic squarefree product of irreducibles all of degree d.
void equal_degree(const DensePoly& f, std::size_t d, std::mt19937_64& rng,
                  std::vector<DensePoly>& out) {
    const PrimeField& F = f.field();
    if (static_cast<std::size_t>(f.degree()) == d) {
        out.push_back(f);
        return;
    }
    DensePoly g = DensePoly::one(F);
    for (;;) {
        DensePoly a = random_poly_below(F, static_cast<std::size_t>(f.degree()), rng);
        if (a.is_constant()) continue;
        if (F.p() == 2) {
            // trace map: a + a^2 + a^4 + ... + a^(2^(d-1))
            DensePoly tr = a.mod(f);
            DensePoly cur = a.mod(f);
            for (std::size_t j = 1; j < d; ++j) {
                cur = (cur * cur).mod(f);
                tr = tr + cur;
            }
            g = poly_gcd(tr, f);
        } else {
            BigInt e = big_pow_ui(F.p(), static_cast<std::uint64_t>(d)) - 1;
            e = big_divexact(e, BigInt(2));
            DensePoly b = poly_powmod(a, e, f);
            g = poly_gcd(b - DensePoly::one(F), f);
        }
        if (!g.is_constant() && g.degree() < f.degree()) break;
    }
    equal_degree(g, d, rng, out);
    equal_degree(f.divmod(g).first, d, rng, out);
}

}  // namespace

FactoredPoly factor_poly(const DensePoly& g, std::uint64_t seed) {
    if (g.is_zero()) throw PrecondViolation("factorization of zero");
    auto [f, unit] = g.monic();
    FactoredPoly out{unit, {}};
    if (f.is_constant()) return out;
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(f.degree())));
    for (auto& [piece, mult] : squarefree_split(f)) {
        for (auto& [prod, d] : distinct_degree(piece)) {
            std::vector<DensePoly> irr;
            equal_degree(prod, d, rng, irr);
            for (auto& q : irr) out.factors.emplace_back(q, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        int c = DensePoly::cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible(const DensePoly& g) {
    if (g.degree() < 1) return false;
    DensePoly f = g.monic().first;
    const PrimeField& F = f.field();
    std::size_t n = static_cast<std::size_t>(f.degree());
    if (n == 1) return true;
    BigInt p(static_cast<unsigned long>(F.p()));
    // Frobenius tower: frob[j] = x^(p^j) mod f, built one step at a time.
    // f irreducible  <=>  x^(p^n) == x  and  gcd(x^(p^(n/l)) - x, f) = 1
    // for every prime l | n.
    std::vector<std::size_t> checkpoints;
    for (std::size_t l = 2; l <= n; ++l) {
        if (n % l == 0 && is_prime_u64(l)) checkpoints.push_back(n / l);
    }
    DensePoly h = x_poly(F);
    for (std::size_t j = 1; j <= n; ++j) {
        h = poly_powmod(h, p, f);
        if (std::find(checkpoints.begin(), checkpoints.end(), j) != checkpoints.end()) {
            DensePoly d = poly_gcd(h - x_poly(F), f);
            if (!d.is_one()) return false;
        }
    }
    return h == x_poly(F).mod(f);
}

}  // namespace ffp
