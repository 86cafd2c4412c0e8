#include "ffpoints/ext_field.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "ffpoints/errors.hpp"

namespace ffp {

ExtField::ExtField(std::uint64_t p, unsigned k, std::uint64_t seed)
    : F_(p), k_(k), seed_(seed), mod_(DensePoly::zero(F_)) {
    if (k == 0) throw ParameterError("extension degree must be >= 1");
    order_ = big_pow_ui(p, k);
    unit_order_ = order_ - 1;
    if (k == 1) {
        // x - c works for any c; take x itself.
        mod_ = DensePoly(F_, {0, 1});
        return;
    }
    std::mt19937_64 rng(derive_seed(seed, (static_cast<std::uint64_t>(k) << 32) ^ p));
    for (;;) {
        std::vector<fp_t> c(k + 1);
        for (unsigned i = 0; i < k; ++i) c[i] = static_cast<fp_t>(bounded_u64(rng, p));
        c[k] = 1;
        if (c[0] == 0) continue;  // divisible by x
        DensePoly cand(F_, std::move(c));
        if (cand.degree() != static_cast<std::int64_t>(k)) continue;
        if (is_irreducible(cand)) {
            mod_ = std::move(cand);
            return;
        }
    }
}

ExtElem ExtField::inv(const ExtElem& a) const {
    if (a.is_zero()) throw PrecondViolation("inverse of zero in extension field");
    // extended Euclid: s*a + t*mod = g (constant)
    DensePoly r0 = mod_, r1 = a.mod(mod_);
    DensePoly s0 = zero(), s1 = one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        DensePoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) throw PrecondViolation("element not invertible (modulus not irreducible?)");
    return s0.scaled(F_.inv(r0.constant_term())).mod(mod_);
}

ExtElem ExtField::pow_big(const ExtElem& a, const BigInt& e) const {
    ExtElem base = a.mod(mod_);
    if (base.is_zero()) {
        if (sgn(e) < 0) throw PrecondViolation("negative power of zero");
        return sgn(e) == 0 ? one() : zero();
    }
    BigInt r = big_mod(e, unit_order_);
    return poly_powmod(base, r, mod_);
}

ExtElem ExtField::eval_poly(const DensePoly& g, const ExtElem& theta) const {
    ExtElem acc = zero();
    const auto& c = g.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = mul(acc, theta);
        if (c[i] != 0) acc = add(acc, from_base(c[i]));
    }
    return acc;
}

ExtElem ExtField::sample(std::mt19937_64& rng) const {
    std::vector<fp_t> c(k_);
    for (auto& v : c) v = static_cast<fp_t>(bounded_u64(rng, p()));
    return DensePoly(F_, std::move(c));
}

ExtElem ExtField::sample_nonzero(std::mt19937_64& rng) const {
    for (;;) {
        ExtElem e = sample(rng);
        if (!e.is_zero()) return e;
    }
}

std::shared_ptr<const ExtField> get_ext_field(std::uint64_t p, unsigned k,
                                              std::uint64_t seed) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>,
                    std::shared_ptr<const ExtField>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, k, seed);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto field = std::make_shared<const ExtField>(p, k, seed);
    cache.emplace(key, field);
    return field;
}

}  // namespace ffp
