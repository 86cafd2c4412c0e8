#include "ffpoints/dense_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ffp {

namespace {

constexpr std::size_t kKaratsubaThreshold = 512;
constexpr std::size_t kDenseSizeLimit = std::size_t(1) << 31;

void schoolbook(const PrimeField& F, const fp_t* a, std::size_t na, const fp_t* b,
                std::size_t nb, fp_t* out) {
    // out has na + nb - 1 slots, already zeroed
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
        }
    }
}

void kara(const PrimeField& F, const fp_t* a, std::size_t na, const fp_t* b,
          std::size_t nb, fp_t* out) {
    if (na == 0 || nb == 0) return;
    if (std::min(na, nb) < kKaratsubaThreshold) {
        schoolbook(F, a, na, b, nb, out);
        return;
    }
    std::size_t h = std::max(na, nb) / 2;
    if (h >= na || h >= nb) {  // very unbalanced: split the longer one
        if (na > nb) {
            kara(F, a, h, b, nb, out);
            std::vector<fp_t> hi(na - h + nb - 1, 0);
            kara(F, a + h, na - h, b, nb, hi.data());
            for (std::size_t i = 0; i < hi.size(); ++i)
                out[h + i] = F.add(out[h + i], hi[i]);
        } else {
            kara(F, b, nb, a, na, out);
        }
        return;
    }
    // a = a0 + t^h a1, b = b0 + t^h b1
    const fp_t *a0 = a, *a1 = a + h, *b0 = b, *b1 = b + h;
    std::size_t na1 = na - h, nb1 = nb - h;
    std::vector<fp_t> z0(2 * h - 1, 0), z2(na1 + nb1 - 1, 0);
    kara(F, a0, h, b0, h, z0.data());
    kara(F, a1, na1, b1, nb1, z2.data());
    std::vector<fp_t> sa(std::max(h, na1), 0), sb(std::max(h, nb1), 0);
    for (std::size_t i = 0; i < h; ++i) sa[i] = a0[i];
    for (std::size_t i = 0; i < na1; ++i) sa[i] = F.add(sa[i], a1[i]);
    for (std::size_t i = 0; i < h; ++i) sb[i] = b0[i];
    for (std::size_t i = 0; i < nb1; ++i) sb[i] = F.add(sb[i], b1[i]);
    std::vector<fp_t> z1(sa.size() + sb.size() - 1, 0);
    kara(F, sa.data(), sa.size(), sb.data(), sb.size(), z1.data());
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = F.add(out[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i) out[h + i] = F.add(out[h + i], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i)
        out[2 * h + i] = F.add(out[2 * h + i], z2[i]);
}

}  // namespace

DensePoly DensePoly::monomial(const PrimeField& F, fp_t c, std::size_t d) {
    if (c == 0) return zero(F);
    std::vector<fp_t> v(d + 1, 0);
    v[d] = c;
    return DensePoly(F, std::move(v));
}

int DensePoly::cmp(const DensePoly& a, const DensePoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

DensePoly DensePoly::operator+(const DensePoly& o) const {
    std::vector<fp_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = F_.add(r[i], o.c_[i]);
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::operator-(const DensePoly& o) const {
    std::vector<fp_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = F_.sub(r[i], o.c_[i]);
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::operator-() const {
    std::vector<fp_t> r(c_);
    for (auto& x : r) x = F_.neg(x);
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::operator*(const DensePoly& o) const {
    if (is_zero() || o.is_zero()) return zero(F_);
    std::vector<fp_t> r(c_.size() + o.c_.size() - 1, 0);
    kara(F_, c_.data(), c_.size(), o.c_.data(), o.c_.size(), r.data());
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::scaled(fp_t c) const {
    if (c == 0) return zero(F_);
    std::vector<fp_t> r(c_);
    for (auto& x : r) x = F_.mul(x, c);
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::shifted(std::size_t d) const {
    if (is_zero()) return *this;
    std::vector<fp_t> r(c_.size() + d, 0);
    std::copy(c_.begin(), c_.end(), r.begin() + d);
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::pow(std::uint64_t e) const {
    DensePoly r = one(F_);
    DensePoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<DensePoly, DensePoly> DensePoly::divmod(const DensePoly& d) const {
    if (d.is_zero()) throw PrecondViolation("polynomial division by zero");
    if (degree() < d.degree()) return {zero(F_), *this};
    std::vector<fp_t> rem(c_);
    std::vector<fp_t> quo(c_.size() - d.c_.size() + 1, 0);
    fp_t dl = F_.inv(d.lc());
    for (std::size_t i = rem.size(); i-- >= d.c_.size();) {
        if (rem[i] == 0) {
            if (i == 0) break;
            continue;
        }
        fp_t q = F_.mul(rem[i], dl);
        std::size_t off = i - (d.c_.size() - 1);
        quo[off] = q;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[off + j] = F_.sub(rem[off + j], F_.mul(q, d.c_[j]));
        if (i == 0) break;
    }
    return {DensePoly(F_, std::move(quo)), DensePoly(F_, std::move(rem))};
}

DensePoly DensePoly::derivative() const {
    if (c_.size() <= 1) return zero(F_);
    std::vector<fp_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = F_.mul(c_[i], static_cast<fp_t>(i % F_.p()));
    return DensePoly(F_, std::move(r));
}

fp_t DensePoly::eval(fp_t x) const {
    fp_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = F_.add(F_.mul(r, x), c_[i]);
    return r;
}

DensePoly DensePoly::compose_monomial(std::uint64_t s) const {
    if (s == 0) throw PrecondViolation("monomial substitution needs s >= 1");
    if (c_.size() <= 1 || s == 1) return *this;
    std::uint64_t deg = static_cast<std::uint64_t>(degree());
    if (s >= kDenseSizeLimit || deg > kDenseSizeLimit / s)
        throw CapExceeded("dense expansion too large");
    std::uint64_t nd = deg * s;
    std::vector<fp_t> r(nd + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * s] = c_[i];
    return DensePoly(F_, std::move(r));
}

DensePoly DensePoly::decimate(std::uint64_t s) const {
    if (s == 0) throw PrecondViolation("decimation needs s >= 1");
    if (s == 1 || is_zero()) return *this;
    std::vector<fp_t> r(c_.size() / s + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (i % s != 0) throw PrecondViolation("support not divisible by stride");
        r[i / s] = c_[i];
    }
    return DensePoly(F_, std::move(r));
}

std::uint64_t DensePoly::support_gcd() const {
    std::uint64_t g = 0;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) g = std::gcd(g, static_cast<std::uint64_t>(i));
    return g;
}

std::pair<DensePoly, fp_t> DensePoly::monic() const {
    if (is_zero()) return {*this, 0};
    fp_t l = lc();
    return {scaled(F_.inv(l)), l};
}

std::string DensePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i > 0) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

DensePoly poly_gcd(const DensePoly& a, const DensePoly& b) {
    DensePoly x = a, y = b;
    while (!y.is_zero()) {
        DensePoly r = x.mod(y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic().first;
}

DensePoly poly_powmod(const DensePoly& base, const BigInt& e, const DensePoly& m) {
    if (sgn(e) < 0) throw PrecondViolation("negative exponent in powmod");
    const PrimeField& F = base.field();
    DensePoly r = DensePoly::one(F).mod(m);
    DensePoly b = base.mod(m);
    std::size_t nbits = big_bits(e);
    for (std::size_t i = nbits; i-- > 0;) {
        r = (r * r).mod(m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b).mod(m);
    }
    return r;
}

namespace {

// Incremental remainder square root; p odd, g nonzero of even degree.
std::optional<DensePoly> sqrt_incremental(const DensePoly& g) {
    const PrimeField& F = g.field();
    std::int64_t deg = g.degree();
    if (deg % 2 != 0) return std::nullopt;
    fp_t lam;
    try {
        lam = kth_root_in_fp(g.lc(), 2, F);
    } catch (const NotAResidue&) {
        return std::nullopt;
    }
    std::size_t n = static_cast<std::size_t>(deg) / 2;
    std::vector<fp_t> r(g.scaled(F.inv(g.lc())).coeffs());
    r.resize(2 * n + 1, 0);
    std::vector<fp_t> h(n + 1, 0);
    h[n] = 1;
    r[2 * n] = 0;
    fp_t inv2 = F.inv(2 % F.p());
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t m = n - j;
        fp_t b = F.mul(r[n + m], inv2);
        h[m] = b;
        if (b != 0) {
            // r -= 2*b*t^m*(sum_{i>m} h_i t^i) + b^2 t^(2m)
            fp_t twob = F.mul(2 % F.p(), b);
            for (std::size_t i = m + 1; i <= n; ++i)
                if (h[i] != 0) r[m + i] = F.sub(r[m + i], F.mul(twob, h[i]));
            r[2 * m] = F.sub(r[2 * m], F.mul(b, b));
        }
    }
    for (fp_t c : r)
        if (c != 0) return std::nullopt;
    return DensePoly(F, std::move(h)).scaled(lam);
}

}  // namespace

std::optional<DensePoly> kth_root_exact(const DensePoly& g, std::uint64_t k) {
    if (k == 0) throw PrecondViolation("k must be positive");
    const PrimeField& F = g.field();
    if (k == 1 || g.is_zero()) return g;
    if (g.is_constant()) {
        try {
            return DensePoly::constant(F, kth_root_in_fp(g.constant_term(), k, F));
        } catch (const NotAResidue&) {
            return std::nullopt;
        }
    }
    if (static_cast<std::uint64_t>(g.degree()) % k != 0) return std::nullopt;
    // p-th roots are Frobenius decimations; peel them off first.
    std::uint64_t p = F.p();
    DensePoly cur = g;
    while (k % p == 0) {
        if (cur.is_constant()) break;
        for (std::size_t i = 0; i < cur.coeffs().size(); ++i)
            if (cur.coeffs()[i] != 0 && i % p != 0) return std::nullopt;
        cur = cur.decimate(p);
        k /= p;
    }
    if (k == 1) return cur;
    if (cur.is_constant()) return kth_root_exact(cur, k);
    if (k == 2 && p != 2) return sqrt_incremental(cur);
    // General case: factor and divide multiplicities.  Exact but costs a
    // full factorization; fine at the degrees where k > 2 roots occur here.
    FactoredPoly fac = factor_poly(cur);
    fp_t u;
    try {
        u = kth_root_in_fp(fac.unit, k, F);
    } catch (const NotAResidue&) {
        return std::nullopt;
    }
    DensePoly h = DensePoly::constant(F, u);
    for (auto& [q, mult] : fac.factors) {
        if (mult % k != 0) return std::nullopt;
        h = h * q.pow(mult / k);
    }
    return h;
}

DensePoly squarefree_part(const DensePoly& g) {
    if (g.is_zero()) throw PrecondViolation("squarefree part of zero");
    const PrimeField& F = g.field();
    if (g.is_constant()) return DensePoly::one(F);
    DensePoly f = g.monic().first;
    DensePoly d = f.derivative();
    if (d.is_zero()) return squarefree_part(f.decimate(F.p()));
    DensePoly c = poly_gcd(f, d);
    DensePoly w = f.divmod(c).first;  // product of factors with p-coprime multiplicity
    DensePoly y = c;
    for (;;) {
        DensePoly u = poly_gcd(y, w);
        if (u.is_constant()) break;
        y = y.divmod(u).first;
    }
    // y collects the factors whose multiplicity is divisible by p
    if (y.is_constant()) return w;
    return w * squarefree_part(y.decimate(F.p()));
}

DenseRational::DenseRational(DensePoly n, DensePoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw PrecondViolation("zero denominator");
    if (num.is_zero()) {
        den = DensePoly::one(num.field());
        return;
    }
    DensePoly g = poly_gcd(num, den);
    if (!g.is_one()) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    auto [dm, dl] = den.monic();
    if (dl != 1) {
        den = dm;
        num = num.scaled(num.field().inv(dl));
    }
}

DenseRational DenseRational::from_poly(DensePoly n) {
    DensePoly one = DensePoly::one(n.field());
    return DenseRational(std::move(n), std::move(one));
}

DenseRational DenseRational::operator+(const DenseRational& o) const {
    return DenseRational(num * o.den + o.num * den, den * o.den);
}

DenseRational DenseRational::operator-(const DenseRational& o) const {
    return DenseRational(num * o.den - o.num * den, den * o.den);
}

DenseRational DenseRational::operator-() const { return DenseRational(-num, den); }

DenseRational DenseRational::operator*(const DenseRational& o) const {
    return DenseRational(num * o.num, den * o.den);
}

DenseRational DenseRational::operator/(const DenseRational& o) const {
    if (o.is_zero()) throw PrecondViolation("division by zero rational");
    return DenseRational(num * o.den, den * o.num);
}

DenseRational DenseRational::pow(std::uint64_t e) const {
    return DenseRational(num.pow(e), den.pow(e));
}

DenseRational DenseRational::scaled(fp_t c) const {
    return DenseRational(num.scaled(c), den);
}

std::string DenseRational::to_string(const std::string& var) const {
    if (is_poly()) return num.to_string(var);
    return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

std::optional<DenseRational> is_kth_power_rational(const DenseRational& g,
                                                   std::uint64_t k) {
    if (k == 0) throw PrecondViolation("k must be positive");
    auto rn = kth_root_exact(g.num, k);
    if (!rn) return std::nullopt;
    auto rd = kth_root_exact(g.den, k);
    if (!rd) return std::nullopt;
    return DenseRational(std::move(*rn), std::move(*rd));
}

}  // namespace ffp
