#include <random>

#include "doctest.h"
#include "ffpoints/dense_poly.hpp"

using namespace ffp;

namespace {

DensePoly random_poly(const PrimeField& F, std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<fp_t> dc(0, F.p() - 1);
    std::vector<fp_t> c(dd(rng) + 1);
    for (auto& x : c) x = dc(rng);
    return DensePoly(F, std::move(c));
}

}  // namespace

TEST_CASE("construction trims and degrees") {
    PrimeField F(5);
    CHECK(DensePoly(F, {1, 2, 0, 0}).degree() == 1);
    CHECK(DensePoly::zero(F).degree() == -1);
    CHECK(DensePoly::zero(F).is_zero());
    CHECK(DensePoly::one(F).is_one());
    CHECK(DensePoly::monomial(F, 3, 4).coeffs() == std::vector<fp_t>{0, 0, 0, 0, 3});
    CHECK(DensePoly::monomial(F, 0, 4).is_zero());
}

TEST_CASE("ring identities") {
    PrimeField F(5);
    DensePoly a(F, {1, 1});        // t + 1
    DensePoly b(F, {4, 1});        // t - 1
    CHECK(a * b == DensePoly(F, {4, 0, 1}));  // t^2 - 1
    CHECK((a + b).coeffs() == std::vector<fp_t>{0, 2});
    CHECK((a - a).is_zero());
    CHECK((-a).coeffs() == std::vector<fp_t>{4, 4});
    CHECK(a.pow(5) == DensePoly(F, {1, 0, 0, 0, 0, 1}));  // (t+1)^5 = t^5+1
    CHECK(a.pow(0).is_one());
    CHECK(a.shifted(2) == DensePoly(F, {0, 0, 1, 1}));
    CHECK(a.scaled(3).coeffs() == std::vector<fp_t>{3, 3});
    CHECK(a.eval(4) == 0);
    CHECK(DensePoly(F, {1, 0, 2}).derivative() == DensePoly(F, {0, 4}));
    // derivative kills p-th powers
    CHECK(DensePoly(F, {1, 0, 0, 0, 0, 1}).derivative().is_zero());
}

TEST_CASE("divmod is exact division with remainder") {
    PrimeField F(13);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        DensePoly a = random_poly(F, rng, 9);
        DensePoly d = random_poly(F, rng, 5);
        if (d.is_zero()) continue;
        auto [q, r] = a.divmod(d);
        CHECK(q * d + r == a);
        CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("monomial composition and decimation") {
    PrimeField F(5);
    DensePoly g(F, {1, 4, 1});  // t^2 + 4t + 1
    DensePoly h = g.compose_monomial(3);
    CHECK(h == DensePoly(F, {1, 0, 0, 4, 0, 0, 1}));  // t^6 + 4t^3 + 1
    CHECK(h.support_gcd() == 3);
    CHECK(h.decimate(3) == g);
    CHECK(g.support_gcd() == 1);
    CHECK(DensePoly::constant(F, 2).support_gcd() == 0);
    CHECK_THROWS(h.decimate(2));  // exponent 3 not divisible by 2
}

TEST_CASE("monic normalization and order") {
    PrimeField F(5);
    auto [m, lc] = DensePoly(F, {2, 0, 3}).monic();
    CHECK(lc == 3);
    CHECK(m == DensePoly(F, {4, 0, 1}));  // 2*inv(3)=2*2=4
    CHECK(DensePoly::cmp(DensePoly(F, {1, 1}), DensePoly(F, {0, 0, 1})) < 0);
    CHECK(DensePoly::cmp(DensePoly(F, {2, 1}), DensePoly(F, {1, 1})) > 0);
    CHECK(DensePoly::cmp(m, m) == 0);
}

TEST_CASE("gcd is monic and divides both") {
    PrimeField F(5);
    DensePoly a(F, {1, 1});
    DensePoly b(F, {2, 1});
    DensePoly g = (a * a * b).scaled(3);
    DensePoly h = (a * b * b).scaled(2);
    DensePoly d = poly_gcd(g, h);
    CHECK(d == a * b);  // monic since a, b monic
    CHECK(g.divmod(d).second.is_zero());
    CHECK(h.divmod(d).second.is_zero());
    CHECK(poly_gcd(g, DensePoly::zero(F)) == a * a * b);  // made monic
}

TEST_CASE("powmod matches pow then mod") {
    PrimeField F(13);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        DensePoly b = random_poly(F, rng, 4);
        DensePoly m = random_poly(F, rng, 3);
        if (m.degree() < 1) continue;
        CHECK(poly_powmod(b, BigInt(9), m) == b.pow(9).mod(m));
    }
}

TEST_CASE("exact polynomial k-th roots") {
    PrimeField F(5);
    DensePoly q(F, {1, 1, 1});
    auto r = kth_root_exact(q.pow(3), 3);
    REQUIRE(r.has_value());
    CHECK(*r == q);
    CHECK(!kth_root_exact(q.pow(3), 2).has_value());
    DensePoly np = DensePoly(F, {1, 1}).pow(2) * DensePoly(F, {2, 1});
    CHECK(!kth_root_exact(np, 2).has_value());
    // unit handling: 4 (t+1)^2 = (2(t+1))^2
    auto r2 = kth_root_exact(DensePoly(F, {1, 1}).pow(2).scaled(4), 2);
    REQUIRE(r2.has_value());
    CHECK(r2->pow(2) == DensePoly(F, {1, 1}).pow(2).scaled(4));
}

TEST_CASE("squarefree part drops multiplicity") {
    PrimeField F(5);
    DensePoly a(F, {1, 1}), b(F, {2, 1});
    CHECK(squarefree_part(a.pow(2) * b) == a * b);
    CHECK(squarefree_part(a * b) == a * b);
}

TEST_CASE("rational functions reduce to lowest terms") {
    PrimeField F(5);
    DenseRational r(DensePoly(F, {4, 0, 1}), DensePoly(F, {1, 1}));  // (t^2-1)/(t+1)
    CHECK(r.num == DensePoly(F, {4, 1}));
    CHECK(r.den.is_one());
    DenseRational s(DensePoly(F, {1, 1}), DensePoly(F, {2, 2}));  // = inv(2) = 3
    CHECK(s.num == DensePoly::constant(F, 3));
    CHECK(s.den.is_one());

    DenseRational u(DensePoly::one(F), DensePoly(F, {0, 1}));      // 1/t
    DenseRational v(DensePoly::one(F), DensePoly(F, {1, 1}));      // 1/(t+1)
    DenseRational sum = u + v;
    CHECK(sum.num == DensePoly(F, {1, 2}));
    CHECK(sum.den == DensePoly(F, {0, 1, 1}));
    CHECK(u * v == DenseRational(DensePoly::one(F), DensePoly(F, {0, 1, 1})));
    CHECK((u - u).is_zero());
    CHECK(u / v == DenseRational(DensePoly(F, {1, 1}), DensePoly(F, {0, 1})));
    CHECK(u.pow(2) == DenseRational(DensePoly::one(F), DensePoly(F, {0, 0, 1})));
}

TEST_CASE("rational k-th powers") {
    PrimeField F(5);
    DenseRational g(DensePoly(F, {1, 1}), DensePoly(F, {0, 1}));  // (t+1)/t
    auto r = is_kth_power_rational(g.pow(3), 3);
    REQUIRE(r.has_value());
    CHECK(r->pow(3) == g.pow(3));
    auto r2 = is_kth_power_rational(g.pow(2).scaled(4), 2);  // 4 is a square
    REQUIRE(r2.has_value());
    CHECK(r2->pow(2) == g.pow(2).scaled(4));
    CHECK(!is_kth_power_rational(g.pow(2).scaled(2), 2).has_value());
    CHECK(!is_kth_power_rational(g, 3).has_value());
}
