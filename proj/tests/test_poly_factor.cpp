#include <random>

#include "doctest.h"
#include "ffpoints/dense_poly.hpp"

using namespace ffp;

namespace {

DensePoly product_of(const FactoredPoly& f, const PrimeField& F) {
    DensePoly acc = DensePoly::constant(F, f.unit);
    for (const auto& [q, e] : f.factors) acc = acc * q.pow(e);
    return acc;
}

}  // namespace

TEST_CASE("factorization reconstructs the input") {
    std::mt19937_64 rng(3);
    for (std::uint64_t p : {5ull, 13ull}) {
        PrimeField F(p);
        std::uniform_int_distribution<int> dd(1, 10);
        std::uniform_int_distribution<fp_t> dc(0, p - 1);
        for (int i = 0; i < 40; ++i) {
            std::vector<fp_t> c(dd(rng) + 1);
            for (auto& x : c) x = dc(rng);
            DensePoly g(F, std::move(c));
            if (g.degree() < 1) continue;
            FactoredPoly f = factor_poly(g);
            CHECK(product_of(f, F) == g);
            for (const auto& [q, e] : f.factors) {
                CHECK(q.lc() == 1);
                CHECK(e >= 1);
                CHECK(is_irreducible(q));
            }
            // sorted, no duplicate irreducible
            for (std::size_t j = 1; j < f.factors.size(); ++j)
                CHECK(DensePoly::cmp(f.factors[j - 1].first, f.factors[j].first) < 0);
        }
    }
}

TEST_CASE("factorization is deterministic") {
    PrimeField F(5);
    DensePoly g(F, {2, 3, 0, 1, 4, 1, 2});
    FactoredPoly a = factor_poly(g, 12345);
    FactoredPoly b = factor_poly(g, 12345);
    REQUIRE(a.factors.size() == b.factors.size());
    CHECK(a.unit == b.unit);
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].first == b.factors[i].first);
        CHECK(a.factors[i].second == b.factors[i].second);
    }
}

TEST_CASE("t^21 + 1 over F_5 splits into the known five factors") {
    PrimeField F(5);
    std::vector<fp_t> c(22, 0);
    c[0] = 1;
    c[21] = 1;
    DensePoly g(F, c);
    FactoredPoly f = factor_poly(g);
    CHECK(f.unit == 1);
    std::vector<DensePoly> expect = {
        DensePoly(F, {1, 1}),
        DensePoly(F, {1, 4, 1}),
        DensePoly(F, {1, 0, 2, 3, 2, 0, 1}),
        DensePoly(F, {1, 1, 3, 4, 3, 1, 1}),
        DensePoly(F, {1, 4, 1, 4, 1, 4, 1}),
    };
    REQUIRE(f.factors.size() == expect.size());
    DensePoly check = DensePoly::one(F);
    for (std::size_t i = 0; i < expect.size(); ++i) {
        CHECK(f.factors[i].first == expect[i]);
        CHECK(f.factors[i].second == 1);
        check = check * expect[i];
    }
    CHECK(check == g);  // the frozen list really multiplies out
}

TEST_CASE("repeated factors get the right multiplicity") {
    PrimeField F(5);
    DensePoly a(F, {1, 1}), b(F, {1, 4, 1});
    FactoredPoly f = factor_poly(a.pow(3) * b.pow(2) * b.scaled(2));
    CHECK(f.unit == 2);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == a);
    CHECK(f.factors[0].second == 3);
    CHECK(f.factors[1].first == b);
    CHECK(f.factors[1].second == 3);
}

TEST_CASE("irreducibility agrees with root-finding for quadratics") {
    PrimeField F(5);
    for (fp_t b = 0; b < 5; ++b) {
        for (fp_t c = 0; c < 5; ++c) {
            DensePoly q(F, {c, b, 1});
            bool has_root = false;
            for (fp_t x = 0; x < 5; ++x)
                if (q.eval(x) == 0) has_root = true;
            CHECK(is_irreducible(q) == !has_root);
        }
    }
    CHECK(is_irreducible(DensePoly(F, {0, 1})));      // t
    CHECK_FALSE(is_irreducible(DensePoly(F, {0, 0, 1})));
    CHECK_FALSE(is_irreducible(DensePoly::one(F)));   // units are not irreducible
}
