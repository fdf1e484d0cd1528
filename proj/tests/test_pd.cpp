#include "doctest.h"

#include "tcss/pd.hpp"

using namespace tcss;

namespace {

uint64_t lcg(uint64_t& s) { return s = s * 6364136223846793005ull + 1442695040888963407ull; }

PDElement random_element(const PDContext& ctx, uint64_t& s, int max_gamma = 2) {
    PDElement x = ctx.zero();
    for (int t = 0; t < 4; ++t) {
        int a = int(lcg(s) % uint64_t(ctx.e()));
        int i = int(lcg(s) % uint64_t(max_gamma + 1));
        int j = int(lcg(s) % uint64_t(max_gamma + 1));
        int64_t c = int64_t(lcg(s) % 17) - 8;
        x = ctx.add(x, ctx.int_mul(c, ctx.monomial(a, i, j)));
    }
    return x;
}

} // namespace

TEST_CASE("divided power multiplication laws") {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 6);
    PDContext ctx(K, 9, 6);

    // gamma_1(s)^2 = 2 gamma_2(s)
    CHECK(ctx.equal(ctx.mul(ctx.s(), ctx.s()), ctx.int_mul(2, ctx.monomial(0, 0, 2))));
    // z0^{e-1} * z0 = gamma_1(E) - 3
    CHECK(ctx.equal(ctx.mul(ctx.z0(), ctx.z0()), ctx.sub(ctx.E(), ctx.int_mul(3, ctx.one()))));
    // s^p = p! gamma_p(s)
    CHECK(ctx.equal(ctx.pow(ctx.s(), 3), ctx.int_mul(6, ctx.monomial(0, 0, 3))));
    // E^p = p! gamma_p(E)
    CHECK(ctx.equal(ctx.pow(ctx.E(), 3), ctx.int_mul(6, ctx.monomial(0, 3, 0))));
}

TEST_CASE("ring laws on sampled elements") {
    for (int f : {1, 2}) {
        LocalField K = LocalField::make_simple(3, 2, f, 1, 5);
        PDContext ctx(K, 6, 5);
        uint64_t s = 4242;
        for (int t = 0; t < 8; ++t) {
            PDElement a = random_element(ctx, s), b = random_element(ctx, s), c = random_element(ctx, s);
            CHECK(ctx.equal(ctx.mul(a, b), ctx.mul(b, a)));
            CHECK(ctx.equal(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c))));
            CHECK(ctx.equal(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c))));
        }
    }
}

TEST_CASE("frobenius is a ring homomorphism") {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 5);
    PDContext ctx(K, 9, 5);
    uint64_t s = 77;
    for (int t = 0; t < 6; ++t) {
        PDElement a = random_element(ctx, s), b = random_element(ctx, s);
        CHECK(ctx.equal(ctx.frobenius(ctx.add(a, b)), ctx.add(ctx.frobenius(a), ctx.frobenius(b))));
        CHECK(ctx.equal(ctx.frobenius(ctx.mul(a, b)), ctx.mul(ctx.frobenius(a), ctx.frobenius(b))));
    }
    // phi(z0) = z0^p and phi(E(z0)) = p uE
    CHECK(ctx.equal(ctx.frobenius(ctx.z0()), ctx.z0_pow(3)));
    CHECK(ctx.equal(ctx.frobenius(ctx.E()), ctx.phi_E()));
    // phi(s) for p=2, E=z^2+2: 2 z0 s - 2 gamma_2(s)
    LocalField K2 = LocalField::make_simple(2, 2, 1, 1, 5);
    PDContext c2(K2, 6, 5);
    PDElement expect = c2.sub(c2.int_mul(2, c2.mul(c2.z0(), c2.s())), c2.int_mul(2, c2.monomial(0, 0, 2)));
    CHECK(c2.equal(c2.frobenius(c2.s()), expect));
}

TEST_CASE("delta identities") {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 6);
    PDContext ctx(K, 9, 6);

    // delta on constants is the Fermat quotient
    for (int64_t c : {0, 1, 2, 5, 10}) {
        PDElement x = ctx.int_mul(c, ctx.one());
        PDElement expect = ctx.int_mul((c - c * c * c) / 3, ctx.one());
        PDElement got = ctx.delta(x);
        CHECK(ctx.equal(got, expect));
    }
    // delta(z0) = 0
    CHECK(ctx.is_zero(ctx.delta(ctx.z0())));
    // delta(s) = -xi0 s
    CHECK(ctx.equal(ctx.delta(ctx.s()), ctx.neg(ctx.mul(ctx.xi0(), ctx.s()))));

    // product rule delta(xy) = x^p delta(y) + y^p delta(x) + p delta(x) delta(y)
    uint64_t s = 31337;
    for (int t = 0; t < 5; ++t) {
        PDElement a = random_element(ctx, s, 1), b = random_element(ctx, s, 1);
        PDElement lhs = ctx.delta(ctx.mul(a, b));
        PDElement rhs = ctx.add(
            ctx.add(ctx.mul(ctx.pow(a, 3), ctx.delta(b)), ctx.mul(ctx.pow(b, 3), ctx.delta(a))),
            ctx.int_mul(3, ctx.mul(ctx.delta(a), ctx.delta(b))));
        CHECK(ctx.equal(lhs, rhs));
    }
    // sum rule delta(x+y) = delta(x) + delta(y) - sum_{0<i<p} (1/p) binom(p,i) x^i y^{p-i}
    for (int t = 0; t < 5; ++t) {
        PDElement a = random_element(ctx, s, 1), b = random_element(ctx, s, 1);
        PDElement lhs = ctx.delta(ctx.add(a, b));
        PDElement rhs = ctx.add(ctx.delta(a), ctx.delta(b));
        rhs = ctx.sub(rhs, ctx.mul(ctx.mul(a, ctx.pow(b, 2)), ctx.one()));
        rhs = ctx.sub(rhs, ctx.mul(ctx.pow(a, 2), b));
        CHECK(ctx.equal(lhs, rhs));
    }
}

TEST_CASE("h satisfies its defining identity exactly") {
    for (auto [p, e] : {std::pair<int64_t, int>{3, 2}, {2, 2}, {2, 5}, {5, 2}}) {
        LocalField K = LocalField::make_simple(p, e, 1, 1, 5);
        PDContext ctx(K, int(p) * int(p), 5);
        CHECK(ctx.equal(ctx.mul(ctx.h(), ctx.phi_E()), ctx.frobenius(ctx.s())));
    }
}

TEST_CASE("refined valuations") {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 5);
    PDContext ctx(K, 9, 5);
    CHECK(ctx.refined_val(ctx.s(), false) == Rational(1));
    CHECK(ctx.refined_val(ctx.z0(), false) == Rational(1, 2));
    CHECK(ctx.refined_val(ctx.one(), false) == Rational(0));
    CHECK(ctx.refined_val(ctx.zero(), false).is_infinite());
    // s^p = p! gamma_p(s) vanishes mod p
    CHECK(ctx.refined_val(ctx.pow(ctx.s(), 3), true).is_infinite());
    CHECK(ctx.refined_val(ctx.pow(ctx.s(), 3), false) == Rational(3));
    // h has positive valuation
    CHECK(ctx.refined_val(ctx.h(), false) > Rational(0));
}

TEST_CASE("f-sequence: valuations, unit coefficients, transfer identity") {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 6);
    PDContext ctx(K, 9, 6);
    auto seq = pd_f_seq(ctx, 1);
    REQUIRE(seq.f.size() == 2);
    CHECK(ctx.refined_val(seq.f[0], false) == Rational(1));
    CHECK(ctx.refined_val(seq.f[1], false) == Rational(3));
    auto c1 = ctx.coeff_of(seq.f[1], PDKey{0, 0, 3});
    REQUIRE(c1.has_value());
    CHECK(ctx.witt().valuation(*c1) == 0);
    for (int k = 0; k <= 1; ++k) {
        PDElement lhs = ctx.mul(seq.delta_h[size_t(k)], ctx.pow(ctx.phi_E(), k == 0 ? 1 : 3));
        CHECK(ctx.equal(lhs, ctx.frobenius(seq.f[size_t(k)])));
    }
    // precision bookkeeping: one digit per division
    CHECK(seq.f[1].prec == 5);
    CHECK(seq.delta_h[1].prec == 5);
}

TEST_CASE("congruence suite passes on gate hypotheses and skips otherwise") {
    // e = 1: the iterated checks and the h-congruence are gated off
    auto rep = verify_section3(LocalField::make_simple(3, 1, 1, 1, 4), 1);
    CHECK(rep.all_pass());
    int skipped = 0;
    for (auto& c : rep.checks)
        if (!c.applicable) ++skipped;
    CHECK(skipped == 3); // h_leading + both iterate families

    // p=2, e=5: the p=2 iterate family applies
    auto rep2 = verify_section3(LocalField::make_simple(2, 5, 1, 1, 4), 1);
    CHECK(rep2.all_pass());
    bool saw_iterate2 = false;
    for (auto& c : rep2.checks)
        if (c.name == "frob_iterate_leading2_1") saw_iterate2 = c.applicable && c.pass;
    CHECK(saw_iterate2);
}

TEST_CASE("xi0 and h leading terms sit exactly at the stated boundary") {
    LocalField K = LocalField::make_simple(5, 2, 1, 1, 5);
    PDContext ctx(K, 25, 5);
    // xi0 + z0^{p-1} has valuation exactly (p-2)/e + 1
    PDElement d1 = ctx.add(ctx.xi0(), ctx.z0_pow(4));
    CHECK(ctx.refined_val(d1, true) == Rational(5 - 2 + 2, 2));
    // h - z0^{p-1}s has valuation exactly min(p, (2p-1)/e+1, (p-2)/e+2)
    PDElement d2 = ctx.sub(ctx.h(), ctx.mul(ctx.z0_pow(4), ctx.s()));
    CHECK(ctx.refined_val(d2, true) == Rational(5 - 2 + 4, 2));
}

TEST_CASE("p-th powers of the ideal generators vanish mod p") {
    // z0^{pe}, E(z0)^p and s^p are all divisible by p in the envelope; this is
    // what keeps the z-power reductions consistent with the weight filtration
    for (auto [p, e] : {std::pair<int64_t, int>{3, 2}, {2, 5}, {5, 2}}) {
        LocalField K = LocalField::make_simple(p, e, 1, 1, 4);
        PDContext ctx(K, int(p) + 2, 4);
        CHECK(ctx.refined_val(ctx.z0_pow(int(p) * e), true).is_infinite());
        CHECK(ctx.refined_val(ctx.pow(ctx.E(), p), true).is_infinite());
        CHECK(ctx.refined_val(ctx.pow(ctx.s(), p), true).is_infinite());
        CHECK_FALSE(ctx.refined_val(ctx.z0_pow(int(p) * e - 1), true).is_infinite());
    }
}

TEST_CASE("error paths") {
    LocalField K = LocalField::make_simple(3, 2, 1, 1, 4);
    PDContext ctx(K, 9, 4);
    CHECK_THROWS_AS(ctx.div_exact_p(ctx.one()), error);
    CHECK_THROWS_AS(PDContext(K, 2, 4), error);   // cap below p
    CHECK_THROWS_AS(PDContext(K, 9, 1), error);   // precision too low
    CHECK_THROWS_AS(pd_f_seq(ctx, 3), error);     // precision below kmax + 2
    // context mismatch
    PDContext other(K, 10, 4);
    CHECK_THROWS_AS(ctx.mul(ctx.s(), other.s()), error);
}
