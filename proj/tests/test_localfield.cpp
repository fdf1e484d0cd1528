#include "doctest.h"

#include "tcss/local_field.hpp"

using namespace tcss;

TEST_CASE("parse and validation") {
    CHECK_NOTHROW(LocalField::parse_json(R"({"p":3,"f":1,"e":1,"mu":[1]})"));
    CHECK_NOTHROW(LocalField::parse_json(R"({"p":3,"f":1,"e":2,"eisenstein_mid":[[0]],"mu":[1]})"));
    // middle coefficient 1 is not divisible by 3
    CHECK_THROWS_AS(LocalField::parse_json(R"({"p":3,"f":1,"e":2,"eisenstein_mid":[[1]],"mu":[1]})"),
                    error);
    // leading coefficient must be a unit
    CHECK_THROWS_AS(LocalField::parse_json(R"({"p":3,"f":1,"e":1,"mu":[3]})"), error);
    // precision below 2 cannot support the delta computation
    CHECK_THROWS_AS(LocalField::parse_json(R"({"p":3,"f":1,"e":1,"precision":1,"mu":[1]})"), error);
    CHECK_THROWS_AS(LocalField::parse_json("not json"), error);
}

TEST_CASE("derived invariants of Q_p") {
    for (int64_t p : {2, 3, 5, 7}) {
        LocalField K = LocalField::make_simple(p, 1, 1);
        CHECK(K.d() == int(p) - 1);
        CHECK(K.mu_bar() == K.k().one());
        // constant term of deltaE mod p is 1
        CHECK(K.deltaE_modp()[0] == K.k().one());
        // mutilde_bar = -1
        CHECK(K.mutilde_bar() == K.k().neg(K.k().one()));
    }
}

TEST_CASE("cyclotomic field has period 1") {
    for (int64_t p : {3, 5}) {
        LocalField K = LocalField::make_cyclotomic(p);
        CHECK(K.e() == int(p) - 1);
        CHECK(K.d() == 1);
    }
}

TEST_CASE("any p = 2 field has period 1") {
    for (int e : {1, 2, 3, 5}) {
        LocalField K = LocalField::make_simple(2, e, 1);
        CHECK(K.d() == 1);
    }
    CHECK(LocalField::make_simple(2, 2, 3).d() == 1);
}

TEST_CASE("deltaE examples, frozen from direct expansion") {
    // E = z + 3: deltaE = (z^3 + 3 - (z+3)^3)/3 = -8 - 9z - 3z^2
    LocalField K3 = LocalField::make_simple(3, 1, 1, 1, 4);
    auto dE = delta_E_poly(K3, K3.witt());
    CHECK(K3.witt().equal(dE[0], K3.witt().from_int(-8)));
    CHECK(K3.witt().equal(dE[1], K3.witt().from_int(-9)));
    CHECK(K3.witt().equal(dE[2], K3.witt().from_int(-3)));
    CHECK(K3.deltaE_modp()[0] == K3.k().one());

    // E = z^2 + 2: deltaE = (z^4 + 2 - (z^2+2)^2)/2 = -1 - 2z^2
    LocalField K2 = LocalField::make_simple(2, 2, 1, 1, 4);
    auto dE2 = delta_E_poly(K2, K2.witt());
    CHECK(K2.witt().equal(dE2[0], K2.witt().from_int(-1)));
    CHECK(K2.witt().is_zero(dE2[1]));
    CHECK(K2.witt().equal(dE2[2], K2.witt().from_int(-2)));
    CHECK(K2.deltaE_modp()[0] == K2.k().one());
}

TEST_CASE("mutilde examples") {
    // mu = 1, p = 3: -1 = 2
    CHECK(LocalField::make_simple(3, 2, 1).mutilde_bar() == LocalField::make_simple(3, 2, 1).k().from_int(2));
    // mu = 1, p = 2: 1
    CHECK(LocalField::make_simple(2, 1, 1).mutilde_bar() == LocalField::make_simple(2, 1, 1).k().one());
    // p = 5, mu = 2: -2^5 = -32 = 3 mod 5
    LocalField K = LocalField::make_simple(5, 1, 1, 2);
    CHECK(K.mutilde_bar() == K.k().from_int(3));
}

TEST_CASE("eprime_bar vanishes when p divides e") {
    LocalField K = LocalField::make_simple(3, 3, 1);
    for (const auto& c : K.eprime_bar()) CHECK(K.k().is_zero(c));
    LocalField K2 = LocalField::make_simple(3, 2, 1);
    CHECK(K2.eprime_bar()[1] == K2.k().from_int(2));
}

TEST_CASE("reparse reproduces identical derived data") {
    std::string spec = R"({"p":5,"f":1,"e":4,"eisenstein_mid":[[10],[10],[5]],"mu":[1]})";
    LocalField a = LocalField::parse_json(spec);
    LocalField b = LocalField::parse_json(spec);
    CHECK(a.d() == b.d());
    CHECK(a.mu_bar() == b.mu_bar());
    CHECK(a.mutilde_bar() == b.mutilde_bar());
    CHECK(a.deltaE_modp() == b.deltaE_modp());
    CHECK(a.d() == 1); // the cyclotomic field over Q_5
}

TEST_CASE("d for a nontrivial leading coefficient") {
    // p=5, e=4, mu=2: smallest d with 4 | 4d and (N(2))^d = ord(2 in F_5^x) -> d = 4
    LocalField K = LocalField::make_simple(5, 4, 1, 2);
    CHECK(K.d() == 4);
}
