#include <doctest.h>

#include <random>

#include "dp1/binary_form.hpp"
#include "dp1/generators.hpp"
#include "dp1/parse.hpp"

using namespace dp1;

TEST_CASE("bigint arithmetic and division") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("987654321987654321");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(a.to_string() == "123456789012345678901234567890");
    CHECK(BigInt::gcd(BigInt(48), BigInt(-36)) == BigInt(12));

    // property: divmod inverts multiplication on random operands
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
    for (int i = 0; i < 200; ++i) {
        BigInt x = BigInt(d(rng)) * BigInt(d(rng)) + BigInt(d(rng));
        BigInt y = BigInt(d(rng));
        if (y.is_zero()) continue;
        BigInt qq, rr;
        BigInt::divmod(x, y, qq, rr);
        CHECK(qq * y + rr == x);
        CHECK(rr.abs() < y.abs());
    }
    CHECK(BigInt(144).sqrt_exact().value() == BigInt(12));
    CHECK(!BigInt(145).sqrt_exact().has_value());
    CHECK(BigInt(-27).cbrt_exact().value() == BigInt(-3));
}

TEST_CASE("rational normalization and exact roots") {
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational::from_string("9/4").sqrt_exact().value() == Rational(3, 2));
    CHECK(!Rational(2).sqrt_exact().has_value());
    CHECK(Rational(-8, 27).cbrt_exact().value() == Rational(-2, 3));
    CHECK(Rational(3, 4).pow(-2) == Rational(16, 9));
}

TEST_CASE("tcoeff valuation, series, and dvr membership") {
    TCoeff u = TCoeff(1) + TCoeff::t(1);
    CHECK(u.valuation().value() == 0);
    CHECK(u.is_unit());
    CHECK(TCoeff::t(-2).valuation().value() == -2);
    CHECK(!TCoeff::t(-2).in_dvr());
    CHECK(!TCoeff().valuation().has_value());

    CHECK((u * u.inverse_series(10)).truncated(10) == TCoeff(1));
    CHECK((u * u).sqrt_series(12).value() == u);
    CHECK((u * u * u).cbrt_series(12).value() == u);
    CHECK(!(TCoeff(2)).sqrt_series(4).has_value());

    TCoeff p = TCoeff(Rational(3, 2)).shifted(4) + TCoeff::t(5);
    CHECK(p.to_string() == "3/2*t^4 + t^5");
    CHECK(parse_tcoeff(p.to_string()) == p);
    CHECK(p.derivative() == TCoeff(6).shifted(3) + TCoeff(5).shifted(4));

    // exact division
    TCoeff prod = u * p;
    CHECK(prod.divided_exact(u).value() == p);
    CHECK(!p.divided_exact(u).has_value());

    // composition t -> t + 1
    TCoeff sq = TCoeff::t(2);
    TCoeff shifted = sq.compose_t_plus(Rational(1));
    CHECK(shifted == TCoeff(1) + TCoeff(2).shifted(1) + TCoeff::t(2));
}

TEST_CASE("tpoly gcd in Q[t]") {
    TCoeff a = (TCoeff::t(1) + TCoeff(1)) * (TCoeff::t(1) - TCoeff(2));
    TCoeff b = (TCoeff::t(1) + TCoeff(1)) * (TCoeff::t(1) + TCoeff(3));
    TCoeff g = tpoly_gcd(a, b);
    CHECK(g == TCoeff::t(1) + TCoeff(1));
    CHECK(tpoly_gcd(TCoeff(6), TCoeff(4)) == TCoeff(1));
    CHECK(tpoly_gcd(TCoeff(), TCoeff::t(3)) == TCoeff::t(3));
    CHECK(tpoly_gcd(TCoeff::t(2), TCoeff::t(5)) == TCoeff::t(2));
}

TEST_CASE("polynomial parsing and canonical printing") {
    WPoly X1 = parse_wpoly("w^2+z^3+x^5*y+t^24*x*y^5");
    CHECK(X1.to_string() == "w^2 + z^3 + x^5*y + t^24*x*y^5");
    CHECK(X1.is_homogeneous(6));
    CHECK(X1.term_count() == 4);

    CHECK(parse_wpoly("x - x").is_zero());
    CHECK_THROWS_AS(parse_wpoly("w^2+z^3+z*f + 0"), ParseError);
    CHECK_THROWS_AS(parse_wpoly("x^y"), ParseError);
    CHECK_THROWS_AS(parse_wpoly("3/0"), std::exception);
    CHECK(parse_wpoly("p*q", VarSet::PQRS).to_string() == "p*q");
    CHECK_THROWS_AS(parse_wpoly("p*q", VarSet::XYZW), ParseError);
    // homogeneity checked only when requested
    CHECK_NOTHROW(parse_wpoly("x + z"));
    CHECK_THROWS_AS(parse_wpoly("x + z", VarSet::XYZW, 6), ParseError);
    CHECK_NOTHROW(parse_wpoly("w^2 - x^6", VarSet::XYZW, 6));

    // print-parse-print idempotence on random polynomials
    InstanceRng rng(42);
    for (int i = 0; i < 40; ++i) {
        Fibration f = case_d_instance(rng).fibration;
        std::string s = f.to_wpoly().to_string();
        CHECK(parse_wpoly(s).to_string() == s);
    }
}

TEST_CASE("monomial substitution") {
    WPoly f = parse_wpoly("x^5*y");
    std::array<std::pair<int, int>, 4> img{
        {{6, kVarX}, {0, kVarY}, {10, kVarZ}, {15, kVarW}}};
    CHECK(f.substitute_monomial(img).to_string() == "t^30*x^5*y");

    // identity images
    std::array<std::pair<int, int>, 4> id{
        {{0, kVarX}, {0, kVarY}, {0, kVarZ}, {0, kVarW}}};
    WPoly X1 = parse_wpoly("w^2+z^3+x^5*y+t^24*x*y^5");
    CHECK(X1.substitute_monomial(id) == X1);

    // x -> t^{-1} y, y -> t x on x*y^5 gives t^4 x^5 y
    WPoly g = parse_wpoly("x*y^5");
    std::array<std::pair<int, int>, 4> tw{
        {{-1, kVarY}, {1, kVarX}, {0, kVarZ}, {0, kVarW}}};
    CHECK(g.substitute_monomial(tw).to_string() == "t^4*x^5*y");

    // multiplicativity
    InstanceRng rng(5);
    for (int i = 0; i < 20; ++i) {
        WPoly a = case_d_instance(rng).fibration.to_wpoly();
        WPoly b = case_b_instance(rng).fibration.to_wpoly();
        CHECK(a.substitute_monomial(img) * b.substitute_monomial(img) ==
              (a * b).substitute_monomial(img));
    }
}

TEST_CASE("t-valuation of polynomials") {
    WPoly X1 = parse_wpoly("w^2+z^3+x^5*y+t^24*x*y^5");
    std::array<std::pair<int, int>, 4> img{
        {{6, kVarX}, {0, kVarY}, {10, kVarZ}, {15, kVarW}}};
    WPoly sub = X1.substitute_monomial(img);
    // oracle: direct minimum over the four substituted monomials
    // w^2 -> 30, z^3 -> 30, x^5 y -> 30, t^24 x y^5 -> 24 + 6
    CHECK(sub.t_valuation().value() == 30);
    CHECK_FALSE(WPoly().t_valuation().has_value());
    // a polynomial with a unit coefficient has valuation 0
    CHECK(X1.t_valuation().value() == 0);

    // val(f g) = val(f) + val(g); val(f+g) >= min, equal when distinct
    InstanceRng rng(9);
    for (int i = 0; i < 25; ++i) {
        WPoly a = case_d_instance(rng).fibration.to_wpoly().shifted_t(rng.uniform(0, 3));
        WPoly b = case_b_instance(rng).fibration.to_wpoly().shifted_t(rng.uniform(0, 3));
        CHECK((a * b).t_valuation().value() ==
              a.t_valuation().value() + b.t_valuation().value());
        WPoly s = a + b;
        if (!s.is_zero()) {
            int va = *a.t_valuation(), vb = *b.t_valuation();
            CHECK(*s.t_valuation() >= std::min(va, vb));
            if (va != vb) CHECK(*s.t_valuation() == std::min(va, vb));
        }
    }
}

TEST_CASE("formal derivatives") {
    CHECK(parse_wpoly("w^2").partial(kVarW).to_string() == "2*w");
    CHECK(parse_wpoly("w^2+z^3+x^5*y").partial(kVarX).to_string() == "5*x^4*y");
    CHECK(parse_wpoly("t^4*x").dt().to_string() == "4*t^3*x");

    // Leibniz rule on random pairs
    InstanceRng rng(11);
    for (int i = 0; i < 20; ++i) {
        WPoly a = case_d_instance(rng).fibration.to_wpoly();
        WPoly b = case_b_instance(rng).fibration.to_wpoly();
        for (int v = 0; v < 4; ++v)
            CHECK((a * b).partial(v) == a.partial(v) * b + a * b.partial(v));
        CHECK((a * b).dt() == a.dt() * b + a * b.dt());
    }
}

TEST_CASE("ring axioms on random polynomials") {
    InstanceRng rng(13);
    for (int i = 0; i < 30; ++i) {
        WPoly a = case_d_instance(rng).fibration.to_wpoly();
        WPoly b = case_b_instance(rng).fibration.to_wpoly();
        WPoly c = case_a_instance(rng).fibration.to_wpoly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == WPoly());
    }
}

TEST_CASE("graded substitution preserves homogeneity") {
    InstanceRng rng(17);
    for (int i = 0; i < 20; ++i) {
        WPoly a = case_d_instance(rng).fibration.to_wpoly();
        REQUIRE(a.is_homogeneous(6));
        std::array<std::pair<int, int>, 4> img{{{rng.uniform(0, 4), kVarX},
                                                {rng.uniform(0, 4), kVarY},
                                                {rng.uniform(0, 8), kVarZ},
                                                {rng.uniform(0, 12), kVarW}}};
        CHECK(a.substitute_monomial(img).is_homogeneous(6));
    }
}

TEST_CASE("binary resultants, pinned sign convention") {
    BinaryForm x(1, {TCoeff(1), TCoeff(0)});
    BinaryForm y(1, {TCoeff(0), TCoeff(1)});
    CHECK(binary_resultant(x, y) == TCoeff(1));

    BinaryForm xy(2, {TCoeff(0), TCoeff(1), TCoeff(0)});
    BinaryForm xpy(1, {TCoeff(1), TCoeff(1)});
    // golden: Sylvester determinant computed by hand is -1
    CHECK(binary_resultant(xy, xpy) == TCoeff(-1));

    // resultant vanishes iff the gcd is nonconstant
    BinaryForm f(3, {TCoeff(0), TCoeff(1), TCoeff(2), TCoeff(0)});
    BinaryForm g(2, {TCoeff(0), TCoeff(1), TCoeff(3)});
    CHECK(binary_resultant(f, g).is_zero());
    CHECK(binary_gcd(f, g).degree() >= 1);

    InstanceRng rng(23);
    for (int i = 0; i < 20; ++i) {
        BinaryForm a = rng.binary_form(3, 0, 2);
        BinaryForm b = rng.binary_form(2, 0, 2);
        if (a.is_zero() || b.is_zero()) continue;
        bool res_zero = binary_resultant(a, b).is_zero();
        bool gcd_nonconst = binary_gcd(a, b).degree() >= 1;
        CHECK(res_zero == gcd_nonconst);
    }
}

TEST_CASE("binary gcd") {
    BinaryForm x2y(3, {TCoeff(0), TCoeff(1), TCoeff(0), TCoeff(0)});
    BinaryForm xy2(3, {TCoeff(0), TCoeff(0), TCoeff(1), TCoeff(0)});
    BinaryForm g = binary_gcd(x2y, xy2);
    CHECK(g.degree() == 2);
    CHECK(g[1].is_one());
    CHECK(g[0].is_zero());
    CHECK(g[2].is_zero());
    CHECK_THROWS_AS(binary_gcd(BinaryForm(2), BinaryForm(3)), std::domain_error);

    // gcd over Q(t) clears to DVR form
    TCoeff t = TCoeff::t(1);
    BinaryForm a(2, {t, TCoeff(1) + t, TCoeff()});
    BinaryForm b(1, {t.shifted(1), t.shifted(1)});  // t^2 (x + y)
    BinaryForm d = binary_gcd(a * b, b);
    CHECK(d.degree() == 1);
    CHECK(d.in_dvr());
}
