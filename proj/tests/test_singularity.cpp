#include <doctest.h>

#include "dp1/generators.hpp"
#include "dp1/parse.hpp"
#include "dp1/singularity.hpp"

using namespace dp1;

namespace {
Fibration fib(const char* text) {
    return Fibration::from_wpoly(parse_wpoly(text), true);
}
AffineGerm at_A(const Fibration& X) {
    return make_germ(X, kVarY, {Rational(0), Rational(1), Rational(0), Rational(0)});
}
AffineGerm at_B(const Fibration& V) {
    return make_germ(V, kVarX, {Rational(1), Rational(0), Rational(0), Rational(0)});
}
}  // namespace

TEST_CASE("point jacobian test") {
    // all four partials of w^2+z^3+t^4 y+y^5 vanish at the origin of the
    // chart x = 1
    Fibration X2 = fib("w^2+z^3+t^4*x^5*y+x*y^5");
    CHECK(is_singular_at(at_B(X2)));

    // a germ with a linear term is smooth
    Fibration Xs = fib("w^2+z^3+z*x^3*y+x^5*y");
    AffineGerm g = make_germ(Xs, kVarX, {Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(!is_singular_at(g));

    // the base point must lie on the hypersurface
    Fibration Xo = fib("w^2+z^3+x^6");
    AffineGerm off = make_germ(Xo, kVarY, {Rational(1), Rational(1), Rational(0), Rational(0)});
    CHECK_THROWS_AS(is_singular_at(off), std::domain_error);

    // case-D instances are singular at A, always
    InstanceRng rng(101);
    for (int i = 0; i < 60; ++i) {
        CaseInstance ci = case_d_instance(rng);
        CHECK(is_singular_at(at_A(ci.fibration)));
    }
}

TEST_CASE("singular curves") {
    // case A equation with a = 1, m = 2: singular along {t = w = z = 0}
    WPoly caseA = parse_wpoly("w^2+z^3+t^4*z*x^4+t^6*x^6+t^8*x^5*y");
    CurveCheckResult r = singular_curve_check(caseA, true, {false, false, true, true});
    CHECK(r.contained);
    CHECK(r.singular_along);

    // case C: substitute m for a
    WPoly caseC = parse_wpoly("w^2+z^3+t^8*z*x^4+t^12*x^6");
    r = singular_curve_check(caseC, true, {false, false, true, true});
    CHECK(r.contained);
    CHECK(r.singular_along);

    // the smooth image of the first worked example does not contain the curve
    WPoly V1 = parse_wpoly("w^2+z^3+x^5*y+x*y^5");
    r = singular_curve_check(V1, true, {false, false, true, true});
    CHECK(!r.contained);
    CHECK(!r.singular_along);

    // contained but not singular along: w^2 + z^3 + t z x^4 + x^5 y
    WPoly half = parse_wpoly("w^2+z^3+t*z*x^4+x^5*y");
    r = singular_curve_check(half, true, {false, false, true, true});
    CHECK(!r.singular_along);
}

TEST_CASE("double point branch extraction") {
    // w^2 + w*x^3-style mixing completes exactly
    WPoly g = parse_wpoly("w^2+w*x^3+z^3+x^5*y").substitute_var(kVarY, Rational(1));
    PlanePoly F = double_point_branch(g, kVarX, kVarZ);
    // F = z^3 + x^5 - x^6/4
    CHECK(F.terms().at({5, 0}) == Rational(1));
    CHECK(F.terms().at({6, 0}) == Rational(-1, 4));
    CHECK(F.terms().at({0, 3}) == Rational(1));

    WPoly bad = parse_wpoly("w^2+z*w^2*x").substitute_var(kVarY, Rational(1));
    CHECK_THROWS_AS(double_point_branch(bad, kVarX, kVarZ), std::domain_error);
}

TEST_CASE("surface double points through the curve classifier") {
    // w^2 + z^3 + x^5: E8 surface point
    WPoly g = parse_wpoly("w^2+z^3+x^5*y").substitute_var(kVarY, Rational(1));
    SingularityReport r = classify_surface_double_point(g, kVarX, kVarZ);
    CHECK(r.tag == SingularityReport::Tag::E);
    CHECK(r.index == 8);
    CHECK(r.milnor == 8);
    CHECK(r.du_val());

    // w^2 + z^2 + x^2 is A1 (conjugate tangent directions)
    PlanePoly a1 = PlanePoly::term(Rational(1), 0, 2) + PlanePoly::term(Rational(1), 2, 0);
    SingularityReport r1 = classify_surface_double_point(a1);
    CHECK(r1.tag == SingularityReport::Tag::A);
    CHECK(r1.index == 1);

    // w^2 + z^3 + u z t^4 + v t^6 is not du Val
    PlanePoly nel = PlanePoly::term(Rational(1), 0, 3) +
                    PlanePoly::term(Rational(2), 4, 1) +
                    PlanePoly::term(Rational(5), 6, 0);
    SingularityReport r2 = classify_surface_double_point(nel);
    CHECK(!r2.du_val());
    CHECK(r2.tag == SingularityReport::Tag::MinimallyElliptic);
}

TEST_CASE("compound du Val classification of the worked examples") {
    // X of the first example has cE8 at {t=0, (0:1:0:0)}
    Fibration X1 = fib("w^2+z^3+x^5*y+t^24*x*y^5");
    SingularityReport r1 = classify_cDV(at_A(X1), 7, 1);
    CHECK(r1.compound);
    CHECK(r1.tag == SingularityReport::Tag::E);
    CHECK(r1.index == 8);
    CHECK(r1.status == SingularityReport::Status::Classified);

    // the birational-automorphism example: cE8 at {t=0,(1:0:0:0)}
    Fibration X2 = fib("w^2+z^3+t^4*x^5*y+x*y^5");
    AffineGerm g2 = at_B(X2);
    SingularityReport r2 = classify_cDV(g2, 7, 1);
    SingularityReport r2b = classify_cDV(g2, 7, 2);
    CHECK(r2.tag == SingularityReport::Tag::E);
    CHECK(r2.index == 8);
    CHECK(r2b.tag == r2.tag);
    CHECK(r2b.index == r2.index);

    // non-normal cusp example: cE7
    Fibration X3a = fib("w^2+z^3+t*z*x^2*y^2+t*x^6+t^7*y^6");
    SingularityReport r3 = classify_cDV(at_A(X3a), 7, 1);
    CHECK(r3.tag == SingularityReport::Tag::E);
    CHECK(r3.index == 7);

    // non-normal node example: computed general section is D8 (stable),
    // which disagrees with the source label cD4; asserted as computed here
    Fibration X3b = fib("w^2+z^3-3*z*x^2*y^2+t*x^6+2*x^3*y^3+t^7*y^6");
    SingularityReport r4 = classify_cDV(at_A(X3b), 7, 1);
    SingularityReport r4b = classify_cDV(at_A(X3b), 7, 99);
    CHECK(r4.tag == SingularityReport::Tag::D);
    CHECK(r4.index == 8);
    CHECK(r4b.tag == r4.tag);
    CHECK(r4b.index == r4.index);

    // classify_cDV refuses smooth points
    Fibration Xs = fib("w^2+z^3+z*x^3*y+x^5*y");
    CHECK_THROWS_AS(
        classify_cDV(make_germ(Xs, kVarX, {Rational(1), Rational(0), Rational(0), Rational(0)}), 3, 1),
        std::domain_error);
}

TEST_CASE("general anticanonical member test") {
    // the cE8 point of the first example carries an E8 elephant
    Fibration X1 = fib("w^2+z^3+x^5*y+t^24*x*y^5");
    ElephantResult e1 = elephant_check(at_A(X1), 5, 1);
    CHECK(e1.du_val);
    CHECK(e1.modal.tag == SingularityReport::Tag::E);
    CHECK(e1.modal.index == 8);

    // case B: the member w^2+z^3+u z t^4+v t^6 is never du Val
    InstanceRng rng(103);
    for (int i = 0; i < 40; ++i) {
        CaseInstance ci = case_b_instance(rng);
        ElephantResult er = elephant_check(at_A(ci.fibration), 3, 1000 + i);
        CHECK(!er.du_val);
        CHECK(!er.degenerate);
    }

    // m > 6k contrapositive: members are not canonical
    CaseDOptions opt;
    opt.force_m_greater_6k = true;
    for (int i = 0; i < 25; ++i) {
        CaseInstance ci = case_d_instance(rng, opt);
        ElephantResult er = elephant_check(at_A(ci.fibration), 3, 2000 + i);
        CHECK(!er.du_val);
    }
}

TEST_CASE("k = l images are singular at B") {
    InstanceRng rng(107);
    CaseDOptions opt;
    opt.force_k_equal_l = true;
    int transformed = 0;
    for (int i = 0; i < 40; ++i) {
        CaseInstance ci = case_d_instance(rng, opt);
        TransformResult tr = transform_fibration(ci.fibration, ci.map);
        if (!tr.ok) continue;
        ++transformed;
        CHECK(is_singular_at(at_B(tr.result)));
    }
    CHECK(transformed > 0);
}
