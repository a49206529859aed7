/* The claim suite behind `dp1 verify-paper`: re-derives every checkable
 * statement of the case analysis, the worked examples, and the
 * exceptional-chain identities, and reports pass/fail per claim with
 * evidence. Deterministic under a fixed seed.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "dp1/chain_lattice.hpp"
#include "dp1/fiber_analysis.hpp"
#include "dp1/generators.hpp"
#include "dp1/json_io.hpp"

namespace dp1 {

struct ClaimResult {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string got;
    std::vector<std::string> evidence;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 7;
    int blowup_bound = 30;
    int population = 200;        // instances per impossible case
    int case_d_population = 500;
    std::string filter;          // claim-id prefix filter; empty = all
};

namespace claims {

inline Instance example1() {
    Instance ins;
    ins.fibration = Fibration::from_wpoly(parse_wpoly("w^2+z^3+x^5*y+t^24*x*y^5"));
    ins.map = solve_weights({0, 6, 2, 3});
    return ins;
}
inline Instance example2() {
    Instance ins;
    ins.fibration = Fibration::from_wpoly(parse_wpoly("w^2+z^3+t^4*x^5*y+x*y^5"));
    ins.map = solve_weights({2, 0, 2, 3});
    return ins;
}
inline Instance example3a() {
    Instance ins;
    ins.fibration =
        Fibration::from_wpoly(parse_wpoly("w^2+z^3+t*z*x^2*y^2+t*x^6+t^7*y^6"), true);
    ins.map = solve_weights({2, 0, 2, 3});
    return ins;
}
inline Instance example3b() {
    Instance ins;
    ins.fibration = Fibration::from_wpoly(
        parse_wpoly("w^2+z^3-3*z*x^2*y^2+t*x^6+2*x^3*y^3+t^7*y^6"), true);
    ins.map = solve_weights({2, 0, 2, 3});
    return ins;
}

inline AffineGerm germ_at_A(const Fibration& X) {
    return make_germ(X, kVarY, {Rational(0), Rational(1), Rational(0), Rational(0)});
}
inline AffineGerm germ_at_B(const Fibration& V) {
    return make_germ(V, kVarX, {Rational(1), Rational(0), Rational(0), Rational(0)});
}

}  // namespace claims

inline std::vector<ClaimResult> run_verify_paper(const VerifyOptions& opt = {}) {
    std::vector<ClaimResult> results;
    auto want = [&](const std::string& id) {
        return opt.filter.empty() || id.rfind(opt.filter, 0) == 0;
    };
    auto add = [&](const std::string& id, const std::string& expected,
                   const std::function<void(ClaimResult&)>& body) {
        if (!want(id)) return;
        ClaimResult r;
        r.id = id;
        r.expected = expected;
        try {
            body(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.got = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    };

    // --- normal form round trip ---------------------------------------
    add("S2.normal_form.roundtrip", "exact back-substitution and idempotence",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed);
            int n = 40, ok = 0;
            for (int i = 0; i < n; ++i) {
                GeneralSextic s = general_sextic_random(rng);
                NormalizeResult nr = normalize_sextic(s);
                bool good = nr.record.apply(nr.fibration.to_wpoly()) == s.to_wpoly();
                NormalizeResult again =
                    normalize_sextic(GeneralSextic::from_wpoly(nr.fibration.to_wpoly()));
                good = good && again.record.is_identity() &&
                       again.fibration == nr.fibration;
                if (good) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(n) + " exact";
            r.pass = ok == n;
        });

    // --- the impossible cases ------------------------------------------
    add("S3.caseA.impossible", "singular along {t=w=z=0} in every instance",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 11);
            int ok = 0;
            for (int i = 0; i < opt.population; ++i) {
                CaseInstance ci = case_a_instance(rng);
                CurveCheckResult cc = singular_curve_check(
                    ci.fibration, true, {false, false, true, true});
                if (cc.contained && cc.singular_along) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(opt.population);
            r.pass = ok == opt.population;
        });
    add("S3.caseB.impossible", "general anticanonical member never du Val",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 12);
            int ok = 0;
            for (int i = 0; i < opt.population; ++i) {
                CaseInstance ci = case_b_instance(rng);
                ElephantResult er = elephant_check(claims::germ_at_A(ci.fibration), 3,
                                                   opt.seed + i, opt.blowup_bound);
                if (!er.du_val && !er.degenerate) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(opt.population);
            r.pass = ok == opt.population;
        });
    add("S3.caseC.impossible", "singular along {t=w=z=0} in every instance",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 13);
            int ok = 0;
            for (int i = 0; i < opt.population; ++i) {
                CaseInstance ci = case_c_instance(rng);
                CurveCheckResult cc = singular_curve_check(
                    ci.fibration, true, {false, false, true, true});
                if (cc.contained && cc.singular_along) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(opt.population);
            r.pass = ok == opt.population;
        });

    // --- case D ---------------------------------------------------------
    add("S3.caseD.always_singular", "the contracted point A is singular on X",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 14);
            int ok = 0;
            for (int i = 0; i < opt.case_d_population; ++i) {
                CaseInstance ci = case_d_instance(rng);
                if (is_singular_at(claims::germ_at_A(ci.fibration))) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(opt.case_d_population);
            r.pass = ok == opt.case_d_population;
        });
    add("S3.lemma_m6k.contrapositive",
        "m > 6k forces a non-canonical anticanonical member",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 15);
            CaseDOptions o;
            o.force_m_greater_6k = true;
            int n = 60, ok = 0;
            for (int i = 0; i < n; ++i) {
                CaseInstance ci = case_d_instance(rng, o);
                ElephantResult er = elephant_check(claims::germ_at_A(ci.fibration), 3,
                                                   opt.seed + i, opt.blowup_bound);
                if (!er.du_val && !er.degenerate) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(n);
            r.pass = ok == n;
        });
    add("S3.k_eq_l.B_singular", "for k = l the image is singular at B",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 16);
            CaseDOptions o;
            o.force_k_equal_l = true;
            int n = 80, ok = 0, transformed = 0;
            for (int i = 0; i < n; ++i) {
                CaseInstance ci = case_d_instance(rng, o);
                TransformResult tr = transform_fibration(ci.fibration, ci.map);
                if (!tr.ok) continue;
                ++transformed;
                if (is_singular_at(claims::germ_at_B(tr.result))) ++ok;
            }
            r.got = std::to_string(ok) + "/" + std::to_string(transformed) +
                    " transformed instances singular at B";
            r.pass = transformed > 0 && ok == transformed;
        });
    add("S3.smoothV.necessary", "V smooth at B forces m = 6k and a unit beta_1",
        [&](ClaimResult& r) {
            InstanceRng rng(opt.seed + 17);
            int smooth_seen = 0;
            bool all_consistent = true;
            for (int i = 0; i < opt.case_d_population; ++i) {
                CaseDOptions o;
                o.force_smooth_shape = (i % 3 == 0);
                CaseInstance ci = case_d_instance(rng, o);
                TransformResult tr = transform_fibration(ci.fibration, ci.map);
                if (!tr.ok) continue;
                bool smooth_at_B = !is_singular_at(claims::germ_at_B(tr.result));
                if (!smooth_at_B) continue;
                ++smooth_seen;
                // beta_1 is the p^5 q coefficient of the image divided by
                // t^{6k-m}; smoothness must force m = 6k and beta_1 a unit
                const TCoeff& b1 = tr.result.f6[1];
                bool conds = (ci.m == 6 * ci.k) && b1.is_unit();
                if (!conds) all_consistent = false;
            }
            r.got = std::to_string(smooth_seen) + " smooth-at-B instances, " +
                    (all_consistent ? "all" : "not all") + " satisfy the conditions";
            r.pass = smooth_seen > 0 && all_consistent;
        });
    add("S3.smoothV.E8_central",
        "central fiber of the smooth-image configuration has exactly one E8 point",
        [&](ClaimResult& r) {
            CentralFiberReport fr =
                central_fiber_type(claims::example1().fibration, opt.blowup_bound);
            bool one_e8 = fr.kind == CentralFiberReport::Kind::Normal &&
                          fr.points.size() == 1 && fr.conjugate_sets.empty() &&
                          fr.points[0].tag == SingularityReport::Tag::E &&
                          fr.points[0].index == 8;
            r.got = std::to_string(fr.points.size()) + " singular point(s)" +
                    (fr.points.empty() ? "" : ", first " + fr.points[0].tag_name());
            r.pass = one_e8;
        });

    // --- worked examples -------------------------------------------------
    auto transform_claim = [&](const std::string& id, const Instance& ins,
                               const std::string& expect_eq) {
        add(id, expect_eq, [&](ClaimResult& r) {
            TransformResult tr = transform_fibration(ins.fibration, ins.map);
            if (!tr.ok) {
                r.got = "transform failed: " + tr.error;
                return;
            }
            r.got = tr.result.to_string(VarSet::PQRS);
            r.evidence.push_back("cleared valuation " +
                                 std::to_string(tr.cleared_valuation));
            r.pass = r.got == expect_eq;
        });
    };
    transform_claim("S4.example1.transform", claims::example1(),
                    "s^2 + r^3 + p^5*q + p*q^5");
    transform_claim("S4.example2.transform", claims::example2(),
                    "s^2 + r^3 + p^5*q + t^4*p*q^5");
    transform_claim("S4.example3a.transform", claims::example3a(),
                    "s^2 + r^3 + t*r*p^2*q^2 + t^7*p^6 + t*q^6");
    transform_claim("S4.example3b.transform", claims::example3b(),
                    "s^2 + r^3 - 3*r*p^2*q^2 + t^7*p^6 + 2*p^3*q^3 + t*q^6");

    add("S4.example1.cleared_valuation",
        "clearing exponent equals 2*delta = 3*gamma = 30",
        [&](ClaimResult& r) {
            Instance ins = claims::example1();
            TransformResult tr = transform_fibration(ins.fibration, ins.map);
            r.got = std::to_string(tr.cleared_valuation);
            r.pass = tr.ok && tr.cleared_valuation == 30 &&
                     tr.cleared_valuation == 2 * ins.map.inv[3] &&
                     3 * ins.map.inv[2] == 2 * ins.map.inv[3];
        });

    add("S4.example2.relabel", "X and its image match under w=s,z=r,x=q,y=p",
        [&](ClaimResult& r) {
            Instance ins = claims::example2();
            TransformResult tr = transform_fibration(ins.fibration, ins.map);
            if (!tr.ok) {
                r.got = "transform failed";
                return;
            }
            // relabel p<->y, q<->x on the image and compare with X
            Fibration relabeled = tr.result.swapped_xy();
            r.pass = relabeled == ins.fibration;
            r.got = r.pass ? "isomorphic as polynomials" : "mismatch";
        });

    add("S4.example1.smooth_V", "image certified smooth everywhere",
        [&](ClaimResult& r) {
            Instance ins = claims::example1();
            TransformResult tr = transform_fibration(ins.fibration, ins.map);
            SmoothnessReport sr =
                smoothness_scan(tr.result, opt.blowup_bound, opt.trials, opt.seed);
            r.got = sr.certified_smooth ? "certified smooth" : "not certified";
            for (const auto& u : sr.unresolved) r.evidence.push_back(u);
            r.pass = tr.ok && sr.certified_smooth;
        });

    auto cdv_claim = [&](const std::string& id, const Fibration& X,
                         const std::string& expect, SingularityReport::Tag tag,
                         int index) {
        add(id, expect, [&](ClaimResult& r) {
            SingularityReport s1 = classify_cDV(claims::germ_at_A(X), opt.trials,
                                                opt.seed, opt.blowup_bound);
            SingularityReport s2 = classify_cDV(claims::germ_at_A(X), opt.trials,
                                                opt.seed + 1, opt.blowup_bound);
            r.got = s1.tag_name() + " / " + s2.tag_name() + " (two seeds)";
            bool stable = s1.tag == s2.tag && s1.index == s2.index &&
                          s1.status == SingularityReport::Status::Classified &&
                          s2.status == SingularityReport::Status::Classified;
            r.pass = stable && s1.tag == tag && s1.index == index;
            for (const auto& e : s1.evidence) r.evidence.push_back(e);
        });
    };
    cdv_claim("S4.example1.cdv", claims::example1().fibration, "cE8",
              SingularityReport::Tag::E, 8);
    // the singular point of example 2 sits at (1:0:0:0); swap the roles
    // of x and y so the shared germ-at-A helper applies
    Fibration example2_swapped = claims::example2().fibration.swapped_xy();
    cdv_claim("S4.example2.cdv", example2_swapped, "cE8",
              SingularityReport::Tag::E, 8);
    cdv_claim("S4.example3a.cdv", claims::example3a().fibration, "cE7",
              SingularityReport::Tag::E, 7);
    // the claimed type here is cD4; the computed general hyperplane
    // section is D8, stable across seeds, so this claim fails
    cdv_claim("S4.example3b.cdv", claims::example3b().fibration, "cD4",
              SingularityReport::Tag::D, 4);

    add("S4.example3a.cusp_fiber", "central fiber is the non-normal cusp",
        [&](ClaimResult& r) {
            CentralFiberReport fr = central_fiber_type(claims::example3a().fibration);
            r.got = fr.kind == CentralFiberReport::Kind::NonNormalCusp
                        ? "non-normal-cusp"
                        : "other";
            r.pass = fr.kind == CentralFiberReport::Kind::NonNormalCusp;
        });
    add("S4.example3b.node_fiber", "central fiber is the non-normal node",
        [&](ClaimResult& r) {
            CentralFiberReport fr = central_fiber_type(claims::example3b().fibration);
            r.got = fr.kind == CentralFiberReport::Kind::NonNormalNode
                        ? "non-normal-node along " + fr.node_double_curve
                        : "other";
            r.pass = fr.kind == CentralFiberReport::Kind::NonNormalNode;
        });

    // --- remarks ----------------------------------------------------------
    add("S5.rationality.elliptic_excluded",
        "the minimally elliptic fiber germ is recognized and flagged",
        [&](ClaimResult& r) {
            Fibration X = Fibration::from_wpoly(parse_wpoly("w^2+z^3-z*x^4"), true);
            CentralFiberReport fr = central_fiber_type(X);
            bool found = fr.kind == CentralFiberReport::Kind::Normal &&
                         fr.points.size() == 1 &&
                         fr.points[0].tag == SingularityReport::Tag::MinimallyElliptic &&
                         fr.rationality_violation;
            r.got = fr.points.empty() ? "no singular point" : fr.points[0].tag_name();
            r.pass = found;
        });
    add("S5.chain.identities", "canonical-class identities hold for n = 0..16",
        [&](ClaimResult& r) {
            bool all = true;
            for (int n = 0; n <= 16; ++n) {
                ChainIdentityReport rep = verify_canonical_identities(n);
                if (!rep.all_pass()) {
                    all = false;
                    r.evidence.push_back("n=" + std::to_string(n) + " failed");
                }
            }
            r.got = all ? "all n pass" : "failures";
            r.pass = all;
        });

    std::sort(results.begin(), results.end(),
              [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
    return results;
}

inline json verify_report_to_json(const std::vector<ClaimResult>& rs) {
    json j = json::array();
    for (const auto& r : rs) {
        json c;
        c["id"] = r.id;
        c["pass"] = r.pass;
        c["expected"] = r.expected;
        c["got"] = r.got;
        if (!r.evidence.empty()) c["evidence"] = r.evidence;
        j.push_back(c);
    }
    return j;
}

}  // namespace dp1
