/* Acceptance suite: one line per criterion, exact checks throughout
 * (the arithmetic is exact, so every tolerance is zero). Exits with the
 * number of failed criteria.
 */
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "dp1/dp1.hpp"

using namespace dp1;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

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

int main() {
    // ------------------------------------------------------------------
    criterion(1, "first worked transform reproduced exactly", [](std::string& d) {
        Fibration X = fib("w^2+z^3+x^5*y+t^24*x*y^5");
        MonomialMap m = solve_weights({0, 6, 2, 3});
        TransformResult t = transform_fibration(X, m);
        std::string eq = t.ok ? t.result.to_string(VarSet::PQRS) : "(failed)";
        // the cleared power is t^{2 delta} = t^{3 gamma} = t^30 here
        // (the weight system gives 6m - 2d, not 6m, once d > 0)
        bool valuation_ok = t.cleared_valuation == 30 &&
                            t.cleared_valuation == 2 * m.inv[3] &&
                            3 * m.inv[2] == 2 * m.inv[3];
        d = eq + ", cleared t^" + std::to_string(t.cleared_valuation);
        return t.ok && eq == "s^2 + r^3 + p^5*q + p*q^5" && valuation_ok;
    });

    // ------------------------------------------------------------------
    criterion(2, "remaining worked transforms and the relabel isomorphism",
              [](std::string& d) {
                  MonomialMap m = solve_weights({2, 0, 2, 3});
                  Fibration X2 = fib("w^2+z^3+t^4*x^5*y+x*y^5");
                  TransformResult t2 = transform_fibration(X2, m);
                  bool ok2 = t2.ok && t2.result.to_string(VarSet::PQRS) ==
                                          "s^2 + r^3 + p^5*q + t^4*p*q^5";
                  Fibration X3a = fib("w^2+z^3+t*z*x^2*y^2+t*x^6+t^7*y^6");
                  TransformResult t3a = transform_fibration(X3a, m);
                  bool ok3a = t3a.ok && t3a.result.to_string(VarSet::PQRS) ==
                                            "s^2 + r^3 + t*r*p^2*q^2 + t^7*p^6 + t*q^6";
                  Fibration X3b =
                      fib("w^2+z^3-3*z*x^2*y^2+t*x^6+2*x^3*y^3+t^7*y^6");
                  TransformResult t3b = transform_fibration(X3b, m);
                  bool ok3b = t3b.ok &&
                              t3b.result.to_string(VarSet::PQRS) ==
                                  "s^2 + r^3 - 3*r*p^2*q^2 + t^7*p^6 + 2*p^3*q^3 + t*q^6";
                  // relabel w=s, z=r, x=q, y=p identifies X2 with its image
                  bool relabel = t2.ok && t2.result.swapped_xy() == X2;
                  d = std::string(ok2 ? "2 ok" : "2 FAIL") + ", " +
                      (ok3a ? "3a ok" : "3a FAIL") + ", " + (ok3b ? "3b ok" : "3b FAIL") +
                      ", relabel " + (relabel ? "ok" : "FAIL");
                  return ok2 && ok3a && ok3b && relabel;
              });

    // ------------------------------------------------------------------
    criterion(3, "cases A, B, C impossible on 200 seeded instances each",
              [](std::string& d) {
                  InstanceRng rng(2024);
                  int okA = 0, okB = 0, okC = 0;
                  const int N = 200;
                  for (int i = 0; i < N; ++i) {
                      CaseInstance a = case_a_instance(rng);
                      CurveCheckResult ra = singular_curve_check(
                          a.fibration, true, {false, false, true, true});
                      if (ra.contained && ra.singular_along) ++okA;
                  }
                  for (int i = 0; i < N; ++i) {
                      CaseInstance b = case_b_instance(rng);
                      ElephantResult rb = elephant_check(at_A(b.fibration), 3, 9000 + i);
                      if (!rb.du_val && !rb.degenerate) ++okB;
                  }
                  for (int i = 0; i < N; ++i) {
                      CaseInstance c = case_c_instance(rng);
                      CurveCheckResult rc = singular_curve_check(
                          c.fibration, true, {false, false, true, true});
                      if (rc.contained && rc.singular_along) ++okC;
                  }
                  d = "A " + std::to_string(okA) + "/200, B " + std::to_string(okB) +
                      "/200, C " + std::to_string(okC) + "/200";
                  return okA == N && okB == N && okC == N;
              });

    // ------------------------------------------------------------------
    criterion(4, "case D: the contracted point is singular on 500 instances",
              [](std::string& d) {
                  InstanceRng rng(777);
                  const int N = 500;
                  int ok = 0;
                  for (int i = 0; i < N; ++i) {
                      CaseInstance ci = case_d_instance(rng);
                      if (is_singular_at(at_A(ci.fibration))) ++ok;
                  }
                  d = std::to_string(ok) + "/500";
                  return ok == N;
              });

    // ------------------------------------------------------------------
    criterion(5, "smoothness necessary conditions and the certified smooth image",
              [](std::string& d) {
                  // the same seeded population as criterion 4
                  InstanceRng rng(777);
                  const int N = 500;
                  int smooth_seen = 0;
                  bool consistent = true;
                  auto check_one = [&](const CaseInstance& ci) {
                      TransformResult tr = transform_fibration(ci.fibration, ci.map);
                      if (!tr.ok) {
                          consistent = false;  // table-built data must transform
                          return;
                      }
                      if (is_singular_at(at_B(tr.result))) return;
                      ++smooth_seen;
                      if (!(ci.m == 6 * ci.k && tr.result.f6[1].is_unit()))
                          consistent = false;
                  };
                  for (int i = 0; i < N; ++i) check_one(case_d_instance(rng));
                  // a forced-shape batch guards the implication against
                  // being vacuously true
                  InstanceRng rng2(888);
                  CaseDOptions o;
                  o.force_smooth_shape = true;
                  for (int i = 0; i < 50; ++i) check_one(case_d_instance(rng2, o));

                  Fibration X1 = fib("w^2+z^3+x^5*y+t^24*x*y^5");
                  TransformResult t1 =
                      transform_fibration(X1, solve_weights({0, 6, 2, 3}));
                  SmoothnessReport sr = smoothness_scan(t1.result);
                  d = std::to_string(smooth_seen) + " smooth-at-B instances, image " +
                      (sr.certified_smooth ? "certified smooth" : "NOT certified");
                  return consistent && smooth_seen > 0 && sr.certified_smooth;
              });

    // ------------------------------------------------------------------
    criterion(6, "curve classifier matches the Milnor oracle on the germ library",
              [](std::string& d) {
                  auto P = [](int c, int eu, int ev) {
                      return PlanePoly::term(Rational(c), eu, ev);
                  };
                  struct G {
                      PlanePoly f;
                      bool simple;
                  };
                  std::vector<G> lib;
                  for (int n = 1; n <= 5; ++n)
                      lib.push_back({P(1, 0, 2) + P(1, n + 1, 0), true});
                  lib.push_back({P(1, 0, 3) - P(1, 2, 1), true});       // 3 lines
                  lib.push_back({P(1, 0, 3) - P(1, 3, 1), true});       // mu 7
                  lib.push_back({P(1, 0, 3) - P(1, 4, 1), false});      // mu 10
                  lib.push_back({P(1, 0, 3) - P(1, 5, 1), false});      // mu 13
                  lib.push_back({P(1, 0, 3) + P(1, 4, 0), true});       // mu 6
                  lib.push_back({P(1, 0, 3) + P(1, 5, 0), true});       // mu 8
                  lib.push_back({P(1, 0, 3) + P(1, 3, 1), true});       // mu 7
                  // three linear-change scrambles of the last three
                  std::vector<std::array<int, 4>> changes = {
                      {1, 1, 0, 1}, {2, 1, 1, 1}, {1, -1, 1, 2}};
                  std::size_t base = lib.size() - 3;
                  for (std::size_t i = 0; i < 3; ++i)
                      lib.push_back({lib[base + i].f.linear_change(
                                         Rational(changes[i][0]), Rational(changes[i][1]),
                                         Rational(changes[i][2]), Rational(changes[i][3])),
                                     lib[base + i].simple});
                  int checked = 0;
                  bool all = true;
                  for (std::size_t i = 0; i < lib.size(); ++i) {
                      CurveClass r = classify_plane_germ(lib[i].f);
                      std::optional<long long> mu;
                      if (i >= base + 3) {
                          mu = oracles::quasihomogeneous_milnor(lib[i - 3].f);
                      } else {
                          mu = oracles::quasihomogeneous_milnor(lib[i].f);
                      }
                      if (!mu || r.milnor != *mu || r.is_simple() != lib[i].simple)
                          all = false;
                      ++checked;
                  }
                  // z^3 + u z t^4 + v t^6 is never simple, 20 seeded (u,v)
                  InstanceRng rng(4242);
                  int notsimple = 0;
                  for (int i = 0; i < 20; ++i) {
                      Rational u = rng.rational(9), v = rng.rational(9);
                      if (u.is_zero() && v.is_zero()) v = Rational(1);
                      PlanePoly f = P(1, 0, 3) +
                                    PlanePoly::term(u, 4, 1) +
                                    PlanePoly::term(v, 6, 0);
                      if (!classify_plane_germ(f).is_simple()) ++notsimple;
                  }
                  d = std::to_string(checked) + " library germs, " +
                      std::to_string(notsimple) + "/20 obstruction germs not simple";
                  return all && notsimple == 20;
              });

    // ------------------------------------------------------------------
    criterion(7, "compound du Val types of the worked examples (2 seeds x 7 trials)",
              [](std::string& d) {
                  struct C {
                      Fibration X;
                      SingularityReport::Tag tag;
                      int index;
                      const char* label;
                  };
                  std::vector<C> cases;
                  cases.push_back({fib("w^2+z^3+t^4*x^5*y+x*y^5").swapped_xy(),
                                   SingularityReport::Tag::E, 8, "cE8"});
                  cases.push_back({fib("w^2+z^3+t*z*x^2*y^2+t*x^6+t^7*y^6"),
                                   SingularityReport::Tag::E, 7, "cE7"});
                  // the claimed type for the node-case example is cD4;
                  // the computed general hyperplane section is D8 stably,
                  // so this sub-check is expected red
                  cases.push_back({fib("w^2+z^3-3*z*x^2*y^2+t*x^6+2*x^3*y^3+t^7*y^6"),
                                   SingularityReport::Tag::D, 4, "cD4"});
                  bool all = true;
                  d.clear();
                  for (const auto& c : cases) {
                      SingularityReport r1 = classify_cDV(at_A(c.X), 7, 1);
                      SingularityReport r2 = classify_cDV(at_A(c.X), 7, 2);
                      bool stable = r1.tag == r2.tag && r1.index == r2.index &&
                                    r1.status == SingularityReport::Status::Classified;
                      bool match = stable && r1.tag == c.tag && r1.index == c.index;
                      if (!match) all = false;
                      if (!d.empty()) d += ", ";
                      d += std::string(c.label) + " -> " + r1.tag_name();
                  }
                  // the central-fiber claim of the smooth-image configuration
                  CentralFiberReport fr =
                      central_fiber_type(fib("w^2+z^3+x^5*y+t^24*x*y^5"));
                  bool e8 = fr.kind == CentralFiberReport::Kind::Normal &&
                            fr.points.size() == 1 &&
                            fr.points[0].tag == SingularityReport::Tag::E &&
                            fr.points[0].index == 8;
                  d += std::string(", central E8 ") + (e8 ? "ok" : "FAIL");
                  return all && e8;
              });

    // ------------------------------------------------------------------
    criterion(8, "chain identities for n = 0..64", [](std::string& d) {
        int ok = 0;
        for (int n = 0; n <= 64; ++n) {
            ChainIdentityReport r = verify_canonical_identities(n);
            if (r.all_pass() && r.fiber_multiple == n + 1) ++ok;
        }
        d = std::to_string(ok) + "/65";
        return ok == 65;
    });

    // ------------------------------------------------------------------
    criterion(9, "transform round trips and exact normalization, 300 instances each",
              [](std::string& d) {
                  InstanceRng rng(31337);
                  const int N = 300;
                  int ok_rt = 0;
                  for (int i = 0; i < N; ++i) {
                      CaseInstance ci = case_d_instance(rng);
                      TransformResult fwd = transform_fibration(ci.fibration, ci.map);
                      if (!fwd.ok) continue;
                      TransformResult back =
                          transform_fibration(fwd.result, ci.map.inverse());
                      if (back.ok && back.result == ci.fibration) ++ok_rt;
                  }
                  InstanceRng rng2(271828);
                  int ok_nf = 0;
                  for (int i = 0; i < N; ++i) {
                      GeneralSextic s = general_sextic_random(rng2);
                      NormalizeResult n = normalize_sextic(s);
                      bool exact = n.record.apply(n.fibration.to_wpoly()) == s.to_wpoly();
                      NormalizeResult again = normalize_sextic(
                          GeneralSextic::from_wpoly(n.fibration.to_wpoly()));
                      if (exact && again.record.is_identity() &&
                          again.fibration == n.fibration)
                          ++ok_nf;
                  }
                  d = "round trips " + std::to_string(ok_rt) + "/300, normalizations " +
                      std::to_string(ok_nf) + "/300";
                  return ok_rt == N && ok_nf == N;
              });

    std::cout << (g_failures == 0
                      ? "acceptance: all criteria pass"
                      : "acceptance: " + std::to_string(g_failures) +
                            " criterion(s) failed")
              << std::endl;
    return g_failures;
}
