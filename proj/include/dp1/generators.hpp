/* Seeded random instance generators for the case populations: the
 * impossible shapes A, B, C, valid case-D data satisfying the valuation
 * table, and general sextics with exactly normalizable unit scales.
 * Everything draws from an explicit mt19937_64 so runs are reproducible.
 */
#pragma once

#include <random>

#include "dp1/map_engine.hpp"
#include "dp1/normal_form.hpp"

namespace dp1 {

struct InstanceRng {
    std::mt19937_64 eng;
    explicit InstanceRng(std::uint64_t seed) : eng(seed) {}

    int uniform(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(eng);
    }
    Rational rational(int bound = 9, bool nonzero = false) {
        int n = uniform(nonzero ? 1 : 0, bound);
        if (n != 0 && uniform(0, 1)) n = -n;
        if (n == 0 && nonzero) n = 1;
        int d = uniform(1, bound);
        return Rational(n, d);
    }
    // random element of the DVR with valuation >= min_val
    TCoeff dvr_element(int min_val, int max_deg, int terms = 2, int bound = 9) {
        TCoeff r;
        for (int i = 0; i < terms; ++i)
            r.add_term(uniform(min_val, std::max(min_val, max_deg)), rational(bound));
        return r;
    }
    TCoeff unit(int max_deg = 4, int bound = 9) {
        TCoeff r = dvr_element(0, max_deg);
        if (r.coeff(0).is_zero()) r.add_term(0, rational(bound, true));
        return r;
    }
    BinaryForm binary_form(int degree, int min_val, int max_deg) {
        BinaryForm f(degree);
        for (int i = 0; i <= degree; ++i) {
            if (uniform(0, 3) == 0) continue;  // keep some sparsity
            f[i] = dvr_element(min_val, max_deg, 1 + uniform(0, 1));
        }
        return f;
    }
};

struct CaseInstance {
    Fibration fibration;
    MonomialMap map;
    int m = 0;
    int a = 0;  // case A parameter
    int k = 0, l = 0;
};

// Case A: (a, m, 0, 0) with 0 < a < m. The source-side forms are
// f4 = t^{4a} g4(x, t^{m-a} y), f6 = t^{6a} g6(x, t^{m-a} y).
inline CaseInstance case_a_instance(InstanceRng& rng, int max_m = 4, int tdeg = 12) {
    CaseInstance out;
    out.m = rng.uniform(2, max_m);
    out.a = rng.uniform(1, out.m - 1);
    int spare = std::max(0, tdeg - 6 * out.a - 6 * (out.m - out.a));
    BinaryForm g4 = rng.binary_form(4, 0, std::min(2, spare));
    BinaryForm g6 = rng.binary_form(6, 0, std::min(2, spare));
    if (g6[0].is_zero()) g6[0] = rng.unit(1);
    BinaryForm f4(4), f6(6);
    for (int i = 0; i <= 4; ++i) f4[i] = g4[i].shifted(4 * out.a + (out.m - out.a) * i);
    for (int i = 0; i <= 6; ++i) f6[i] = g6[i].shifted(6 * out.a + (out.m - out.a) * i);
    out.fibration = Fibration(f4, f6, /*allow_degenerate=*/true);
    out.map = solve_weights({out.a, out.m, 0, 0});
    return out;
}

// Case C: (m, m, 0, 0); substitute a = m above (the forms lose the
// y-scaling and gain the full t^{4m}/t^{6m} factors).
inline CaseInstance case_c_instance(InstanceRng& rng, int max_m = 4, int tdeg = 12) {
    CaseInstance out;
    out.m = rng.uniform(1, std::min(max_m, 2));
    BinaryForm g4 = rng.binary_form(4, 0, 1);
    BinaryForm g6 = rng.binary_form(6, 0, 1);
    if (g6[0].is_zero()) g6[0] = rng.unit(1);
    BinaryForm f4(4), f6(6);
    for (int i = 0; i <= 4; ++i) f4[i] = g4[i].shifted(4 * out.m);
    for (int i = 0; i <= 6; ++i) f6[i] = g6[i].shifted(6 * out.m);
    (void)tdeg;
    out.fibration = Fibration(f4, f6, true);
    out.map = solve_weights({out.m, out.m, 0, 0});
    return out;
}

// Case B: (0, m, 0, 0); the forms are f4 = sum a_i t^{mi} x^{4-i} y^i,
// f6 = sum b_i t^{mi} x^{6-i} y^i with a unit in a leading slot so the
// sampled anticanonical members have a nonzero reduction.
inline CaseInstance case_b_instance(InstanceRng& rng, int max_m = 4, int tdeg = 12) {
    CaseInstance out;
    out.m = rng.uniform(1, max_m);
    BinaryForm f4(4), f6(6);
    for (int i = 0; i <= 4; ++i) {
        if (rng.uniform(0, 2) == 0) continue;
        if (out.m * i > tdeg) continue;
        f4[i] = rng.dvr_element(0, 1).shifted(out.m * i);
    }
    for (int i = 0; i <= 6; ++i) {
        if (rng.uniform(0, 2) == 0) continue;
        if (out.m * i > tdeg) continue;
        f6[i] = rng.dvr_element(0, 1).shifted(out.m * i);
    }
    if (rng.uniform(0, 1)) {
        f4[0] = rng.unit(1);
    } else {
        f6[0] = rng.unit(1);
    }
    out.fibration = Fibration(f4, f6, true);
    out.map = solve_weights({0, out.m, 0, 0});
    return out;
}

struct CaseDOptions {
    int max_k = 2;
    int max_l = 7;
    bool force_smooth_shape = false;  // m = 6k with a unit f6[1]
    bool force_m_greater_6k = false;  // the lemma's contrapositive region
    bool force_k_equal_l = false;
};

// Case D data satisfying the valuation table: v(f4[i]) >= max(i m - 4k, 0)
// and v(f6[i]) >= max(i m - 6k, 0), with the map (0, m, 2k, 3k).
inline CaseInstance case_d_instance(InstanceRng& rng, const CaseDOptions& opt = {}) {
    CaseInstance out;
    out.k = rng.uniform(1, opt.max_k);
    if (opt.force_smooth_shape) {
        out.l = 5 * out.k;
    } else if (opt.force_m_greater_6k) {
        out.l = rng.uniform(5 * out.k + 1, 7 * out.k + 2);
    } else if (opt.force_k_equal_l) {
        out.l = out.k;
    } else {
        // stay inside m <= 6k, the region left open by the lemma
        out.l = rng.uniform(out.k, std::min(opt.max_l, 5 * out.k));
    }
    out.m = out.k + out.l;
    BinaryForm f4(4), f6(6);
    for (int i = 0; i <= 4; ++i) {
        if (rng.uniform(0, 2) == 0) continue;
        int mv = std::max(i * out.m - 4 * out.k, 0);
        f4[i] = rng.dvr_element(mv, mv + 2, 1 + rng.uniform(0, 1));
    }
    for (int i = 0; i <= 6; ++i) {
        if (rng.uniform(0, 2) == 0) continue;
        int mv = std::max(i * out.m - 6 * out.k, 0);
        f6[i] = rng.dvr_element(mv, mv + 2, 1 + rng.uniform(0, 1));
    }
    if (opt.force_smooth_shape) {
        // valuation exactly 6k - m = 0 with a unit leading part
        f6[1] = rng.unit(2);
    }
    if (opt.force_m_greater_6k && !f4[0].is_unit() && !f6[0].is_unit()) {
        // the sampled anticanonical members need a unit u or v
        f6[0] = rng.unit(1);
    }
    if (f4.is_zero_mod_t() && f6.is_zero_mod_t()) {
        // keep the central fiber away from the cone without breaking the
        // table: the f6[0] slot is unconstrained
        f6[0] = rng.unit(1);
    }
    out.fibration = Fibration(f4, f6, true);
    out.map = solve_weights({0, out.m, 2 * out.k, 3 * out.k});
    return out;
}

// A general sextic produced from the normal form by an exactly invertible
// change: unit rescale lambda = sigma^6 and the triangular substitution
// w -> mu w + s1 z + s3, z -> nu z + s2. Normalization recovers the
// normal form with an exact back-substitution certificate.
inline GeneralSextic general_sextic_random(InstanceRng& rng) {
    Rational sigma = rng.rational(3, true);
    Rational mu = rng.rational(3, true);
    Rational nu = rng.rational(3, true);
    TCoeff lambda(sigma.pow(6));
    BinaryForm f4 = rng.binary_form(4, 0, 2);
    BinaryForm f6 = rng.binary_form(6, 0, 2);
    BinaryForm s1 = rng.binary_form(1, 0, 2);
    BinaryForm s2 = rng.binary_form(2, 0, 2);
    BinaryForm s3 = rng.binary_form(3, 0, 2);

    VarSet set = VarSet::XYZW;
    WPoly w = WPoly::variable(kVarW, set), z = WPoly::variable(kVarZ, set);
    WPoly wimg = w.scaled(TCoeff(mu)) + z * s1.to_wpoly(set) + s3.to_wpoly(set);
    WPoly zimg = z.scaled(TCoeff(nu)) + s2.to_wpoly(set);
    WPoly poly = wimg * wimg + zimg * zimg * zimg + zimg * f4.to_wpoly(set) +
                 f6.to_wpoly(set);
    return GeneralSextic::from_wpoly(poly.scaled(lambda));
}

}  // namespace dp1
