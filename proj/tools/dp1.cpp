/* dp1 -- exact toolkit for degree-1 del Pezzo fibrations in P(1,1,2,3)
 * over a discrete valuation ring.
 *
 * Subcommands: normalize, transform, classify-map, singularities, chain,
 * verify-paper. Exit codes: 0 success, 1 failed claims (verify-paper),
 * 2 constraint violation (transform), 3 malformed input.
 */
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dp1/dp1.hpp"

namespace {

using namespace dp1;

int cmd_normalize(const std::string& sextic_text, const std::string& out_path,
                  int guard, bool text_mode) {
    GeneralSextic s = GeneralSextic::from_wpoly(parse_wpoly(sextic_text));
    GorensteinResult g = gorenstein_check(s);
    if (!g.ok) {
        std::cerr << "not Gorenstein-embeddable: coefficient " << g.offending_coefficient
                  << " is a non-unit; the central fiber passes through "
                  << g.singular_point << "\n";
        return 2;
    }
    NormalizeResult nr = normalize_sextic(s, guard);
    json j;
    j["fibration"] = fibration_to_json(nr.fibration);
    j["equation"] = nr.fibration.to_string();
    j["change_of_coordinates"] = {
        {"w_new", ("(" + nr.record.u.to_string() + ")*w + (" +
                   nr.record.s1.to_string() + ")*z + (" + nr.record.s3.to_string() +
                   ")")},
        {"z_new", ("(" + nr.record.v.to_string() + ")*z + (" +
                   nr.record.b2.to_string() + ")")},
        {"identity", nr.record.is_identity()}};
    if (!out_path.empty()) emit_json(j, out_path);
    if (text_mode) {
        std::cout << "normal form: " << nr.fibration.to_string() << "\n";
        std::cout << "w_new = " << j["change_of_coordinates"]["w_new"].get<std::string>()
                  << "\n";
        std::cout << "z_new = " << j["change_of_coordinates"]["z_new"].get<std::string>()
                  << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_transform(const std::string& fib_path, const std::string& map_text,
                  const std::string& out_path, bool text_mode) {
    Fibration X = load_fibration(fib_path);
    MonomialMap map = parse_map(map_text);
    TransformResult tr = transform_fibration(X, map);
    json j = transform_result_to_json(tr);
    if (!out_path.empty() && tr.ok) emit_json(fibration_to_json(tr.result), out_path);
    if (text_mode) {
        if (tr.ok) {
            std::cout << "V: " << tr.result.to_string(VarSet::PQRS) << " = 0\n";
            std::cout << "cleared t^" << tr.cleared_valuation
                      << (tr.used_xy_swap ? " (after the x<->y swap)" : "") << "\n";
        } else {
            std::cout << "transform failed: " << tr.error << "\n";
            for (const auto& v : tr.violations)
                std::cout << "  " << v.monomial << " falls short by t^"
                          << v.required_deficit << "\n";
        }
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return tr.ok ? 0 : 2;
}

int cmd_classify(const std::string& map_text, bool text_mode) {
    MonomialMap map = parse_map(map_text);
    CaseClass cc = classify_case(map);
    json j;
    j["case"] = cc.tag_name();
    j["m"] = cc.m;
    if (cc.tag == CaseClass::Tag::D) {
        j["k"] = cc.k;
        j["l"] = cc.l;
    }
    j["swapped_xy"] = cc.swapped_xy;
    j["flipped"] = cc.flipped;
    j["inverse"] = map_to_json(map.inverse());
    if (text_mode) {
        std::cout << "case " << cc.tag_name() << ", m = " << cc.m;
        if (cc.tag == CaseClass::Tag::D)
            std::cout << ", k = " << cc.k << ", l = " << cc.l;
        std::cout << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

// point syntax: "(x:y:z:w)@t", rational entries
bool parse_point(const std::string& text, std::array<Rational, 4>& pt, Rational& t0) {
    std::string body = text;
    t0 = Rational(0);
    auto at = body.find('@');
    if (at != std::string::npos) {
        t0 = Rational::from_string(body.substr(at + 1));
        body = body.substr(0, at);
    }
    if (body.size() < 2 || body.front() != '(' || body.back() != ')') return false;
    body = body.substr(1, body.size() - 2);
    std::array<std::string, 4> parts;
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        auto colon = body.find(':', pos);
        if (i < 3 && colon == std::string::npos) return false;
        parts[i] = i < 3 ? body.substr(pos, colon - pos) : body.substr(pos);
        pos = colon + 1;
    }
    for (int i = 0; i < 4; ++i) pt[i] = Rational::from_string(parts[i]);
    return true;
}

int cmd_singularities(const std::string& fib_path, const std::string& point_text,
                      std::uint64_t seed, int trials, int bound, bool text_mode) {
    Fibration X = load_fibration(fib_path);
    json out;
    if (!point_text.empty()) {
        std::array<Rational, 4> pt;
        Rational t0;
        if (!parse_point(point_text, pt, t0)) {
            std::cerr << "bad point syntax, expected \"(x:y:z:w)@t\"\n";
            return 3;
        }
        int chart = !pt[kVarY].is_zero() ? kVarY : kVarX;
        if (pt[chart].is_zero()) {
            std::cerr << "point has x = y = 0; it cannot lie on the fibration\n";
            return 3;
        }
        for (int v = 0; v < 4; ++v) {
            int w = var_weight(v);
            pt[v] = pt[v] / pt[chart].pow(w);
        }
        AffineGerm germ = make_germ(X, chart, pt, t0);
        if (!is_singular_at(germ)) {
            out = {{"point", point_text}, {"singular", false}};
        } else {
            SingularityReport r = classify_cDV(germ, trials, seed, bound);
            r.location = point_text;
            out = singularity_report_to_json(r);
            out["singular"] = true;
        }
    } else {
        out["central_fiber"] = central_fiber_report_to_json(central_fiber_type(X, bound));
        out["total_space"] =
            smoothness_report_to_json(smoothness_scan(X, bound, trials, seed));
    }
    if (text_mode) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_chain(int n, bool text_mode) {
    ChainIdentityReport rep = verify_canonical_identities(n);
    json j = chain_report_to_json(rep);
    if (text_mode) {
        std::cout << "n = " << n << ": " << (rep.all_pass() ? "all identities hold" : "FAILED")
                  << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_verify(std::uint64_t seed, int trials, int bound, const std::string& filter,
               bool text_mode) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    opt.blowup_bound = bound;
    opt.filter = filter;
    std::vector<ClaimResult> rs = run_verify_paper(opt);
    bool all = true;
    if (text_mode) {
        for (const auto& r : rs) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.got;
            if (!r.pass) std::cout << " (expected " << r.expected << ")";
            std::cout << "\n";
            all = all && r.pass;
        }
        std::cout << (all ? "all claims pass" : "some claims FAILED") << "\n";
    } else {
        json j = verify_report_to_json(rs);
        for (const auto& r : rs) all = all && r.pass;
        std::cout << j.dump(2) << "\n";
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for degree-1 del Pezzo fibrations over a DVR"};
    app.require_subcommand(1);

    bool text_mode = false;
    bool json_mode = false;
    app.add_flag("--text", text_mode, "human-readable output");
    app.add_flag("--json", json_mode, "JSON output (default)");

    std::uint64_t seed = 1;
    int trials = 7;
    int bound = 30;
    app.add_option("--seed", seed, "seed for sampled sections")->capture_default_str();
    app.add_option("--trials", trials, "hyperplane-section trials")
        ->capture_default_str();
    app.add_option("--blowup-bound", bound, "blowup bound for the curve classifier")
        ->capture_default_str();

    auto* norm = app.add_subcommand("normalize", "reduce a general sextic to normal form");
    norm->fallthrough();
    std::string sextic_text, out_path;
    int guard = 8;
    norm->add_option("--sextic", sextic_text, "sextic in the polynomial grammar")
        ->required();
    norm->add_option("--out", out_path, "write the fibration JSON here");
    norm->add_option("--guard", guard, "series precision guard")->capture_default_str();

    auto* tr = app.add_subcommand("transform", "apply a monomial map to a fibration");
    tr->fallthrough();
    std::string fib_path, map_text;
    tr->add_option("--fibration", fib_path, "fibration or instance JSON file")
        ->required();
    tr->add_option("--map", map_text, "forward exponents \"a,b,c,d\"")->required();
    tr->add_option("--out", out_path, "write the image fibration JSON here");

    auto* cl = app.add_subcommand("classify-map", "classify a map into cases A-D");
    cl->fallthrough();
    cl->add_option("--map", map_text, "forward exponents \"a,b,c,d\"")->required();

    auto* si = app.add_subcommand("singularities", "singularity analysis of a fibration");
    si->fallthrough();
    std::string point_text;
    si->add_option("--fibration", fib_path, "fibration or instance JSON file")
        ->required();
    si->add_option("--point", point_text, "classify at \"(x:y:z:w)@t\" only");

    auto* ch = app.add_subcommand("chain", "exceptional-chain lattice identities");
    ch->fallthrough();
    int chain_n = 0;
    ch->add_option("--n", chain_n, "number of (-2)-curves")->required();

    auto* vp = app.add_subcommand("verify-paper", "run the full claim suite");
    vp->fallthrough();
    std::string filter;
    vp->add_option("--filter", filter, "only claims whose id starts with this");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*norm) return cmd_normalize(sextic_text, out_path, guard, text_mode);
        if (*tr) return cmd_transform(fib_path, map_text, out_path, text_mode);
        if (*cl) return cmd_classify(map_text, text_mode);
        if (*si)
            return cmd_singularities(fib_path, point_text, seed, trials, bound,
                                     text_mode);
        if (*ch) return cmd_chain(chain_n, text_mode);
        if (*vp) return cmd_verify(seed, trials, bound, filter, text_mode);
    } catch (const dp1::SchemaError& e) {
        std::cerr << "schema error at " << e.what() << "\n";
        return 3;
    } catch (const dp1::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const dp1::MapError& e) {
        std::cerr << "map error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
