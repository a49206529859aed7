/* JSON serialization of fibrations, maps, instances, and reports.
 *
 * fibration schema: { "f4": [5 coefficient strings],
 *                     "f6": [7 coefficient strings] }
 * instance schema:  { "fibration": {...}, "map": [a, b, c, d] }
 *
 * Coefficient strings follow the t-polynomial grammar ("3/2*t^4 + t^5").
 * Schema violations are reported with JSON-pointer paths.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "dp1/chain_lattice.hpp"
#include "dp1/fiber_analysis.hpp"
#include "dp1/map_engine.hpp"
#include "dp1/parse.hpp"

namespace dp1 {

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
public:
    SchemaError(const std::string& pointer, const std::string& what)
        : std::runtime_error(pointer + ": " + what), pointer_path(pointer) {}
    std::string pointer_path;
};

inline json fibration_to_json(const Fibration& f) {
    json j;
    j["f4"] = json::array();
    for (int i = 0; i <= 4; ++i) j["f4"].push_back(f.f4[i].to_string());
    j["f6"] = json::array();
    for (int i = 0; i <= 6; ++i) j["f6"].push_back(f.f6[i].to_string());
    return j;
}

inline Fibration fibration_from_json(const json& j, const std::string& at = "",
                                     bool allow_degenerate = true) {
    if (!j.is_object()) throw SchemaError(at.empty() ? "/" : at, "expected an object");
    auto read_form = [&](const char* key, int degree) {
        std::string base = at + "/" + key;
        if (!j.contains(key)) throw SchemaError(base, "missing");
        const json& arr = j[key];
        if (!arr.is_array() || arr.size() != static_cast<std::size_t>(degree) + 1)
            throw SchemaError(base, "expected an array of " +
                                        std::to_string(degree + 1) +
                                        " coefficient strings");
        BinaryForm f(degree);
        for (int i = 0; i <= degree; ++i) {
            const json& c = arr[static_cast<std::size_t>(i)];
            std::string ptr = base + "/" + std::to_string(i);
            if (!c.is_string()) throw SchemaError(ptr, "expected a string");
            try {
                f[i] = parse_tcoeff(c.get<std::string>());
            } catch (const ParseError& e) {
                throw SchemaError(ptr, e.what());
            }
            if (!f[i].in_dvr())
                throw SchemaError(ptr, "coefficient has negative valuation");
        }
        return f;
    };
    BinaryForm f4 = read_form("f4", 4);
    BinaryForm f6 = read_form("f6", 6);
    try {
        return Fibration(f4, f6, allow_degenerate);
    } catch (const std::domain_error& e) {
        throw SchemaError(at.empty() ? "/" : at, e.what());
    }
}

inline json map_to_json(const MonomialMap& m) {
    return json::array({m.fwd[0], m.fwd[1], m.fwd[2], m.fwd[3]});
}

inline MonomialMap map_from_json(const json& j, const std::string& at) {
    if (!j.is_array() || j.size() != 4)
        throw SchemaError(at, "expected an array of four integers [a,b,c,d]");
    std::array<int, 4> fwd{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_number_integer())
            throw SchemaError(at + "/" + std::to_string(i), "expected an integer");
        fwd[i] = j[i].get<int>();
    }
    try {
        return solve_weights(fwd);
    } catch (const MapError& e) {
        throw SchemaError(at, e.what());
    }
}

struct Instance {
    Fibration fibration;
    MonomialMap map;
};

inline json instance_to_json(const Instance& ins) {
    json j;
    j["fibration"] = fibration_to_json(ins.fibration);
    j["map"] = map_to_json(ins.map);
    return j;
}

inline Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("/", "expected an object");
    if (!j.contains("fibration")) throw SchemaError("/fibration", "missing");
    if (!j.contains("map")) throw SchemaError("/map", "missing");
    Instance ins;
    ins.fibration = fibration_from_json(j["fibration"], "/fibration");
    ins.map = map_from_json(j["map"], "/map");
    return ins;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

inline Instance load_instance(const std::string& path) {
    return instance_from_json(load_json_file(path));
}

inline Fibration load_fibration(const std::string& path) {
    json j = load_json_file(path);
    // accept either a bare fibration or a full instance
    if (j.contains("fibration")) return fibration_from_json(j["fibration"], "/fibration");
    return fibration_from_json(j);
}

inline void emit_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

inline json singularity_report_to_json(const SingularityReport& r) {
    json j;
    j["type"] = r.tag_name();
    j["status"] = r.status == SingularityReport::Status::Classified     ? "classified"
                  : r.status == SingularityReport::Status::NonIsolated  ? "non-isolated"
                  : r.status == SingularityReport::Status::Unstable     ? "unstable"
                                                                        : "unresolved";
    if (r.milnor >= 0) j["milnor"] = r.milnor;
    if (!r.location.empty()) j["location"] = r.location;
    if (r.rationality_violation) j["rationality_violation"] = true;
    j["evidence"] = r.evidence;
    return j;
}

inline json central_fiber_report_to_json(const CentralFiberReport& r) {
    json j;
    j["kind"] = r.kind == CentralFiberReport::Kind::Normal        ? "normal"
                : r.kind == CentralFiberReport::Kind::NonNormalCusp ? "non-normal-cusp"
                                                                    : "non-normal-node";
    if (r.degenerate_cone) j["degenerate_cone"] = true;
    if (!r.node_double_curve.empty()) j["double_curve"] = r.node_double_curve;
    j["points"] = json::array();
    for (const auto& p : r.points) j["points"].push_back(singularity_report_to_json(p));
    if (!r.conjugate_sets.empty()) j["conjugate_sets"] = r.conjugate_sets;
    if (r.rationality_violation) j["rationality_violation"] = true;
    j["smooth"] = r.smooth();
    return j;
}

inline json smoothness_report_to_json(const SmoothnessReport& r) {
    json j;
    j["certified_smooth"] = r.certified_smooth;
    j["singular_points"] = json::array();
    for (const auto& p : r.singular_points)
        j["singular_points"].push_back(singularity_report_to_json(p));
    if (!r.fiber_only.empty()) j["fiber_singular_total_space_smooth"] = r.fiber_only;
    if (!r.unresolved.empty()) j["unresolved"] = r.unresolved;
    j["evidence"] = r.evidence;
    return j;
}

inline json transform_result_to_json(const TransformResult& t) {
    json j;
    j["ok"] = t.ok;
    j["cleared_valuation"] = t.cleared_valuation;
    if (t.ok) {
        j["result"] = fibration_to_json(t.result);
        j["equation"] = t.result.to_string(VarSet::PQRS);
        j["used_xy_swap"] = t.used_xy_swap;
    } else {
        j["error"] = t.error;
        j["violations"] = json::array();
        for (const auto& v : t.violations) {
            j["violations"].push_back({{"monomial", v.monomial},
                                       {"valuation", v.valuation},
                                       {"deficit", v.required_deficit}});
        }
    }
    return j;
}

inline json chain_report_to_json(const ChainIdentityReport& r) {
    json j;
    j["n"] = r.n;
    j["determinant"] = r.determinant;
    j["k2_minus_k1_equals_(n+1)F"] = r.k2_minus_k1_is_multiple_of_fiber;
    j["fiber_multiple"] = r.fiber_multiple;
    j["fiber_orthogonal"] = r.fiber_orthogonal;
    j["fiber_square_zero"] = r.fiber_square_zero;
    j["adjunction_C"] = r.adjunction_c;
    j["adjunction_E"] = r.adjunction_e;
    j["adjunction_Cprime"] = r.adjunction_cprime;
    j["kernel_rank_one"] = r.kernel_rank_one;
    j["all_pass"] = r.all_pass();
    return j;
}

}  // namespace dp1
