#include "solcurves/curve_spec.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace solcurves {

namespace {

void validate_coordinate(const CoordinateForm& c, const char* name, bool allow_exp) {
    auto finite = [&](double v, const char* what) {
        if (!std::isfinite(v)) {
            throw InvalidParams(std::string(name) + "." + what + " is not finite");
        }
    };
    finite(c.constant, "const");
    finite(c.linear, "linear");
    if (!allow_exp && !c.exp_terms.empty()) {
        throw InvalidParams(std::string(name) + " must not carry exponential terms");
    }
    if (c.exp_terms.size() > 8) {
        throw InvalidParams(std::string(name) + " has more than 8 exponential terms");
    }
    for (const auto& [amp, rate] : c.exp_terms) {
        finite(amp, "exp amplitude");
        finite(rate, "exp rate");
    }
}

Jet eval_coordinate(const CoordinateForm& c, const Jet& s) {
    Jet acc = Jet::constant(c.constant, s.order()) + c.linear * s;
    for (const auto& [amp, rate] : c.exp_terms) {
        acc = acc + amp * exp(rate * s);
    }
    return acc;
}

CoordinateForm scale_coordinate(const CoordinateForm& c, double factor) {
    CoordinateForm r = c;
    r.constant *= factor;
    r.linear *= factor;
    for (auto& [amp, rate] : r.exp_terms) {
        amp *= factor;
        (void)rate;
    }
    return r;
}

}  // namespace

void CurveSpec::validate() const {
    validate_coordinate(x, "x", true);
    validate_coordinate(y, "y", true);
    validate_coordinate(z, "z", false);
}

int default_jet_order() {
    const char* env = std::getenv("SOL_CURVES_JET_ORDER");
    if (env != nullptr) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 8 && v <= 64) {
            return static_cast<int>(v);
        }
    }
    return 8;
}

CurveJet eval_curve(const CurveSpec& spec, double s, int order) {
    spec.validate();
    Jet sj = Jet::variable(s, order);  // rejects order < 1
    return {eval_coordinate(spec.x, sj), eval_coordinate(spec.y, sj),
            eval_coordinate(spec.z, sj)};
}

CurveSpec transform_curve(const IsometrySpec& iso, const CurveSpec& spec) {
    CurveSpec r = spec;
    switch (iso.kind) {
        case IsometryKind::translate_x:
            r.x.constant += iso.c;
            break;
        case IsometryKind::translate_y:
            r.y.constant += iso.c;
            break;
        case IsometryKind::flow_z:
            r.x = scale_coordinate(spec.x, std::exp(-iso.c));
            r.y = scale_coordinate(spec.y, std::exp(iso.c));
            r.z.constant += iso.c;
            break;
        case IsometryKind::reflect_x:
            r.x = scale_coordinate(spec.x, -1.0);
            break;
        case IsometryKind::reflect_y:
            r.y = scale_coordinate(spec.y, -1.0);
            break;
    }
    return r;
}

CurveSpec reverse_parameter(const CurveSpec& spec) {
    CurveSpec r = spec;
    for (CoordinateForm* c : {&r.x, &r.y, &r.z}) {
        c->linear = -c->linear;
        for (auto& [amp, rate] : c->exp_terms) {
            rate = -rate;
            (void)amp;
        }
    }
    return r;
}

CurveSpec vertical_line_curve() {
    CurveSpec r;
    r.z.linear = 1.0;
    return r;
}

namespace {

using nlohmann::ordered_json;

CoordinateForm coordinate_from_json(const ordered_json& j, const char* name, bool allow_exp) {
    if (!j.is_object()) {
        throw InvalidParams(std::string("curve JSON: ") + name + " must be an object");
    }
    CoordinateForm c;
    for (const auto& [key, value] : j.items()) {
        if (key == "const") {
            c.constant = value.get<double>();
        } else if (key == "linear") {
            c.linear = value.get<double>();
        } else if (key == "exp" && allow_exp) {
            if (!value.is_array()) {
                throw InvalidParams(std::string("curve JSON: ") + name + ".exp must be an array");
            }
            for (const auto& term : value) {
                if (!term.is_array() || term.size() != 2) {
                    throw InvalidParams(std::string("curve JSON: ") + name +
                                        ".exp entries must be [amplitude, rate] pairs");
                }
                c.exp_terms.emplace_back(term[0].get<double>(), term[1].get<double>());
            }
        } else {
            throw InvalidParams(std::string("curve JSON: unknown key '") + key + "' in " + name);
        }
    }
    return c;
}

}  // namespace

CurveSpec parse_curve_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("curve JSON parse failure: ") + e.what());
    }
    if (!j.is_object()) {
        throw InvalidParams("curve JSON: top level must be an object");
    }
    CurveSpec spec;
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "x") {
                spec.x = coordinate_from_json(value, "x", true);
            } else if (key == "y") {
                spec.y = coordinate_from_json(value, "y", true);
            } else if (key == "z") {
                spec.z = coordinate_from_json(value, "z", false);
            } else {
                throw InvalidParams("curve JSON: unknown top-level key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParams(std::string("curve JSON: ") + e.what());
    }
    spec.validate();
    return spec;
}

std::string curve_to_json_string(const CurveSpec& spec) {
    auto coord = [](const CoordinateForm& c, bool with_exp) {
        ordered_json j;
        j["const"] = c.constant;
        j["linear"] = c.linear;
        if (with_exp) {
            ordered_json terms = ordered_json::array();
            for (const auto& [amp, rate] : c.exp_terms) {
                terms.push_back({amp, rate});
            }
            j["exp"] = terms;
        }
        return j;
    };
    ordered_json j;
    j["x"] = coord(spec.x, true);
    j["y"] = coord(spec.y, true);
    j["z"] = coord(spec.z, false);
    return j.dump();
}

}  // namespace solcurves
