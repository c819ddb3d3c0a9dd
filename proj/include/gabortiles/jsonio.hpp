#pragma once

#include "gabortiles/gabor.hpp"
#include "gabortiles/spectral.hpp"
#include "gabortiles/zeroset.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace gabortiles {

using Json = nlohmann::json;  // std::map keys: objects serialize sorted

/// Deterministic dump: objects with sorted keys (nlohmann default container),
/// floating numbers at 17 significant digits, no whitespace.
inline void dump_deterministic(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_deterministic(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            bool first = true;
            for (const Json& v : j) {
                if (!first) out += ',';
                first = false;
                dump_deterministic(v, out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            break;
        default:
            out += j.dump();
            break;
    }
}

inline std::string dump_deterministic(const Json& j) {
    std::string out;
    dump_deterministic(j, out);
    return out;
}

// ---- encoding -------------------------------------------------------------

inline Json scalar_to_json(const Scalar& s) {
    if (s.exact()) return Json(rational_to_string(s.rat()));
    return Json(s.value());
}

inline Json interval_union_to_json(const IntervalUnion& u) {
    Json parts = Json::array();
    for (const Interval& p : u.parts())
        parts.push_back(Json::array({scalar_to_json(p.lo), scalar_to_json(p.hi)}));
    return Json{{"mode", mode_name(u.mode())}, {"parts", parts}};
}

inline Json translation_set_1d_to_json(const TranslationSet1D& s) {
    Json points = Json::array(), cosets = Json::array();
    for (const Scalar& p : s.points()) points.push_back(scalar_to_json(p));
    for (const Coset& c : s.cosets())
        cosets.push_back(Json{{"p", scalar_to_json(c.period)}, {"o", scalar_to_json(c.offset)}});
    return Json{{"dim", 1}, {"points", points}, {"cosets", cosets}};
}

inline Json translation_set_2d_to_json(const TranslationSet2D& s) {
    Json fibers = Json::array();
    for (const Fiber& f : s.fibers())
        fibers.push_back(Json{{"t", scalar_to_json(f.t)},
                              {"set", translation_set_1d_to_json(f.freq)}});
    Json j{{"dim", 2}, {"fibers", fibers}};
    if (s.t_period()) j["t_period"] = scalar_to_json(*s.t_period());
    return j;
}

inline Json verdict_to_json(const Verdict& v) {
    Json j{{"status", coverage_status_name(v.status)}};
    Json win = Json::array();
    for (const Scalar& s : v.checked_window) win.push_back(scalar_to_json(s));
    j["checked_window"] = win;
    Json mg = Json::array();
    for (const Scalar& s : v.margin) mg.push_back(scalar_to_json(s));
    j["margin"] = mg;
    if (v.witness) {
        Json w = Json::array();
        for (const Scalar& s : *v.witness) w.push_back(scalar_to_json(s));
        j["witness"] = w;
        j["witness_coverage"] = v.witness_coverage;
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline Json classification_to_json(const Classification& c) {
    Json j{{"tiles", c.tiles}, {"spectral", c.spectral}};
    if (c.tolerance_mode) j["tolerance_mode"] = true;
    if (c.tiling_set) j["tiling_set"] = translation_set_1d_to_json(*c.tiling_set);
    return j;
}

inline Json packing_region_to_json(const PackingRegion& pr) {
    return Json{{"time_factor", interval_union_to_json(pr.region.time_factor())},
                {"freq_factor", interval_union_to_json(pr.region.freq_factor())},
                {"tight", pr.tight},
                {"regime", pr.regime},
                {"measure", scalar_to_json(pr.region.measure())}};
}

inline Json certification_report_to_json(const CertificationReport& r) {
    Json orth{{"orthogonal", r.orthogonality.orthogonal},
              {"points_checked", r.orthogonality.points_checked},
              {"differences_checked", r.orthogonality.differences_checked}};
    Json witnesses = Json::array();
    Json viol = Json::array();
    for (const auto& [p, val] : r.orthogonality.violations) {
        Json w{{"difference", Json::array({scalar_to_json(p.t), scalar_to_json(p.nu)})},
               {"value", val}};
        viol.push_back(w);
        witnesses.push_back(w);
    }
    orth["violations"] = viol;
    if (r.tiling.witness) {
        Json tw = Json::array();
        for (const Scalar& s : *r.tiling.witness) tw.push_back(scalar_to_json(s));
        witnesses.push_back(Json{{"tiling_point", tw},
                                 {"coverage", r.tiling.witness_coverage}});
    }
    Json tails = Json::array(), values = Json::array();
    for (double t : r.frame_tails) tails.push_back(t);
    for (double t : r.frame_values) values.push_back(t);
    return Json{{"window", Json{{"alpha", scalar_to_json(r.alpha)},
                                {"beta", scalar_to_json(r.beta)}}},
                {"regime", r.regime},
                {"classification_tiles", r.classification_tiles},
                {"orthogonality", orth},
                {"tiling", verdict_to_json(r.tiling)},
                {"certified", r.certified},
                {"witnesses", witnesses},
                {"frame_values", values},
                {"tail_bounds", tails}};
}

// ---- decoding -------------------------------------------------------------

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<long long>()));
    if (j.is_number_float()) return Scalar::from_double(j.get<double>());
    throw std::invalid_argument("expected a number or a rational string");
}

inline IntervalUnion interval_union_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("parts"))
        throw std::invalid_argument("interval union: need an object with \"parts\"");
    bool want_float = j.value("mode", std::string("rational")) == std::string("float");
    std::vector<Interval> parts;
    for (const Json& p : j.at("parts")) {
        if (!p.is_array() || p.size() != 2)
            throw std::invalid_argument("interval union: each part is [lo, hi]");
        Scalar lo = scalar_from_json(p[0]), hi = scalar_from_json(p[1]);
        if (want_float) {
            lo = lo.to_floating();
            hi = hi.to_floating();
        }
        parts.push_back({lo, hi});
    }
    return IntervalUnion::normalize(std::move(parts), false);
}

inline TranslationSet1D translation_set_1d_from_json(const Json& j) {
    std::vector<Scalar> points;
    std::vector<Coset> cosets;
    if (j.contains("points"))
        for (const Json& p : j.at("points")) points.push_back(scalar_from_json(p));
    if (j.contains("cosets"))
        for (const Json& c : j.at("cosets"))
            cosets.push_back({scalar_from_json(c.at("p")), scalar_from_json(c.at("o"))});
    return TranslationSet1D(std::move(points), std::move(cosets));
}

inline TranslationSet2D translation_set_2d_from_json(const Json& j) {
    if (j.value("dim", 0) != 2)
        throw std::invalid_argument("translation set: expected dim 2");
    std::vector<Fiber> fibers;
    for (const Json& f : j.at("fibers"))
        fibers.push_back({scalar_from_json(f.at("t")),
                          translation_set_1d_from_json(f.at("set"))});
    std::optional<Scalar> period;
    if (j.contains("t_period")) period = scalar_from_json(j.at("t_period"));
    return TranslationSet2D(std::move(fibers), period);
}

/// Accepts either {"dim":1,...} / {"dim":2,...}; used by CLI file loading.
inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

}  // namespace gabortiles
