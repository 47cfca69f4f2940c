#include "boxdist/json_io.hpp"

#include <stdexcept>

namespace boxdist::io {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("json: ") + what);
}

}  // namespace

Json parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("json: malformed document");
    return j;
}

Json to_json(const Scalar& x) { return x.str(); }

Scalar scalar_from_json(const Json& j) {
    require(j.is_string(), "rational must be a string like \"p\" or \"p/q\"");
    return Scalar::from_string(j.get<std::string>());
}

Json to_json(const Point& p) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < p.dimension(); ++i) arr.push_back(to_json(p[i]));
    return arr;
}

Point point_from_json(const Json& j) {
    require(j.is_array() && !j.empty(), "point must be a nonempty array");
    std::vector<Scalar> coords;
    coords.reserve(j.size());
    for (const auto& c : j) coords.push_back(scalar_from_json(c));
    return Point(std::move(coords));
}

Json to_json(const Box& b) {
    Json sets = Json::array();
    for (std::size_t i = 0; i < b.dimension(); ++i) {
        Json one = Json::array();
        for (const auto& v : b.coordinate_set(i)) one.push_back(to_json(v));
        sets.push_back(std::move(one));
    }
    return Json{{"coords", std::move(sets)}};
}

Box box_from_json(const Json& j) {
    require(j.is_object() && j.contains("coords"), "box must be {\"coords\": [[...],...]}");
    const Json& sets = j.at("coords");
    require(sets.is_array() && !sets.empty(), "box coords must be a nonempty array");
    std::vector<std::vector<Scalar>> coords;
    coords.reserve(sets.size());
    for (const auto& one : sets) {
        require(one.is_array(), "box coordinate set must be an array");
        std::vector<Scalar> vals;
        vals.reserve(one.size());
        for (const auto& v : one) vals.push_back(scalar_from_json(v));
        coords.push_back(std::move(vals));
    }
    return Box(std::move(coords));
}

Json to_json(const PointSet& ps) {
    Json pts = Json::array();
    for (const auto& p : ps.points()) pts.push_back(to_json(p));
    return Json{{"box", to_json(ps.box())}, {"points", std::move(pts)}};
}

PointSet point_set_from_json(const Json& j) {
    require(j.is_object() && j.contains("box") && j.contains("points"),
            "point set must be {\"box\":..., \"points\":[...]}");
    Box box = box_from_json(j.at("box"));
    const Json& arr = j.at("points");
    require(arr.is_array(), "points must be an array");
    std::vector<Point> pts;
    pts.reserve(arr.size());
    for (const auto& p : arr) pts.push_back(point_from_json(p));
    return PointSet(std::move(box), std::move(pts));
}

Json to_json(const SquaredDistancePalette& pal) {
    Json arr = Json::array();
    for (const auto& v : pal.values()) arr.push_back(to_json(v));
    return arr;
}

SquaredDistancePalette palette_from_json(const Json& j) {
    require(j.is_array(), "palette must be an array of rational strings");
    std::vector<Scalar> vals;
    vals.reserve(j.size());
    for (const auto& v : j) vals.push_back(scalar_from_json(v));
    return SquaredDistancePalette(std::move(vals));
}

Json to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (auto x : e) exps.push_back(x);
        terms.push_back(Json{{"exps", std::move(exps)}, {"coef", to_json(c)}});
    }
    return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const Json& j) {
    require(j.is_object() && j.contains("nvars") && j.contains("terms"),
            "polynomial must be {\"nvars\":..., \"terms\":[...]}");
    require(j.at("nvars").is_number_unsigned() && j.at("nvars").get<std::uint64_t>() >= 1,
            "nvars must be a positive integer");
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    MultiPoly p(nvars);
    const Json& terms = j.at("terms");
    require(terms.is_array(), "terms must be an array");
    for (const auto& t : terms) {
        require(t.is_object() && t.contains("exps") && t.contains("coef"),
                "term must be {\"exps\":[...], \"coef\":\"...\"}");
        const Json& exps = t.at("exps");
        require(exps.is_array() && exps.size() == nvars, "exps length must equal nvars");
        MultiPoly::Exponents e;
        e.reserve(nvars);
        for (const auto& x : exps) {
            require(x.is_number_unsigned(), "exponents must be nonnegative integers");
            e.push_back(x.get<std::uint32_t>());
        }
        p.add_term(e, scalar_from_json(t.at("coef")));
    }
    return p;
}

Json to_json(const Interval& iv) {
    return Json{{"lo", iv.lower()}, {"hi", iv.upper()}};
}

Json to_json(const JValue& jv) {
    return Json{{"lower", jv.value.lower()},
                {"upper", jv.value.upper()},
                {"argmin", jv.argmin_estimate},
                {"attained_interior", jv.attained_interior}};
}

Json to_json(const BoundReport& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json out{{"name", r.name}, {"params", std::move(params)}};
    if (std::holds_alternative<BigInt>(r.value)) {
        out["value"] = to_string(std::get<BigInt>(r.value));
    } else {
        const Interval& iv = std::get<Interval>(r.value);
        out["value_lo"] = iv.lower();
        out["value_hi"] = iv.upper();
    }
    return out;
}

Json to_json(const SearchResult& r) {
    return Json{{"best_size", r.best_size},
                {"optimal", r.optimal},
                {"nodes_explored", r.nodes_explored},
                {"palette_of_witness", to_json(r.palette_of_witness)},
                {"witness", to_json(r.witness)}};
}

Json to_json(const ProbeReport& r) {
    return Json{{"n", r.n},
                {"q", r.q},
                {"s", r.s},
                {"best_size", r.search.best_size},
                {"monomial_count", to_string(r.monomial_count)},
                {"theorem_bound", to_string(r.theorem_bound)},
                {"conjecture_consistent", r.conjecture_consistent},
                {"theorem_consistent", r.theorem_consistent},
                {"search", to_json(r.search)}};
}

Json to_json(const ConstructionReport& r) {
    return Json{{"claimed_size", to_string(r.claimed_size)},
                {"s_achieved", r.s_achieved},
                {"palette", to_json(r.palette)},
                {"points", to_json(r.points)}};
}

Json to_json(const WitnessCheckResult& r) {
    Json out{{"condition_i_ok", r.condition_i_ok},
             {"condition_ii_ok", r.condition_ii_ok},
             {"bound_maincor", to_string(r.bound_maincor)},
             {"bound_maincor2", to_json(r.bound_maincor2)}};
    if (r.first_violation) {
        out["first_violation"] = Json{{"a", to_json(r.first_violation->first)},
                                      {"b", to_json(r.first_violation->second)}};
    } else {
        out["first_violation"] = nullptr;
    }
    return out;
}

Json to_json(const ClpCheckResult& r) {
    const char* status = nullptr;
    switch (r.status) {
        case ClpStatus::verified: status = "verified"; break;
        case ClpStatus::counterexample: status = "counterexample"; break;
        case ClpStatus::cardinality_not_met: status = "cardinality-not-met"; break;
        case ClpStatus::vanishing_not_met: status = "vanishing-not-met"; break;
    }
    return Json{{"status", status},
                {"zero_at_origin", r.zero_at_origin},
                {"threshold", to_string(r.threshold)}};
}

Json to_json(const RunManifest& m) {
    return Json{{"subcommand", m.subcommand},
                {"parameters", m.parameters},
                {"inputs", m.inputs},
                {"outputs", m.outputs},
                {"seed", m.seed},
                {"version", m.version}};
}

}  // namespace boxdist::io
