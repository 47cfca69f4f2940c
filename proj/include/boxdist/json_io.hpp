#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire formats for every type the CLI reads or writes.
 *
 * Rationals are strings "p" or "p/q". A Box is {"coords": [[...],...]}, a
 * Point a list of rational strings, a PointSet {"box":..., "points":[...]},
 * a polynomial {"nvars":..., "terms":[{"exps":[...], "coef":"..."}]}.
 * Ordered JSON is used throughout so identical inputs produce byte-identical
 * files.
 */

#include <string>

#include <json.hpp>

#include "boxdist/bounds.hpp"
#include "boxdist/constructions.hpp"
#include "boxdist/geometry.hpp"
#include "boxdist/polynomial.hpp"
#include "boxdist/search.hpp"

namespace boxdist::io {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

Json to_json(const Point& p);
Point point_from_json(const Json& j);

Json to_json(const Box& b);
Box box_from_json(const Json& j);

Json to_json(const PointSet& ps);
PointSet point_set_from_json(const Json& j);

Json to_json(const SquaredDistancePalette& pal);
SquaredDistancePalette palette_from_json(const Json& j);

Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json to_json(const Interval& iv);
Json to_json(const JValue& jv);
Json to_json(const BoundReport& r);
Json to_json(const SearchResult& r);
Json to_json(const ProbeReport& r);
Json to_json(const ConstructionReport& r);
Json to_json(const WitnessCheckResult& r);
Json to_json(const ClpCheckResult& r);

/// Reproducibility manifest embedded in every output file.
struct RunManifest {
    std::string subcommand;
    Json parameters;  // flag name -> value
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::uint64_t seed = 0;
    std::string version;
};

Json to_json(const RunManifest& m);

/// Parses a JSON document, converting parse errors to std::invalid_argument.
Json parse(const std::string& text);

}  // namespace boxdist::io
