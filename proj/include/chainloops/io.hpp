#pragma once

#include <json.hpp>

#include <string>

#include "chainloops/brill_noether.hpp"
#include "chainloops/divisor.hpp"

namespace chainloops::io {

/// Rationals travel as strings "p/q" (or "p"); plain JSON integers are
/// also accepted on input. Binary floats are rejected outright so that
/// congruence arithmetic is never corrupted.
nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& node, const std::string& context);

/// Graph files: {"g": 2, "loops": [{"ell": "2", "m": "1"}, ...]}.
nlohmann::json graph_to_json(const ChainGraph& graph);
ChainGraph graph_from_json(const nlohmann::json& doc);
ChainGraph load_graph(const std::string& path);

/// Points: {"vertex": n} or {"loop": i, "pos": "p/q"}. The two positions
/// on a loop that coincide with vertices must use the vertex encoding.
nlohmann::json point_to_json(const Point& point);
Point point_from_json(const nlohmann::json& node, const ChainGraph& graph);

/// Divisor files: {"entries": [{"point": ..., "coeff": c}, ...]} with
/// distinct points and nonzero coefficients.
nlohmann::json divisor_to_json(const Divisor& divisor);
Divisor divisor_from_json(const nlohmann::json& doc, const ChainGraph& graph);
Divisor load_divisor(const std::string& path, const ChainGraph& graph);

/// Tableaux serialize as their rows: [[1,3],[2,4]].
nlohmann::json tableau_to_json(const Tableau& tableau);

/// Paths serialize as {"r": r, "points": [[...], ...], "steps":
/// ["up(0)", "down", ...]}.
nlohmann::json path_to_json(const LatticePath& path);

} // namespace chainloops::io
