#include "chainloops/io.hpp"

#include <fstream>

namespace chainloops::io {

using nlohmann::json;

namespace {

const json& expect_field(const json& node, const char* key, const std::string& context) {
    auto it = node.find(key);
    if (node.is_object() && it != node.end())
        return *it;
    throw ParseError(context + ": missing field \"" + key + "\"");
}

long long expect_integer(const json& node, const std::string& context) {
    if (!node.is_number_integer() && !node.is_number_unsigned())
        throw ParseError(context + ": expected an integer, got " + node.dump());
    return node.get<long long>();
}

} // namespace

json rational_to_json(const Rational& value) {
    return value.str();
}

Rational rational_from_json(const json& node, const std::string& context) {
    if (node.is_string()) {
        try {
            return Rational::parse(node.get<std::string>());
        } catch (const ParseError& err) {
            throw ParseError(context + ": " + err.what());
        }
    }
    if (node.is_number_integer() || node.is_number_unsigned())
        return Rational(node.get<long long>());
    if (node.is_number_float())
        throw ParseError(context + ": rationals must be strings \"p/q\", not binary floats");
    throw ParseError(context + ": expected a rational \"p/q\", got " + node.dump());
}

json graph_to_json(const ChainGraph& graph) {
    json loops = json::array();
    for (int i = 1; i <= graph.genus(); ++i)
        loops.push_back({{"ell", rational_to_json(graph.ell(i))},
                         {"m", rational_to_json(graph.m(i))}});
    return {{"g", graph.genus()}, {"loops", std::move(loops)}};
}

ChainGraph graph_from_json(const json& doc) {
    if (!doc.is_object())
        throw ParseError("graph: expected a JSON object");
    long long g = expect_integer(expect_field(doc, "g", "graph"), "graph.g");
    const json& loops_node = expect_field(doc, "loops", "graph");
    if (!loops_node.is_array())
        throw ParseError("graph.loops: expected an array");
    if (g < 2)
        throw ParseError("graph.g: genus must be at least 2, got " + std::to_string(g));
    if (static_cast<long long>(loops_node.size()) != g)
        throw ParseError("graph.loops: got " + std::to_string(loops_node.size()) +
                         " loops but g = " + std::to_string(g));

    std::vector<LoopLengths> loops;
    loops.reserve(loops_node.size());
    int i = 1;
    for (const json& node : loops_node) {
        std::string context = "graph.loops[" + std::to_string(i) + "]";
        LoopLengths loop{rational_from_json(expect_field(node, "ell", context), context + ".ell"),
                         rational_from_json(expect_field(node, "m", context), context + ".m")};
        if (loop.ell.sign() <= 0 || loop.m.sign() <= 0)
            throw ParseError(context + ": length must be positive");
        loops.push_back(std::move(loop));
        ++i;
    }
    return ChainGraph(std::move(loops));
}

namespace {

json parse_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(std::string("cannot open ") + what + " file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& err) {
        throw ParseError(path + ": " + err.what());
    }
}

} // namespace

ChainGraph load_graph(const std::string& path) {
    try {
        return graph_from_json(parse_file(path, "graph"));
    } catch (const DomainError& err) {
        throw ParseError(path + ": invalid graph: " + err.what());
    }
}

json point_to_json(const Point& point) {
    if (point.is_vertex())
        return {{"vertex", point.vertex_index()}};
    return {{"loop", point.loop()}, {"pos", rational_to_json(point.position())}};
}

Point point_from_json(const json& node, const ChainGraph& graph) {
    if (!node.is_object())
        throw ParseError("point: expected an object, got " + node.dump());
    if (node.contains("vertex")) {
        long long n = expect_integer(node["vertex"], "point.vertex");
        if (n < 0 || n > graph.genus())
            throw ParseError("point.vertex: index " + std::to_string(n) + " out of range 0.." +
                             std::to_string(graph.genus()));
        return Point::vertex(static_cast<int>(n));
    }
    if (!node.contains("loop"))
        throw ParseError("point: need either {\"vertex\": n} or {\"loop\": i, \"pos\": \"p/q\"}, got " +
                         node.dump());
    long long i = expect_integer(node["loop"], "point.loop");
    if (i < 1 || i > graph.genus())
        throw ParseError("point.loop: index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(graph.genus()));
    Rational pos = rational_from_json(expect_field(node, "pos", "point"), "point.pos");
    int loop = static_cast<int>(i);
    if (pos.is_zero())
        throw ParseError("point.pos: position 0 on loop " + std::to_string(loop) +
                         " is the vertex v" + std::to_string(loop - 1) + "; encode it as {\"vertex\": " +
                         std::to_string(loop - 1) + "}");
    if (pos == graph.m(loop))
        throw ParseError("point.pos: position " + pos.str() + " on loop " + std::to_string(loop) +
                         " is the vertex v" + std::to_string(loop) + "; encode it as {\"vertex\": " +
                         std::to_string(loop) + "}");
    if (pos.sign() < 0 || pos >= graph.loop_length(loop))
        throw ParseError("point.pos: position " + pos.str() + " out of range [0, " +
                         graph.loop_length(loop).str() + ") on loop " + std::to_string(loop));
    return Point::interior(loop, std::move(pos));
}

json divisor_to_json(const Divisor& divisor) {
    json entries = json::array();
    for (const auto& [point, coeff] : divisor.entries())
        entries.push_back({{"point", point_to_json(point)}, {"coeff", coeff}});
    return {{"entries", std::move(entries)}};
}

Divisor divisor_from_json(const json& doc, const ChainGraph& graph) {
    if (!doc.is_object())
        throw ParseError("divisor: expected a JSON object");
    const json& entries = expect_field(doc, "entries", "divisor");
    if (!entries.is_array())
        throw ParseError("divisor.entries: expected an array");
    Divisor D;
    for (const json& node : entries) {
        Point point = point_from_json(expect_field(node, "point", "divisor entry"), graph);
        long long coeff = expect_integer(expect_field(node, "coeff", "divisor entry"),
                                         "divisor entry coeff");
        if (coeff == 0)
            throw ParseError("divisor entry for " + point.str() + " has coefficient 0");
        if (D.coefficient(point) != 0)
            throw ParseError("divisor lists the point " + point.str() + " twice");
        D.add(point, coeff);
    }
    return D;
}

Divisor load_divisor(const std::string& path, const ChainGraph& graph) {
    return divisor_from_json(parse_file(path, "divisor"), graph);
}

json tableau_to_json(const Tableau& tableau) {
    return json(tableau.cells());
}

json path_to_json(const LatticePath& path) {
    json steps = json::array();
    for (const Step& step : path.steps)
        steps.push_back(step_str(step));
    return {{"r", path.r}, {"points", json(path.points)}, {"steps", std::move(steps)}};
}

} // namespace chainloops::io
