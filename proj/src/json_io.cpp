#include "causalsearch/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace causalsearch {

namespace {

std::vector<std::pair<std::string, std::string>> read_pair_list(const nlohmann::json& j, const char* field) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.contains(field)) return out;
    const auto& arr = j.at(field);
    if (!arr.is_array()) throw GraphError(std::string("field '") + field + "' must be an array");
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& p = arr[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw GraphError(std::string("field '") + field + "' entry " + std::to_string(i) +
                             " must be a pair of node names");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
}

std::string quote(const std::string& s) {
    // Node tokens are plain identifiers in practice; escape the JSON specials anyway.
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

Pdag load_graph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(std::string("parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j.at("nodes").is_array())
        throw GraphError("parse error: field 'nodes' (array of strings) is required");

    std::vector<NodeId> nodes;
    for (size_t i = 0; i < j.at("nodes").size(); ++i) {
        const auto& v = j.at("nodes")[i];
        if (!v.is_string())
            throw GraphError("field 'nodes' entry " + std::to_string(i) + " must be a string");
        nodes.push_back(v.get<std::string>());
    }

    Pdag g(std::move(nodes));  // rejects duplicates
    for (const auto& [u, v] : read_pair_list(j, "directed")) {
        if (!g.contains(u)) throw GraphError("unknown endpoint '" + u + "' in directed pair");
        if (!g.contains(v)) throw GraphError("unknown endpoint '" + v + "' in directed pair");
        g.add_arc(u, v);  // rejects self loops and duplicate pairs
    }
    for (const auto& [u, v] : read_pair_list(j, "undirected")) {
        if (!g.contains(u)) throw GraphError("unknown endpoint '" + u + "' in undirected pair");
        if (!g.contains(v)) throw GraphError("unknown endpoint '" + v + "' in undirected pair");
        g.add_edge(u, v);
    }
    return g;
}

std::string save_graph(const Pdag& g) {
    std::ostringstream os;
    os << "{\"nodes\":[";
    const auto& nodes = g.nodes();
    for (size_t i = 0; i < nodes.size(); ++i) os << (i ? "," : "") << quote(nodes[i]);
    os << "],\"directed\":[";
    auto arcs = g.arcs();
    for (size_t i = 0; i < arcs.size(); ++i)
        os << (i ? "," : "") << "[" << quote(arcs[i].first) << "," << quote(arcs[i].second) << "]";
    os << "],\"undirected\":[";
    auto edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        os << (i ? "," : "") << "[" << quote(edges[i].first) << "," << quote(edges[i].second) << "]";
    os << "]}";
    return os.str();
}

Pdag load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

void save_graph_file(const Pdag& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write '" + path + "'");
    out << save_graph(g) << "\n";
}

}  // namespace causalsearch
