#include "corank/exports.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "corank/error.hpp"

namespace corank {

namespace {

std::string fmt(double v) { return nlohmann::json(v).dump(); }

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string xml_unescape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        auto try_ent = [&](std::string_view ent, char c) {
            if (s.substr(i, ent.size()) == ent) {
                out.push_back(c);
                i += ent.size();
                return true;
            }
            return false;
        };
        if (try_ent("&amp;", '&') || try_ent("&lt;", '<') ||
            try_ent("&gt;", '>') || try_ent("&quot;", '"') ||
            try_ent("&apos;", '\''))
            continue;
        out.push_back(s[i++]);
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// Edges as (from_id, to_id, weight), sorted by id pair.
std::vector<std::tuple<std::string, std::string, double>> sorted_edges(
    const Graph& g) {
    std::vector<std::tuple<std::string, std::string, double>> edges;
    edges.reserve(g.edge_count());
    for (const auto& [key, w] : g.edges())
        edges.emplace_back(g.node_id(key.first), g.node_id(key.second), w);
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::string> sorted_nodes(const Graph& g) {
    std::vector<std::string> ids = g.node_ids();
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

GraphFormat graph_format_from_string(const std::string& s) {
    if (s == "graphml") return GraphFormat::kGraphML;
    if (s == "dot") return GraphFormat::kDot;
    if (s == "tsv") return GraphFormat::kTsv;
    throw Error("unknown graph format: " + s);
}

std::string to_graphml(const Graph& g,
                       const std::map<std::string, double>* scores) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    if (scores)
        out += "  <key id=\"score\" for=\"node\" attr.name=\"score\" attr.type=\"double\"/>\n";
    out += std::string("  <graph edgedefault=\"") +
           (g.directed() ? "directed" : "undirected") + "\">\n";
    for (const auto& id : sorted_nodes(g)) {
        out += "    <node id=\"" + xml_escape(id) + "\"";
        bool has_score = false;
        double score = 0.0;
        if (scores) {
            auto it = scores->find(id);
            if (it != scores->end()) {
                has_score = true;
                score = it->second;
            }
        }
        if (has_score) {
            out += ">\n      <data key=\"score\">" + fmt(score) +
                   "</data>\n    </node>\n";
        } else {
            out += "/>\n";
        }
    }
    for (const auto& [from, to, w] : sorted_edges(g)) {
        out += "    <edge source=\"" + xml_escape(from) + "\" target=\"" +
               xml_escape(to) + "\">\n      <data key=\"weight\">" + fmt(w) +
               "</data>\n    </edge>\n";
    }
    out += "  </graph>\n</graphml>\n";
    return out;
}

std::string to_dot(const Graph& g) {
    std::string out = g.directed() ? "digraph G {\n" : "graph G {\n";
    for (const auto& id : sorted_nodes(g))
        out += "  \"" + dot_escape(id) + "\";\n";
    const char* arrow = g.directed() ? " -> " : " -- ";
    for (const auto& [from, to, w] : sorted_edges(g))
        out += "  \"" + dot_escape(from) + "\"" + arrow + "\"" +
               dot_escape(to) + "\" [weight=" + fmt(w) + "];\n";
    out += "}\n";
    return out;
}

std::string to_edge_list_tsv(const Graph& g) {
    std::string out;
    for (const auto& [from, to, w] : sorted_edges(g))
        out += from + "\t" + to + "\t" + fmt(w) + "\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

void export_graph(const Graph& g, GraphFormat format, const std::string& sink,
                  const std::map<std::string, double>* scores) {
    switch (format) {
        case GraphFormat::kGraphML:
            write_file(sink, to_graphml(g, scores));
            break;
        case GraphFormat::kDot:
            write_file(sink, to_dot(g));
            break;
        case GraphFormat::kTsv:
            write_file(sink, to_edge_list_tsv(g));
            break;
    }
}

GraphMLData load_graphml(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open GraphML file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string xml = ss.str();

    const std::size_t gpos = xml.find("<graph ");
    if (gpos == std::string::npos)
        throw ParseError("no <graph> element in " + path, 0);
    const bool directed =
        xml.find("edgedefault=\"directed\"", gpos) != std::string::npos &&
        xml.find("edgedefault=\"directed\"", gpos) <
            xml.find('>', gpos);

    GraphMLData data;
    data.graph = Graph(directed);

    auto attr = [&](std::size_t tag_pos, const std::string& name)
        -> std::optional<std::string> {
        const std::size_t tag_end = xml.find('>', tag_pos);
        const std::string needle = name + "=\"";
        const std::size_t a = xml.find(needle, tag_pos);
        if (a == std::string::npos || a > tag_end) return std::nullopt;
        const std::size_t b = xml.find('"', a + needle.size());
        return xml_unescape(
            std::string_view(xml).substr(a + needle.size(), b - a - needle.size()));
    };
    auto data_value = [&](std::size_t tag_pos, const std::string& key)
        -> std::optional<double> {
        // Search <data key="key">...</data> between tag_pos and the close of
        // this element.
        const std::size_t tag_end = xml.find('>', tag_pos);
        if (tag_end == std::string::npos || xml[tag_end - 1] == '/')
            return std::nullopt;
        const std::string needle = "<data key=\"" + key + "\">";
        const std::size_t a = xml.find(needle, tag_end);
        if (a == std::string::npos) return std::nullopt;
        // Only whitespace may separate the element tag from its own data,
        // otherwise the match belongs to a later element.
        for (std::size_t i = tag_end + 1; i < a; ++i)
            if (xml[i] != ' ' && xml[i] != '\n' && xml[i] != '\t' &&
                xml[i] != '\r')
                return std::nullopt;
        const std::size_t b = xml.find("</data>", a);
        if (b == std::string::npos) return std::nullopt;
        return std::stod(xml.substr(a + needle.size(), b - a - needle.size()));
    };

    std::size_t pos = gpos;
    while ((pos = xml.find("<node ", pos)) != std::string::npos) {
        const auto id = attr(pos, "id");
        if (!id) throw ParseError("<node> without id in " + path, pos);
        data.graph.add_node(*id);
        if (const auto score = data_value(pos, "score"))
            data.scores[*id] = *score;
        pos += 6;
    }
    pos = gpos;
    while ((pos = xml.find("<edge ", pos)) != std::string::npos) {
        const auto from = attr(pos, "source");
        const auto to = attr(pos, "target");
        if (!from || !to)
            throw ParseError("<edge> missing source/target in " + path, pos);
        const double w = data_value(pos, "weight").value_or(1.0);
        data.graph.add_edge(*from, *to, w);
        pos += 6;
    }
    return data;
}

Graph load_edge_list_tsv(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list: " + path);
    Graph g(directed);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const std::size_t t1 = line.find('\t');
        const std::size_t t2 =
            t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos)
            throw ParseError("edge list line " + std::to_string(lineno) +
                                 ": expected from<TAB>to[<TAB>weight]",
                             lineno);
        const std::string from = line.substr(0, t1);
        const std::string to =
            t2 == std::string::npos ? line.substr(t1 + 1)
                                    : line.substr(t1 + 1, t2 - t1 - 1);
        const double w =
            t2 == std::string::npos ? 1.0 : std::stod(line.substr(t2 + 1));
        g.add_edge(from, to, w);
    }
    return g;
}

}  // namespace corank
