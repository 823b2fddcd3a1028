#include "corank/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>
#include <vector>

#include "corank/error.hpp"

namespace corank {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    // Avoid the "-0.00" artifact so output is input-order independent.
    if (std::string_view(buf) == "-0.00") return "0.00";
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Graph& g, const Layout& layout,
                       const std::map<std::string, double>& sizes,
                       const std::map<std::string, std::string>& labels,
                       const RenderOptions& opt) {
    const std::size_t n = g.node_count();
    if (layout.positions.size() < n)
        throw Error("layout does not cover all graph nodes");

    // Map layout coordinates into the drawing area.
    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        min_x = std::min(min_x, layout.positions[i].x);
        max_x = std::max(max_x, layout.positions[i].x);
        min_y = std::min(min_y, layout.positions[i].y);
        max_y = std::max(max_y, layout.positions[i].y);
    }
    const double span_x = std::max(max_x - min_x, 1e-9);
    const double span_y = std::max(max_y - min_y, 1e-9);
    auto place = [&](const Point& p) -> Point {
        return {opt.margin + (p.x - min_x) / span_x * (opt.width - 2 * opt.margin),
                opt.margin + (p.y - min_y) / span_y * (opt.height - 2 * opt.margin)};
    };

    double max_score = 0.0;
    for (const auto& [id, s] : sizes) {
        if (s < 0.0) throw Error("negative size for node: " + id);
        max_score = std::max(max_score, s);
    }
    auto radius = [&](const std::string& id) {
        auto it = sizes.find(id);
        const double s = it == sizes.end() ? 0.0 : it->second;
        if (max_score <= 0.0) return opt.min_radius;
        return opt.min_radius +
               (opt.max_radius - opt.min_radius) * std::sqrt(s / max_score);
    };

    double max_weight = 0.0;
    for (const auto& [key, w] : g.edges()) max_weight = std::max(max_weight, w);

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(opt.width) + "\" height=\"" + num(opt.height) + "\" viewBox=\"0 0 " +
           num(opt.width) + " " + num(opt.height) + "\">\n";

    // Edges first (under the nodes), in sorted edge order.
    for (const auto& [key, w] : g.edges()) {
        const Point a = place(layout.positions[key.first]);
        const Point b = place(layout.positions[key.second]);
        const double width =
            max_weight > 0.0 ? std::max(0.5, w / max_weight * opt.max_edge_width)
                             : 0.5;
        svg += "  <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" +
               num(b.x) + "\" y2=\"" + num(b.y) + "\" stroke=\"#999999\" stroke-width=\"" +
               num(width) + "\" stroke-opacity=\"0.6\"/>\n";
    }

    // Nodes and labels in sorted id order.
    std::vector<NodeIndex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeIndex>(i);
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        return g.node_id(a) < g.node_id(b);
    });
    for (const NodeIndex v : order) {
        const std::string& id = g.node_id(v);
        const Point p = place(layout.positions[v]);
        auto color_it = opt.node_colors.find(id);
        const std::string fill =
            color_it == opt.node_colors.end() ? "#4878a8" : color_it->second;
        svg += "  <circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" +
               num(radius(id)) + "\" fill=\"" + fill + "\" fill-opacity=\"0.85\"/>\n";
        auto label_it = labels.find(id);
        const std::string& label = label_it == labels.end() ? id : label_it->second;
        svg += "  <text x=\"" + num(p.x) + "\" y=\"" +
               num(p.y - radius(id) - 3.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" +
               xml_escape(label) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_tagcloud_svg(const TagCloud& cloud) {
    const double min_size = 12.0;
    const double max_size = 48.0;
    const double width = 800.0;

    std::string svg;
    double y = 20.0;
    std::string body;
    for (const auto& t : cloud.terms) {
        const double size = min_size + (max_size - min_size) * t.weight;
        y += size + 6.0;
        body += "  <text x=\"" + num(width / 2) + "\" y=\"" + num(y) +
                "\" font-family=\"sans-serif\" font-size=\"" + num(size) +
                "\" text-anchor=\"middle\">" + xml_escape(t.term) + "</text>\n";
    }
    const double height = y + 20.0;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
           num(width) + " " + num(height) + "\">\n";
    svg += body;
    svg += "</svg>\n";
    return svg;
}

}  // namespace corank
