#pragma once

#include <map>
#include <string>

#include "corank/context.hpp"
#include "corank/graph.hpp"
#include "corank/layout.hpp"

namespace corank {

struct RenderOptions {
    double width = 1000.0;
    double height = 800.0;
    double margin = 40.0;
    double min_radius = 4.0;
    double max_radius = 28.0;
    double max_edge_width = 6.0;
    // Optional fill per node (e.g. discipline colors); default palette grey.
    std::map<std::string, std::string> node_colors;
};

// Standalone SVG 1.1. Radius grows with sqrt(score) between the configured
// bounds, edge width with weight. Node elements are emitted in sorted id
// order and all numbers use fixed two-decimal formatting, so identical
// inputs give byte-identical output. Throws Error when the layout is missing
// a node.
std::string render_svg(const Graph& g, const Layout& layout,
                       const std::map<std::string, double>& sizes,
                       const std::map<std::string, std::string>& labels,
                       const RenderOptions& options = {});

// Tag cloud as rows of text sized by term weight.
std::string render_tagcloud_svg(const TagCloud& cloud);

}  // namespace corank
