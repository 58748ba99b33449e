#ifndef GRAYUD_RENDER_HPP
#define GRAYUD_RENDER_HPP

#include <map>
#include <string>

#include "grayud/embedding.hpp"

namespace grayud {

struct RenderStyle {
    double canvas_size = 800.0;   // square canvas, abstract pixels
    double margin = 40.0;
    double vertex_radius = 5.0;
    double stroke_width = 1.5;
    bool circle_overlay = false;  // draw a unit circle around every hollow vertex
    // stroke/fill per color tag
    std::map<ColorTag, std::string> palette = {
        {ColorTag::Blue, "#1f4fd8"},
        {ColorTag::Green, "#1e8f3e"},
        {ColorTag::Red, "#d12f2f"},
        {ColorTag::None, "#000000"},
    };
    std::string overlay_color = "#999999";
};

// Deterministic SVG 1.1 drawing: edges as line segments (sorted edge
// order), then vertices in id order, solid vertices filled and hollow
// vertices stroked-unfilled. The y axis is flipped so the figure appears
// in mathematical orientation.
std::string to_svg(const Embedding& e, const RenderStyle& style = {});

}  // namespace grayud

#endif
