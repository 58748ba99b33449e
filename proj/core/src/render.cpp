#include "grayud/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace grayud {

namespace {

std::string px(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f", value);
    return buffer;
}

const std::string& palette_color(const RenderStyle& style, ColorTag tag) {
    auto it = style.palette.find(tag);
    if (it == style.palette.end())
        throw std::invalid_argument("render palette does not cover a used color tag");
    return it->second;
}

}  // namespace

std::string to_svg(const Embedding& e, const RenderStyle& style) {
    const int n = e.graph.vertex_count();

    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    if (n > 0) {
        min_x = max_x = e.coords[0].x;
        min_y = max_y = e.coords[0].y;
        for (const Vec2& c : e.coords) {
            min_x = std::min(min_x, c.x);
            max_x = std::max(max_x, c.x);
            min_y = std::min(min_y, c.y);
            max_y = std::max(max_y, c.y);
        }
    }
    if (style.circle_overlay) {
        // leave room for unit circles around hollow vertices
        min_x -= 1.0;
        max_x += 1.0;
        min_y -= 1.0;
        max_y += 1.0;
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    const double scale = (style.canvas_size - 2.0 * style.margin) / span;
    const double size = style.canvas_size;
    // y flipped: drawing coordinates grow downward
    auto sx = [&](double x) { return style.margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return size - style.margin - (y - min_y) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << px(size) << "\" height=\"" << px(size) << "\" viewBox=\"0 0 " << px(size)
        << " " << px(size) << "\">\n";

    if (style.circle_overlay) {
        for (int v = 0; v < n; ++v) {
            if (!e.graph.has_roles() || e.graph.role(v) != Role::Hollow) continue;
            out << "  <circle class=\"unit-circle\" cx=\"" << px(sx(e.coords[v].x))
                << "\" cy=\"" << px(sy(e.coords[v].y)) << "\" r=\"" << px(scale)
                << "\" fill=\"none\" stroke=\"" << style.overlay_color
                << "\" stroke-width=\"" << px(style.stroke_width * 0.5) << "\"/>\n";
        }
    }

    for (const auto& [a, b] : e.graph.edges()) {
        // edges inside a translate take its color; connector edges are black
        ColorTag tag = e.colors[a];
        if (tag != e.colors[b]) tag = ColorTag::None;
        out << "  <line x1=\"" << px(sx(e.coords[a].x)) << "\" y1=\""
            << px(sy(e.coords[a].y)) << "\" x2=\"" << px(sx(e.coords[b].x))
            << "\" y2=\"" << px(sy(e.coords[b].y)) << "\" stroke=\""
            << palette_color(style, tag) << "\" stroke-width=\""
            << px(style.stroke_width) << "\"/>\n";
    }

    for (int v = 0; v < n; ++v) {
        const bool hollow = e.graph.has_roles() && e.graph.role(v) == Role::Hollow;
        const std::string& color = palette_color(style, e.colors[v]);
        out << "  <circle class=\"vertex\" cx=\"" << px(sx(e.coords[v].x))
            << "\" cy=\"" << px(sy(e.coords[v].y)) << "\" r=\""
            << px(style.vertex_radius) << "\"";
        if (hollow)
            out << " fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
                << px(style.stroke_width) << "\"";
        else
            out << " fill=\"" << color << "\" stroke=\"none\"";
        out << "/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace grayud
