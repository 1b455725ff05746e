#include "cyclotomo/svg.hpp"

#include "cyclotomo/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace cyclotomo {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Frame {
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    double scale = 1, width = 0, height = 0, margin = 0;

    double px(double x) const { return margin + (x - min_x) * scale; }
    double py(double y) const { return margin + (max_y - y) * scale; }  // y grows upward
};

void grow(Frame& f, const CycNum& z, bool& first) {
    const double x = cyc_to_double_re(z), y = cyc_to_double_im(z);
    if (first) {
        f.min_x = f.max_x = x;
        f.min_y = f.max_y = y;
        first = false;
        return;
    }
    f.min_x = std::min(f.min_x, x);
    f.max_x = std::max(f.max_x, x);
    f.min_y = std::min(f.min_y, y);
    f.max_y = std::max(f.max_y, y);
}

void circle(std::string& out, const Frame& f, const CycNum& z, double r, const char* style) {
    out += "  <circle cx=\"" + fmt(f.px(cyc_to_double_re(z))) + "\" cy=\"" +
           fmt(f.py(cyc_to_double_im(z))) + "\" r=\"" + fmt(r) + "\" " + style + "/>\n";
}

}  // namespace

std::string render_svg(const ModelSetPatch& patch, const UPolygon* polygon,
                       const std::vector<CycNum>* black, const std::vector<CycNum>* grey,
                       const RenderOptions& opts) {
    Frame f;
    f.margin = opts.margin;
    bool first = true;
    for (const CycNum& z : patch.points) grow(f, z, first);
    if (polygon)
        for (const CycNum& v : polygon->vertices) grow(f, v, first);
    if (first) throw std::domain_error("render_svg: nothing to draw");

    const double span_x = std::max(f.max_x - f.min_x, 1e-9);
    const double span_y = std::max(f.max_y - f.min_y, 1e-9);
    f.scale = (opts.width - 2 * opts.margin) / span_x;
    f.width = opts.width;
    f.height = span_y * f.scale + 2 * opts.margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(f.width) +
           "\" height=\"" + fmt(f.height) + "\" viewBox=\"0 0 " + fmt(f.width) + " " +
           fmt(f.height) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    if (polygon && !polygon->vertices.empty()) {
        std::string d = "M";
        for (const CycNum& v : polygon->vertices) {
            d += " " + fmt(f.px(cyc_to_double_re(v))) + " " + fmt(f.py(cyc_to_double_im(v)));
            d += " L";
        }
        d.resize(d.size() - 2);
        d += " Z";
        out += "  <path d=\"" + d +
               "\" fill=\"none\" stroke=\"#1f1f1f\" stroke-width=\"1.5\"/>\n";
    }

    for (const CycNum& z : patch.points)
        circle(out, f, z, opts.dot, "fill=\"#b0b0b0\"");
    if (grey)
        for (const CycNum& z : *grey)
            circle(out, f, z, opts.vertex,
                   "fill=\"#ffffff\" stroke=\"#1f1f1f\" stroke-width=\"1.5\"");
    if (black)
        for (const CycNum& z : *black) circle(out, f, z, opts.vertex, "fill=\"#1f1f1f\"");

    out += "</svg>\n";
    return out;
}

}  // namespace cyclotomo
