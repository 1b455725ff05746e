#pragma once

#include "cyclotomo/modelset.hpp"
#include "cyclotomo/upolygon.hpp"

#include <string>

namespace cyclotomo {

/// Layout for the static figure emitter.
struct RenderOptions {
    double width = 640;   // viewport width in px; height follows the data
    double margin = 32;   // px kept free around the drawing
    double dot = 3.0;     // patch point radius in px
    double vertex = 6.0;  // classified point radius in px
};

/// Static SVG figure: patch points as small dots, an optional polygon
/// boundary, and optional black/grey point classes drawn as filled and
/// hollow dots. Output is deterministic (fixed decimal formatting).
std::string render_svg(const ModelSetPatch& patch, const UPolygon* polygon,
                       const std::vector<CycNum>* black, const std::vector<CycNum>* grey,
                       const RenderOptions& opts = {});

}  // namespace cyclotomo
