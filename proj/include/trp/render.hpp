#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trp/orientation.hpp"
#include "trp/pencil.hpp"
#include "trp/topology.hpp"

namespace trp {

struct RenderOptions {
    int width = 640;
    int height = 640;
    /// Affine window is clipped to [-clip, clip] in both coordinates.
    double clip = 20.0;
    std::optional<Pencil> pencil;
    /// Member parameters to draw; empty means -2, -1, 0, 1, 2 and infinity.
    std::vector<PencilParameter> members;
    std::optional<TriangleWitness> triangle;
};

/// SVG picture of the affine chart z = 1: component traces, witnesses, pencil members and a
/// triangle overlay.  Floating point is used for drawing only.
std::string render_svg(const CurveTopology& t, const RenderOptions& options);

}  // namespace trp
