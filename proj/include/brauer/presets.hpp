#pragma once

// Named tree shapes: the generic stars and lines plus the principal-block
// trees of Sz(q), Ree(q) and PSU3(q) in cross characteristic.

#include "brauer/tree.hpp"

#include <string>
#include <vector>

namespace brauer {

enum class PresetKind {
    star_central,       // exceptional vertex (if any) at the centre
    star_outer,         // exceptional vertex at the far end of edge 1
    line_plain,         // no exceptional vertex
    line_central,       // exceptional vertex joining edges a, a+1 with a = ceil(e/2)
    line_outer,         // exceptional vertex at the far end of edge 1
    line_inner,         // exceptional vertex joining edges a, a+1, 1 < a < e
    sz_qm1,
    sz_qmsp1,
    sz_qpsp1,
    ree_qm1,
    ree_qp1_principal,
    ree_qp1_aux,
    ree_qpsp1,
    ree_qmsp1,
    psu3_star3,
    psu3_line,
    single_edge,
};

/// Where the exceptional vertex sits on a PSU3 line.
enum class LinePosition { none, outer, inner };

struct TreePreset {
    PresetKind kind = PresetKind::single_edge;
    int e = 1;
    int m = 1;
    int a = 0;                                  // line_inner / psu3_line inner
    LinePosition position = LinePosition::none;  // psu3_line only
    bool mirrored = false;                       // reverse every cyclic order
};

std::string preset_name(PresetKind kind);
PresetKind preset_kind_from_name(const std::string& name);
std::vector<std::string> preset_names();

/// Short human-readable form, e.g. "sz_qmsp1(m=2)".
std::string describe(const TreePreset& preset);

/// Edge count implied by the preset (fixed for the group presets).
int preset_edge_count(const TreePreset& preset);

/// Throws ParameterError when the parameters are out of range.
void check_preset(const TreePreset& preset);

BrauerTree instantiate(const TreePreset& preset);

/// Display labels of the simple modules, indexed 1..e (entry 0 unused).
std::vector<std::string> simple_labels(const TreePreset& preset);

/// Position of the exceptional vertex used by line_central.
int line_central_position(int e);

}  // namespace brauer
