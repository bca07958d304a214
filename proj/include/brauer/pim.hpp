#pragma once

// Combinatorial shape of the projective indecomposables of a Brauer tree
// algebra. P(S_i) has top and socle S_i and a heart that is the direct sum of
// two uniserial arms, one for each end vertex of edge i.

#include "brauer/tree.hpp"

#include <string>
#include <vector>

namespace brauer {

struct Arm {
    std::size_t vertex = 0;   ///< index into tree.vertices()
    std::vector<int> word;    ///< composition factors, head end first
};

struct PimSpec {
    int edge = 0;
    Arm arm_u;
    Arm arm_v;

    /// 2 + |arm_u| + |arm_v|
    int dimension() const { return 2 + static_cast<int>(arm_u.word.size() + arm_v.word.size()); }

    /// Bracket notation, e.g. "[1 | 2,3 (+) 4 | 1]".
    std::string to_string() const;
};

/// Arm at vertex w: the walk around w starting after i, of length e_w * m_w - 1.
PimSpec pim(const BrauerTree& tree, int i);

/// Multiplicity of S_j as a composition factor of P(S_i).
int cartan_entry(const BrauerTree& tree, int i, int j);

/// Full Cartan matrix, indexed [i-1][j-1].
std::vector<std::vector<int>> cartan_matrix(const BrauerTree& tree);

}  // namespace brauer
