#pragma once

// Exact engine for Ext between simple modules of a Brauer tree algebra.
//
// The basic algebra is realised as a quiver with relations over F_p: the
// quiver vertices are the edges of the tree (the simple modules) and every
// tree vertex w with cyclic order (f_1, ..., f_k) contributes the cycle of
// arrows f_1 -> f_2 -> ... -> f_k -> f_1. Modules are representations given by
// one matrix per arrow. Ext^n(S_i, S_j) is read off as the multiplicity of
// S_j in the head of the n-th Heller translate of S_i.

#include "brauer/linalg.hpp"
#include "brauer/tree.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace brauer {

struct Arrow {
    std::size_t vertex;  ///< tree vertex index the arrow walks around
    int source;          ///< edge label
    int target;          ///< edge label
};

class QuiverAlgebra {
public:
    QuiverAlgebra(BrauerTree tree, Elem p);

    const BrauerTree& tree() const { return tree_; }
    const PrimeField& field() const { return field_; }
    int simple_count() const { return tree_.edge_count(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_arrows(std::size_t w) const { return cycle_[w] > 0; }
    /// Number of arrows in one full cycle around w starting anywhere (0 if w has no arrows).
    int cycle_length(std::size_t w) const { return cycle_[w]; }
    /// Index of the arrow around w leaving edge f, or -1.
    int arrow_from(std::size_t w, int edge) const;

private:
    BrauerTree tree_;
    PrimeField field_;
    std::vector<Arrow> arrows_;
    std::vector<int> cycle_;
    std::vector<std::vector<int>> arrow_index_;  // [w][edge]
};

/// Throws ParameterError for a composite p and InvariantError for an invalid tree.
QuiverAlgebra build_algebra(const BrauerTree& tree, Elem p);

/// A representation. Component i (1-based simple index) lives at dims[i-1];
/// maps[k] is the dims[target] x dims[source] matrix of arrow k.
struct ModuleRep {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    std::size_t total_dim() const;
    std::size_t dim(int simple) const { return dims.at(static_cast<std::size_t>(simple - 1)); }
};

ModuleRep simple_module(const QuiverAlgebra& alg, int i);
ModuleRep projective_module(const QuiverAlgebra& alg, int i);
ModuleRep direct_sum(const QuiverAlgebra& alg, const ModuleRep& a, const ModuleRep& b);

/// Relations of the algebra that fail on M, described in words; empty when M is a module.
std::vector<std::string> relation_failures(const QuiverAlgebra& alg, const ModuleRep& m);
inline bool satisfies_relations(const QuiverAlgebra& alg, const ModuleRep& m)
{
    return relation_failures(alg, m).empty();
}

/// dim of (M / rad M) at each simple, indexed [i-1].
std::vector<int> head_multiplicities(const QuiverAlgebra& alg, const ModuleRep& m);
/// dim of soc M at each simple, indexed [i-1].
std::vector<int> socle_multiplicities(const QuiverAlgebra& alg, const ModuleRep& m);

struct OmegaOptions {
    /// Refuse covers whose total dimension exceeds this.
    std::size_t max_dim = 100000;
};

/// Kernel of a minimal projective cover of M.
ModuleRep omega(const QuiverAlgebra& alg, const ModuleRep& m, const OmegaOptions& opts = {});

/// A homomorphism as one matrix per component, [i-1] of shape dims_N x dims_M.
using Hom = std::vector<Matrix>;

std::vector<Hom> hom_basis(const QuiverAlgebra& alg, const ModuleRep& from, const ModuleRep& to);
int hom_dim(const QuiverAlgebra& alg, const ModuleRep& from, const ModuleRep& to);

enum class IsoResult { yes, no, unknown };
std::string to_string(IsoResult r);

struct IsoOptions {
    std::uint64_t seed = 0x5eed;
    int random_trials = 64;
    /// Exhaustive search over all F_p-combinations of a Hom basis up to this many.
    std::uint64_t exhaustive_limit = 4096;
};

/// Never answers `no` without proof: an exhausted random search yields `unknown`.
IsoResult is_isomorphic(const QuiverAlgebra& alg, const ModuleRep& a, const ModuleRep& b, const IsoOptions& opts = {});

/// For n = 0..n_max, the vector (dim Ext^n(S_i, S_j))_j indexed [j-1].
std::vector<std::vector<int>> ext_dims_oracle(const BrauerTree& tree, Elem p, int i, int n_max,
                                              const OmegaOptions& opts = {});

/// Omega^n(S_i) for n = 0..n_max.
std::vector<ModuleRep> omega_orbit(const QuiverAlgebra& alg, int i, int n_max, const OmegaOptions& opts = {});

}  // namespace brauer
