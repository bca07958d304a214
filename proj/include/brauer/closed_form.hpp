#pragma once

// Closed-form answers for dim Ext^l(S_i, S_j) on stars, lines and the
// principal-block trees of the Suzuki and Ree groups. Every function is pure,
// accepts any l >= 0 and reduces it modulo its period.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace brauer {

enum class Provenance { printed_table, printed_formula, walk_derived, oracle };

std::string to_string(Provenance p);

/// dim Ext^l(S_i, S_j) for l taken modulo `period`.
struct ExtTable {
    int period = 1;
    int simple_count = 0;
    std::map<std::tuple<int, int, int>, int> entries;  // (i, j, l mod period)
    Provenance provenance = Provenance::oracle;

    int at(int i, int j, std::int64_t l) const;
    void set(int i, int j, int l, int dim);
};

struct FormulaParams {
    int e = 1;
    int m = 1;
    int a = 0;                 // line_inner: the exceptional vertex joins S_a and S_{a+1}
    bool descending = false;   // stars: centre read as (1, e, e-1, ..., 2) instead of (1, 2, ..., e)
};

/// A block with a single simple module and nontrivial defect.
int ext_lonely(std::int64_t l);

// Stars. Edge k of the preset corresponds to S_k; for star_outer the
// exceptional leaf hangs off S_1.

/// 1 iff l = j-i or j-i+1 (mod 2e).
int ext_star_central_stated(const FormulaParams& p, int i, int j, std::int64_t l);
/// 1 iff l = 2d or 2d-1 (mod 2e) with d = (j-i) mod e.
int ext_star_central_walk(const FormulaParams& p, int i, int j, std::int64_t l);

/// 1 iff i = j = 1, or l = j-i or j-i-1 (mod 2e).
int ext_star_outer_stated(const FormulaParams& p, int i, int j, std::int64_t l);
/// Residues forced by the Omega-orbit; requires m > 1.
int ext_star_outer(const FormulaParams& p, int i, int j, std::int64_t l);

// Lines. S_k joins v_{k-1} and v_k; line_outer puts the exceptional vertex at
// v_0, line_inner at v_a. These implement the two-window rules as printed.

int ext_line_plain(const FormulaParams& p, int i, int j, std::int64_t l);
int ext_line_outer(const FormulaParams& p, int i, int j, std::int64_t l);
/// Accepts 1 <= a < e; positions below e/2 are handled by reflecting the line.
int ext_line_inner(const FormulaParams& p, int i, int j, std::int64_t l);

// Corrected rules, checked against the oracle.

int ext_line_plain_derived(const FormulaParams& p, int i, int j, std::int64_t l);
/// Plain rule, plus every l in [2s+1+d_i+d_j, e-1] and its mirror 2e-1-l when
/// S_i and S_j lie on the longer side of v_a; s is the length of the shorter
/// side and d_k the distance of S_k from v_a.
int ext_line_inner_derived(const FormulaParams& p, int i, int j, std::int64_t l);

// Group tables, stored as printed: residue sets per (row, column).

enum class GroupTable {
    suzuki1,          // Sz(q), r | q-1; also Ree(q), r | q-1
    suzuki_case2,     // Sz(q), r | q-s+1
    suzuki_case3,     // Sz(q), r | q+s+1
    ree_minus_one,
    forkylad,         // Ree(q), r | q+1, principal block
    forkylad_aux,     // Ree(q), r | q+1, the two-simple block; S_1 = T_2, S_2 = T_1
    ree_star,         // Ree(q), r | q+s+1
    ree_long_star,    // Ree(q), r | q-s+1
};

std::string to_string(GroupTable t);
GroupTable group_table_from_name(const std::string& name);
std::vector<GroupTable> all_group_tables();
int group_table_period(GroupTable t);
int group_table_size(GroupTable t);
std::vector<std::string> group_table_labels(GroupTable t);

/// The printed residue set for (S_i, S_j); all residues for an "all" cell.
/// `m` only matters for suzuki_case3, whose (V, V) cell has an m = 1 branch.
std::vector<int> group_table_cell(GroupTable t, int i, int j, int m = 2);
int ext_group_table(GroupTable t, int i, int j, std::int64_t l, int m = 2);

ExtTable group_ext_table(GroupTable t, int m = 2);

}  // namespace brauer
