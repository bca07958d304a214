#pragma once

// Cross-checks between the closed forms and the exact engine, and the
// tabular output used by the command-line tool.

#include "brauer/closed_form.hpp"
#include "brauer/oracle.hpp"
#include "brauer/presets.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

/// Which reading of a star or line formula to use. Group tables and the
/// lonely block have only one.
enum class Variant { derived, stated };

std::string to_string(Variant v);
Variant variant_from_name(const std::string& name);

struct ClosedForm {
    std::string proposition;  // e.g. "line_exceptional_inner", "forkylad"
    Provenance provenance = Provenance::printed_formula;
    int period = 2;
    std::function<int(int, int, std::int64_t)> ext;
};

/// Closed form attached to a preset, if there is one.
std::optional<ClosedForm> closed_form_for(const TreePreset& preset, Variant variant = Variant::derived);

/// A preset whose instantiation equals `tree` up to rotation of cyclic orders.
std::optional<TreePreset> recognise(const BrauerTree& tree);

/// dims[i-1][n][j-1] = dim Ext^n(S_i, S_j) for n = 0..n_max.
struct ExtGrid {
    int simple_count = 0;
    int n_max = 0;
    int period = 1;
    Provenance provenance = Provenance::oracle;
    std::vector<std::vector<std::vector<int>>> dims;

    int at(int i, int j, int n) const { return dims[i - 1][n][j - 1]; }
};

ExtGrid oracle_grid(const BrauerTree& tree, Elem p, int n_max, const OmegaOptions& opts = {});
ExtGrid closed_grid(const ClosedForm& form, int e, int n_max);

/// CSV with header i,j,ell,dim; rows ordered by i, then j, then ell.
std::string render_csv(const ExtGrid& grid);
/// {"period":..,"dims":[[i,j,ell,d],...],"provenance":..}
std::string render_json(const ExtGrid& grid);

struct Mismatch {
    int i = 0;
    int j = 0;
    int ell = 0;
    int closed = 0;
    int oracle = 0;
    std::string proposition;
};

struct VerifyReport {
    std::string tree;
    std::string engines;
    int n_max = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;

    bool pass() const { return mismatches.empty(); }
    std::string to_string() const;
};

/// Closed form against the oracle on every (i, j, l <= n_max). Presets
/// without a closed form get the oracle self-checks only.
VerifyReport verify_preset(const TreePreset& preset, int n_max, Elem p, Variant variant = Variant::derived,
                           const OmegaOptions& opts = {});
VerifyReport verify_tree(const BrauerTree& tree, int n_max, Elem p, Variant variant = Variant::derived,
                         const OmegaOptions& opts = {});

/// Self-checks for trees without a closed form: Ext^0 = delta and period 2e.
VerifyReport oracle_self_check(const BrauerTree& tree, const std::string& name, int n_max, Elem p,
                               const OmegaOptions& opts = {});

/// An Omega^n S_i = S_j claim checked with is_isomorphic.
struct OmegaTrace {
    TreePreset preset;
    int i = 0;
    int n = 0;
    int j = 0;
    IsoResult result = IsoResult::unknown;
};

/// How a printed table fared for one preset.
struct TableCheck {
    GroupTable table{};
    TreePreset preset;
    VerifyReport report;
    bool flagged = false;  // mismatches reported but not counted as failures
};

struct TablesReport {
    std::vector<TableCheck> checks;
    std::vector<OmegaTrace> traces;
    std::vector<std::string> notes;

    bool pass() const;
    std::string to_string() const;
};

/// Every printed group table against the oracle over several m, including both
/// orientations of the long star, plus the recorded Omega-orbit identities.
TablesReport verify_tables(Elem p = 2, const OmegaOptions& opts = {});

/// The Omega identities recorded alongside the tables.
std::vector<OmegaTrace> check_traces(Elem p = 2);

}  // namespace brauer
