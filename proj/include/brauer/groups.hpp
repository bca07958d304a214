#pragma once

// Cross-characteristic r-blocks of Sz(q), Ree(q) and PSU3(q) with cyclic
// Sylow r-subgroups: which Brauer tree, which exceptionality, which table.

#include "brauer/closed_form.hpp"
#include "brauer/presets.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

enum class Family { Sz, Ree, PSU3 };
enum class GroupCase { q_minus_1, q_plus_1, q_minus_s_plus_1, q_plus_s_plus_1, user_supplied };

std::string to_string(Family f);
std::string to_string(GroupCase c);
Family family_from_name(const std::string& name);

struct BlockSpec {
    TreePreset preset;
    std::vector<std::string> labels;      // [1..e], entry 0 unused
    std::vector<std::string> dimensions;  // dim of each simple as an expression in q, s; "" when unknown
    std::optional<GroupTable> table;
    std::string trivial;                  // label of the trivial module, "" if not in this block

    int m() const { return preset.m; }
    int edge_count() const { return preset_edge_count(preset); }
};

struct GroupBlockConfig {
    Family family = Family::Sz;
    std::uint64_t q = 0;
    std::uint64_t r = 0;
    std::uint64_t s = 0;
    GroupCase group_case = GroupCase::user_supplied;
    std::uint64_t r_part = 0;
    std::vector<BlockSpec> blocks;
    /// Blocks of full defect with a single simple module; unknown for Ree.
    std::optional<std::uint64_t> lonely_blocks;
    std::vector<std::string> character_labels;

    std::string describe() const;
};

/// Largest power of r dividing n.
std::uint64_t r_part(std::uint64_t n, std::uint64_t r);

/// Throws ClassificationError naming the failed condition.
GroupBlockConfig classify(Family family, std::uint64_t q, std::uint64_t r);

/// Wraps a line or three-pointed star given by the user.
GroupBlockConfig psu3_star3(int m);
GroupBlockConfig psu3_line(int e, int m, LinePosition position, int a = 0);

/// Table lookup for block `block` of a classified configuration.
int ext_group_table(const GroupBlockConfig& config, std::size_t block, int i, int j, std::int64_t l);

}  // namespace brauer
