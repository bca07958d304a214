#include "brauer/groups.hpp"

#include "brauer/errors.hpp"
#include "brauer/linalg.hpp"

#include <cmath>
#include <sstream>

namespace brauer {

namespace {

// Exponent k with q = base^k, or -1.
int log_exact(std::uint64_t q, std::uint64_t base)
{
    if (q == 0)
        return -1;
    int k = 0;
    while (q % base == 0) {
        q /= base;
        ++k;
    }
    return q == 1 ? k : -1;
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (x * x > n)
        --x;
    while ((x + 1) * (x + 1) <= n)
        ++x;
    return x;
}

std::uint64_t exact_div(std::uint64_t n, std::uint64_t d, const std::string& what)
{
    if (n % d != 0)
        throw ClassificationError(what + ": " + std::to_string(n) + " is not divisible by " + std::to_string(d));
    return n / d;
}

int to_m(std::uint64_t v)
{
    if (v > 1000000)
        throw ClassificationError("exceptionality " + std::to_string(v) + " is too large for this tool");
    return static_cast<int>(v);
}

BlockSpec block(PresetKind kind, int m, GroupTable table, std::vector<std::string> dims, std::string trivial)
{
    BlockSpec b;
    b.preset.kind = kind;
    b.preset.e = preset_edge_count(b.preset);
    b.preset.m = m;
    if (kind == PresetKind::line_central)
        b.preset.e = 2;
    b.labels = group_table_labels(table);
    b.dimensions = std::move(dims);
    b.table = table;
    b.trivial = std::move(trivial);
    return b;
}

GroupBlockConfig classify_sz(std::uint64_t q, std::uint64_t r)
{
    const int k = log_exact(q, 2);
    if (k < 1 || k % 2 == 0)
        throw ClassificationError("q = " + std::to_string(q) + " is not of the form 2^(2a+1)");
    if (r % 2 == 0 || !is_prime(r))
        throw ClassificationError("r = " + std::to_string(r) + " must be an odd prime");
    GroupBlockConfig c;
    c.family = Family::Sz;
    c.q = q;
    c.r = r;
    c.s = isqrt(2 * q);
    c.character_labels = {"1", "Pi", "Gamma_1", "Gamma_2", "Omega_u", "Theta_l", "Lambda_v"};
    const std::uint64_t s = c.s;

    if ((q - 1) % r == 0) {
        if (q == 2)
            throw ClassificationError("Sz(2) is only admitted for r | q+s+1");
        c.group_case = GroupCase::q_minus_1;
        c.r_part = r_part(q - 1, r);
        const int m = to_m((c.r_part - 1) / 2);
        c.blocks.push_back(block(PresetKind::line_central, m, GroupTable::suzuki1, {"", "1", "q^2"}, "k"));
        c.lonely_blocks = ((q - 1) / c.r_part - 1) / 2;
        return c;
    }
    const std::uint64_t minus = q - s + 1;
    const std::uint64_t plus = q + s + 1;
    if (minus % r == 0) {
        if (q == 2)
            throw ClassificationError("Sz(2) is only admitted for r | q+s+1");
        c.group_case = GroupCase::q_minus_s_plus_1;
        c.r_part = r_part(minus, r);
        const int m = to_m(exact_div(c.r_part - 1, 4, "exceptionality (r^x-1)/4"));
        c.blocks.push_back(block(PresetKind::sz_qmsp1, m, GroupTable::suzuki_case2,
                                 {"", "1", "(s/2)(q-1)", "q^2-1", "(s/2)(q-1)"}, "k"));
        c.lonely_blocks = (minus / c.r_part - 1) / 4;
        return c;
    }
    if (plus % r == 0) {
        c.group_case = GroupCase::q_plus_s_plus_1;
        c.r_part = r_part(plus, r);
        const int m = to_m(exact_div(c.r_part - 1, 4, "exceptionality (r^x-1)/4"));
        if (q == 2 && m != 1)
            throw ClassificationError("Sz(2) needs m = 1");
        c.blocks.push_back(block(PresetKind::sz_qpsp1, m, GroupTable::suzuki_case3,
                                 {"", "1", "(s/2)(q-1)", "(q-1)(q-s+1)", "(s/2)(q-1)"}, "k"));
        c.lonely_blocks = (plus / c.r_part - 1) / 4;
        return c;
    }
    throw ClassificationError("r = " + std::to_string(r) + " divides none of q-1, q-s+1, q+s+1 for q = " +
                              std::to_string(q));
}

GroupBlockConfig classify_ree(std::uint64_t q, std::uint64_t r)
{
    const int k = log_exact(q, 3);
    if (k < 1 || k % 2 == 0)
        throw ClassificationError("q = " + std::to_string(q) + " is not of the form 3^(2a+1)");
    if (r <= 3 || !is_prime(r))
        throw ClassificationError("r = " + std::to_string(r) + " must be a prime > 3");
    GroupBlockConfig c;
    c.family = Family::Ree;
    c.q = q;
    c.r = r;
    c.s = isqrt(3 * q);
    const std::uint64_t s = c.s;

    if ((q - 1) % r == 0) {
        if (q == 3)
            throw ClassificationError("r | q-1 needs q > 3");
        c.group_case = GroupCase::q_minus_1;
        c.r_part = r_part(q - 1, r);
        const int m = to_m((c.r_part - 1) / 2);
        for (int b = 0; b < 2; ++b)
            c.blocks.push_back(block(PresetKind::ree_qm1, m, GroupTable::ree_minus_one, {"", "", ""}, ""));
        return c;
    }
    if ((q + 1) % r == 0) {
        if (q == 3)
            throw ClassificationError("r | q+1 needs q > 3");
        c.group_case = GroupCase::q_plus_1;
        c.r_part = r_part(q + 1, r);
        const int m6 = to_m(exact_div(c.r_part - 1, 6, "exceptionality (r^x-1)/6"));
        const int m2 = to_m((c.r_part - 1) / 2);
        c.blocks.push_back(block(PresetKind::ree_qp1_principal, m6, GroupTable::forkylad,
                                 {"", "1", "", "", "", "", ""}, "S_1"));
        c.blocks.push_back(block(PresetKind::ree_qp1_aux, m2, GroupTable::forkylad_aux, {"", "", ""}, ""));
        return c;
    }
    if ((q + s + 1) % r == 0) {
        c.group_case = GroupCase::q_plus_s_plus_1;
        c.r_part = r_part(q + s + 1, r);
        const int m = to_m(exact_div(c.r_part - 1, 6, "exceptionality (r^x-1)/6"));
        c.blocks.push_back(block(PresetKind::ree_qpsp1, m, GroupTable::ree_star, {"", "", "", "", "1", "", ""}, "S_4"));
        return c;
    }
    if ((q - s + 1) % r == 0) {
        c.group_case = GroupCase::q_minus_s_plus_1;
        c.r_part = r_part(q - s + 1, r);
        const int m = to_m(exact_div(c.r_part - 1, 6, "exceptionality (r^x-1)/6"));
        c.blocks.push_back(block(PresetKind::ree_qmsp1, m, GroupTable::ree_long_star,
                                 {"", "1", "", "", "", "", ""}, "S_1"));
        return c;
    }
    throw ClassificationError("r = " + std::to_string(r) + " divides none of q-1, q+1, q-s+1, q+s+1 for q = " +
                              std::to_string(q));
}

GroupBlockConfig wrap_psu3(TreePreset p)
{
    check_preset(p);
    GroupBlockConfig c;
    c.family = Family::PSU3;
    c.group_case = GroupCase::user_supplied;
    BlockSpec b;
    b.preset = p;
    b.labels = simple_labels(p);
    b.dimensions.assign(b.labels.size(), "");
    c.blocks.push_back(std::move(b));
    return c;
}

}  // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::Sz:
        return "Sz";
    case Family::Ree:
        return "Ree";
    case Family::PSU3:
        return "PSU3";
    }
    return "unknown";
}

std::string to_string(GroupCase c)
{
    switch (c) {
    case GroupCase::q_minus_1:
        return "q-1";
    case GroupCase::q_plus_1:
        return "q+1";
    case GroupCase::q_minus_s_plus_1:
        return "q-s+1";
    case GroupCase::q_plus_s_plus_1:
        return "q+s+1";
    case GroupCase::user_supplied:
        return "user_supplied";
    }
    return "unknown";
}

Family family_from_name(const std::string& name)
{
    if (name == "Sz" || name == "sz" || name == "suzuki")
        return Family::Sz;
    if (name == "Ree" || name == "ree")
        return Family::Ree;
    if (name == "PSU3" || name == "psu3")
        return Family::PSU3;
    throw ParameterError("unknown family '" + name + "' (expected Sz, Ree or PSU3)");
}

std::uint64_t r_part(std::uint64_t n, std::uint64_t r)
{
    if (r < 2)
        throw ParameterError("r must be >= 2");
    if (n == 0)
        throw ParameterError("r-part of 0 is undefined");
    std::uint64_t out = 1;
    while (n % r == 0) {
        n /= r;
        out *= r;
    }
    return out;
}

GroupBlockConfig classify(Family family, std::uint64_t q, std::uint64_t r)
{
    switch (family) {
    case Family::Sz:
        return classify_sz(q, r);
    case Family::Ree:
        return classify_ree(q, r);
    case Family::PSU3:
        throw ClassificationError("PSU3 blocks are not derived from (q, r); give the tree shape instead");
    }
    throw ClassificationError("unknown family");
}

GroupBlockConfig psu3_star3(int m)
{
    TreePreset p;
    p.kind = PresetKind::star_central;
    p.e = 3;
    p.m = m;
    return wrap_psu3(p);
}

GroupBlockConfig psu3_line(int e, int m, LinePosition position, int a)
{
    TreePreset p;
    p.e = e;
    p.m = m;
    switch (position) {
    case LinePosition::none:
        p.kind = PresetKind::line_plain;
        if (m != 1)
            throw ParameterError("a line without exceptional vertex has m = 1");
        break;
    case LinePosition::outer:
        p.kind = PresetKind::line_outer;
        break;
    case LinePosition::inner:
        p.kind = PresetKind::line_inner;
        p.a = a;
        break;
    }
    return wrap_psu3(p);
}

int ext_group_table(const GroupBlockConfig& config, std::size_t block, int i, int j, std::int64_t l)
{
    const BlockSpec& b = config.blocks.at(block);
    if (!b.table)
        throw ParameterError("block " + std::to_string(block) + " has no printed table");
    return ext_group_table(*b.table, i, j, l, b.m());
}

std::string GroupBlockConfig::describe() const
{
    std::ostringstream os;
    os << to_string(family);
    if (family != Family::PSU3)
        os << "(q=" << q << "), r=" << r << ", s=" << s << ", case " << to_string(group_case) << ", r-part " << r_part;
    else
        os << ", user-supplied shape";
    os << "\n";
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const BlockSpec& b = blocks[k];
        os << "  block " << k + 1 << ": " << brauer::describe(b.preset);
        if (b.table)
            os << ", table " << to_string(*b.table);
        os << "\n    simples:";
        for (std::size_t i = 1; i < b.labels.size(); ++i) {
            os << " " << b.labels[i];
            if (i < b.dimensions.size() && !b.dimensions[i].empty())
                os << " (dim " << b.dimensions[i] << ")";
        }
        if (!b.trivial.empty())
            os << "; trivial module " << b.trivial;
        os << "\n";
    }
    if (family != Family::PSU3) {
        os << "  lonely blocks: ";
        if (lonely_blocks)
            os << *lonely_blocks;
        else
            os << "not determined";
        os << "\n";
    }
    return os.str();
}

}  // namespace brauer
