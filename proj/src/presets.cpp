#include "brauer/presets.hpp"

#include "brauer/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace brauer {

namespace {

constexpr std::array<std::pair<PresetKind, const char*>, 17> kNames{{
    {PresetKind::star_central, "star_central"},
    {PresetKind::star_outer, "star_outer"},
    {PresetKind::line_plain, "line_plain"},
    {PresetKind::line_central, "line_central"},
    {PresetKind::line_outer, "line_outer"},
    {PresetKind::line_inner, "line_inner"},
    {PresetKind::sz_qm1, "sz_qm1"},
    {PresetKind::sz_qmsp1, "sz_qmsp1"},
    {PresetKind::sz_qpsp1, "sz_qpsp1"},
    {PresetKind::ree_qm1, "ree_qm1"},
    {PresetKind::ree_qp1_principal, "ree_qp1_principal"},
    {PresetKind::ree_qp1_aux, "ree_qp1_aux"},
    {PresetKind::ree_qpsp1, "ree_qpsp1"},
    {PresetKind::ree_qmsp1, "ree_qmsp1"},
    {PresetKind::psu3_star3, "psu3_star3"},
    {PresetKind::psu3_line, "psu3_line"},
    {PresetKind::single_edge, "single_edge"},
}};

Vertex vx(int id, std::vector<int> order, int mult = 1) { return Vertex{id, std::move(order), mult}; }

// Star with centre 0 whose cyclic order is `center_order`; leaf k hangs off edge k.
BrauerTree star(const std::vector<int>& center_order, int center_mult, int exceptional_leaf, int leaf_mult)
{
    std::vector<Vertex> vs{vx(0, center_order, center_mult)};
    std::vector<int> edges = center_order;
    std::sort(edges.begin(), edges.end());
    for (int k : edges)
        vs.push_back(vx(k, {k}, k == exceptional_leaf ? leaf_mult : 1));
    return BrauerTree(static_cast<int>(center_order.size()), std::move(vs));
}

std::vector<int> ascending(int e)
{
    std::vector<int> v(static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k)
        v[static_cast<std::size_t>(k)] = k + 1;
    return v;
}

// Path v_0 -1- v_1 -2- ... -e- v_e with multiplicity m at v_{exc_vertex} (or none when exc_vertex < 0).
BrauerTree line(int e, int exc_vertex, int m)
{
    std::vector<Vertex> vs;
    for (int k = 0; k <= e; ++k) {
        std::vector<int> order;
        if (k >= 1)
            order.push_back(k);
        if (k + 1 <= e)
            order.push_back(k + 1);
        vs.push_back(vx(k, order, k == exc_vertex ? m : 1));
    }
    return BrauerTree(e, std::move(vs));
}

void need(bool cond, const TreePreset& p, const std::string& what)
{
    if (!cond)
        throw ParameterError("invalid parameters for " + describe(p) + ": " + what);
}

}  // namespace

std::string preset_name(PresetKind kind)
{
    for (const auto& [k, name] : kNames)
        if (k == kind)
            return name;
    return "unknown";
}

PresetKind preset_kind_from_name(const std::string& name)
{
    for (const auto& [k, n] : kNames)
        if (name == n)
            return k;
    throw ParameterError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names()
{
    std::vector<std::string> out;
    for (const auto& [k, n] : kNames)
        out.emplace_back(n);
    return out;
}

int line_central_position(int e) { return (e + 1) / 2; }

int preset_edge_count(const TreePreset& p)
{
    switch (p.kind) {
    case PresetKind::sz_qm1:
    case PresetKind::ree_qm1:
    case PresetKind::ree_qp1_aux:
        return 2;
    case PresetKind::sz_qmsp1:
    case PresetKind::sz_qpsp1:
        return 4;
    case PresetKind::ree_qp1_principal:
    case PresetKind::ree_qpsp1:
    case PresetKind::ree_qmsp1:
        return 6;
    case PresetKind::psu3_star3:
        return 3;
    case PresetKind::single_edge:
        return 1;
    default:
        return p.e;
    }
}

std::string describe(const TreePreset& p)
{
    std::ostringstream os;
    os << preset_name(p.kind) << "(";
    switch (p.kind) {
    case PresetKind::star_central:
    case PresetKind::star_outer:
    case PresetKind::line_central:
    case PresetKind::line_outer:
        os << "e=" << p.e << ",m=" << p.m;
        break;
    case PresetKind::line_plain:
        os << "e=" << p.e;
        break;
    case PresetKind::line_inner:
        os << "e=" << p.e << ",m=" << p.m << ",a=" << p.a;
        break;
    case PresetKind::psu3_line:
        os << "e=" << p.e << ",m=" << p.m << ",position="
           << (p.position == LinePosition::none ? "none" : p.position == LinePosition::outer ? "outer" : "inner");
        if (p.position == LinePosition::inner)
            os << ",a=" << p.a;
        break;
    default:
        os << "m=" << p.m;
    }
    if (p.mirrored)
        os << ",mirrored";
    os << ")";
    return os.str();
}

void check_preset(const TreePreset& p)
{
    need(p.m >= 1, p, "m must be >= 1");
    switch (p.kind) {
    case PresetKind::star_central:
    case PresetKind::star_outer:
    case PresetKind::line_plain:
        need(p.e >= 1, p, "e must be >= 1");
        break;
    case PresetKind::line_outer:
        need(p.e >= 1, p, "e must be >= 1");
        break;
    case PresetKind::line_central:
        need(p.e >= 2, p, "a line needs e >= 2 for an inner vertex");
        break;
    case PresetKind::line_inner:
        need(p.e >= 3, p, "line_inner needs e >= 3");
        need(p.a > 1 && p.a < p.e, p, "need 1 < a < e");
        break;
    case PresetKind::psu3_line:
        need(p.e >= 1, p, "e must be >= 1");
        if (p.position == LinePosition::inner)
            need(p.a >= 1 && p.a < p.e, p, "inner position needs 1 <= a < e");
        if (p.position == LinePosition::none)
            need(p.m == 1, p, "a line without exceptional vertex has m = 1");
        break;
    default:
        break;
    }
}

BrauerTree instantiate(const TreePreset& p)
{
    check_preset(p);
    BrauerTree t;
    switch (p.kind) {
    case PresetKind::star_central:
        // Centre order (1, 2, ..., e): the arm of P(S_i) reads S_{i+1}, ..., S_{i+e-1}, S_i, ...
        t = star(ascending(p.e), p.m, 0, 1);
        break;
    case PresetKind::star_outer:
        t = star(ascending(p.e), 1, 1, p.m);
        break;
    case PresetKind::line_plain:
        t = line(p.e, -1, 1);
        break;
    case PresetKind::line_central:
        t = line(p.e, line_central_position(p.e), p.m);
        break;
    case PresetKind::line_outer:
        t = line(p.e, 0, p.m);
        break;
    case PresetKind::line_inner:
        t = line(p.e, p.a, p.m);
        break;
    case PresetKind::sz_qm1:
    case PresetKind::ree_qm1:
        // S_1 (trivial) and S_2 meet at the exceptional vertex.
        t = line(2, 1, p.m);
        break;
    case PresetKind::sz_qmsp1:
        // Labels k=1, U=2, V=3, W=4. Path k - V into the exceptional vertex,
        // which carries the order (V, U, W): P(U) = [U | W | V | U | ... | V | U].
        t = BrauerTree(4, {vx(0, {1}), vx(1, {1, 3}), vx(2, {3, 2, 4}, p.m), vx(3, {2}), vx(4, {4})});
        break;
    case PresetKind::sz_qpsp1:
        // Labels k=1, U=2, V=3, W=4. Star with the exceptional vertex beyond V;
        // centre order (V, W, k, U) so that Omega V has W in its head.
        t = BrauerTree(4, {vx(0, {3, 4, 1, 2}), vx(1, {1}), vx(2, {2}), vx(3, {3}, p.m), vx(4, {4})});
        break;
    case PresetKind::ree_qp1_principal:
        // Vertex A joins S_1..S_4 with order (S_2, S_3, S_1, S_4); the exceptional
        // vertex B joins S_2, S_5, S_6 with order (S_2, S_6, S_5). With these,
        // Omega S_1 = [S_4 | S_2 | S_3 | S_1] and Omega S_2 has head S_3 + S_6.
        t = BrauerTree(6, {vx(0, {2, 3, 1, 4}), vx(1, {2, 6, 5}, p.m), vx(2, {1}), vx(3, {3}), vx(4, {4}),
                           vx(5, {5}), vx(6, {6})});
        break;
    case PresetKind::ree_qp1_aux:
        // T_2 = S_1 sits next to the exceptional end, T_1 = S_2.
        t = line(2, 0, p.m);
        break;
    case PresetKind::ree_qpsp1:
        // Exceptional leaf on S_1; centre order (S_1, S_6, S_5, S_4, S_3, S_2),
        // so Omega S_i has head S_{i-1}.
        t = star({1, 6, 5, 4, 3, 2}, 1, 1, p.m);
        break;
    case PresetKind::ree_qmsp1:
        // S_1 - S_2 path into the exceptional vertex of degree 5 with order
        // (S_2, S_3, S_4, S_5, S_6). The embedding is not determined by the
        // block theory; `mirrored` gives the other orientation.
        t = BrauerTree(6, {vx(0, {1}), vx(1, {1, 2}), vx(2, {2, 3, 4, 5, 6}, p.m), vx(3, {3}), vx(4, {4}),
                           vx(5, {5}), vx(6, {6})});
        break;
    case PresetKind::psu3_star3:
        t = star(ascending(3), p.m, 0, 1);
        break;
    case PresetKind::psu3_line:
        if (p.position == LinePosition::none)
            t = line(p.e, -1, 1);
        else if (p.position == LinePosition::outer)
            t = line(p.e, 0, p.m);
        else
            t = line(p.e, p.a, p.m);
        break;
    case PresetKind::single_edge:
        t = BrauerTree(1, {vx(0, {1}, p.m), vx(1, {1})});
        break;
    }
    if (p.mirrored)
        t = t.mirrored();
    require_valid(t);
    return t;
}

std::vector<std::string> simple_labels(const TreePreset& p)
{
    switch (p.kind) {
    case PresetKind::sz_qm1:
        return {"", "k", "V"};
    case PresetKind::sz_qmsp1:
    case PresetKind::sz_qpsp1:
        return {"", "k", "U", "V", "W"};
    case PresetKind::ree_qp1_aux:
        return {"", "T_2", "T_1"};
    default: {
        std::vector<std::string> out{""};
        for (int i = 1; i <= preset_edge_count(p); ++i)
            out.push_back("S_" + std::to_string(i));
        return out;
    }
    }
}

}  // namespace brauer
