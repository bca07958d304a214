#include "brauer/errors.hpp"
#include "brauer/presets.hpp"
#include "brauer/tree.hpp"

#include <doctest.h>

#include <algorithm>

using namespace brauer;

namespace {

bool names(const ValidationReport& rep, const std::string& needle)
{
    return std::any_of(rep.violations.begin(), rep.violations.end(), [&](const Violation& v) {
        return v.invariant.find(needle) != std::string::npos || v.detail.find(needle) != std::string::npos;
    });
}

}  // namespace

TEST_CASE("smallest tree is valid")
{
    BrauerTree t(1, {{0, {1}, 1}, {1, {1}, 1}});
    CHECK(validate(t).ok());
    CHECK_FALSE(t.exceptional().has_value());
}

TEST_CASE("preset instantiations are valid")
{
    CHECK(validate(instantiate({PresetKind::star_central, 4, 3})).ok());
    for (const auto& name : preset_names()) {
        TreePreset p;
        p.kind = preset_kind_from_name(name);
        p.e = 4;
        p.m = 2;
        p.a = 2;
        if (p.kind == PresetKind::line_plain)
            p.m = 1;
        if (p.kind == PresetKind::psu3_line)
            p.position = LinePosition::outer;
        CAPTURE(name);
        BrauerTree t = instantiate(p);
        CHECK(validate(t).ok());
        CHECK(t.edge_count() == preset_edge_count(p));
    }
}

TEST_CASE("edge at three vertices is reported")
{
    BrauerTree t(2, {{0, {1, 2}, 1}, {1, {2}, 1}, {2, {2}, 1}});
    auto rep = validate(t);
    CHECK_FALSE(rep.ok());
    CHECK(names(rep, "edge appears != 2 times"));
    CHECK_THROWS_AS(require_valid(t), InvariantError);
}

TEST_CASE("other invariants")
{
    SUBCASE("cycle")
    {
        BrauerTree t(3, {{0, {1, 3}, 1}, {1, {1, 2}, 1}, {2, {2, 3}, 1}, {3, {}, 1}});
        CHECK_FALSE(validate(t).ok());
    }
    SUBCASE("repeated label at a vertex")
    {
        BrauerTree t(1, {{0, {1, 1}, 1}, {1, {}, 1}});
        CHECK(names(validate(t), "twice"));
    }
    SUBCASE("two exceptional vertices")
    {
        BrauerTree t(1, {{0, {1}, 3}, {1, {1}, 3}});
        CHECK(names(validate(t), "more than one exceptional vertex"));
    }
    SUBCASE("label out of range")
    {
        BrauerTree t(1, {{0, {2}, 1}, {1, {1}, 1}});
        CHECK(names(validate(t), "edge labels in 1..e"));
    }
}

TEST_CASE("equality is up to rotation, not reflection")
{
    BrauerTree a = instantiate({PresetKind::star_central, 4, 2});
    std::vector<Vertex> vs = a.vertices();
    for (auto& v : vs)
        if (v.degree() > 1)
            std::rotate(v.order.begin(), v.order.begin() + 1, v.order.end());
    CHECK(BrauerTree(4, vs) == a);
    CHECK_FALSE(a.mirrored() == a);
    CHECK(a.mirrored().mirrored() == a);
}

TEST_CASE("walk steps follow the cyclic order")
{
    BrauerTree t = instantiate({PresetKind::star_central, 3, 2});
    auto [u, v] = t.endpoints(1);
    std::size_t centre = t.vertex(u).degree() == 3 ? u : v;
    CHECK(t.step(centre, 1, 1) == 2);
    CHECK(t.step(centre, 1, 3) == 1);
    CHECK(t.step(centre, 3, 1) == 1);
    CHECK(t.walk_length(centre) == 6);
}

TEST_CASE("tree file round trip")
{
    for (int m : {1, 3}) {
        BrauerTree t = instantiate({PresetKind::single_edge, 1, m});
        CHECK(parse_tree(serialize_tree(t)) == t);
    }
    BrauerTree r = instantiate({PresetKind::ree_qp1_principal, 6, 2});
    CHECK(parse_tree(serialize_tree(r)) == r);
}

TEST_CASE("multiplicity defaults to 1")
{
    auto t = parse_tree(R"({"edges": 2, "vertices": [
        {"id": 0, "order": [1]}, {"id": 1, "order": [1, 2]}, {"id": 2, "order": [2]}]})");
    CHECK_FALSE(t.exceptional().has_value());
}

TEST_CASE("parse errors")
{
    SUBCASE("two exceptional vertices")
    {
        try {
            parse_tree(R"({"edges": 1, "vertices": [{"id": 0, "order": [1], "multiplicity": 3},
                                                   {"id": 1, "order": [1], "multiplicity": 3}]})");
            FAIL("expected an error");
        } catch (const InvariantError& e) {
            CHECK(std::string(e.what()).find("more than one exceptional vertex") != std::string::npos);
        }
    }
    SUBCASE("syntax error carries a position")
    {
        try {
            parse_tree("{\"edges\": 1,\n \"vertices\": [}");
            FAIL("expected an error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() > 0);
        }
    }
    SUBCASE("wrong field type")
    {
        CHECK_THROWS_AS(parse_tree(R"({"edges": "two", "vertices": []})"), ParseError);
        CHECK_THROWS_AS(parse_tree(R"({"edges": 1})"), ParseError);
    }
    CHECK_THROWS(load_tree_file("/nonexistent/tree.json"));
}
