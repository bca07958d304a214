#include "brauer/errors.hpp"
#include "brauer/verify.hpp"
#include "random_tree.hpp"

#include <doctest.h>

#include <json.hpp>

#include <algorithm>

using namespace brauer;

TEST_CASE("sz_qmsp1 table matches the oracle")
{
    for (int m : {2, 3, 6}) {
        auto rep = verify_preset({PresetKind::sz_qmsp1, 4, m}, 31, 2);
        CAPTURE(rep.to_string());
        CHECK(rep.pass());
        CHECK(rep.to_string().find("verdict: pass") != std::string::npos);
    }
}

TEST_CASE("stated central-star rule is reported against the oracle")
{
    auto rep = verify_preset({PresetKind::star_central, 4, 2}, 15, 2, Variant::stated);
    REQUIRE_FALSE(rep.pass());
    for (const auto& x : rep.mismatches)
        CHECK(x.proposition == "star_exceptional_middle");
    CHECK(rep.to_string().find("verdict: FAIL") != std::string::npos);
    CHECK(verify_preset({PresetKind::star_central, 4, 2}, 15, 2).pass());
}

TEST_CASE("single edge")
{
    for (int m : {1, 2, 5}) {
        auto rep = verify_preset({PresetKind::single_edge, 1, m}, 20, 2);
        CHECK(rep.pass());
        auto form = closed_form_for({PresetKind::single_edge, 1, m});
        REQUIRE(form.has_value());
        CHECK(form->proposition == "lonely_module");
    }
}

TEST_CASE("closed forms exist for the named shapes")
{
    CHECK(closed_form_for({PresetKind::sz_qmsp1, 4, 2})->proposition == "suzuki_case2");
    CHECK(closed_form_for({PresetKind::ree_qp1_principal, 6, 2})->period == 12);
    CHECK(closed_form_for({PresetKind::line_outer, 3, 2})->proposition == "line_exceptional_outer");
    CHECK(closed_form_for({PresetKind::line_inner, 4, 2, 2})->proposition == "line_exceptional_inner");
    CHECK(closed_form_for({PresetKind::star_outer, 4, 2})->provenance == Provenance::walk_derived);
    CHECK(closed_form_for({PresetKind::star_outer, 4, 2}, Variant::stated)->provenance == Provenance::printed_formula);
}

TEST_CASE("recognise finds the preset behind a tree")
{
    TreePreset p{PresetKind::ree_qmsp1, 6, 3};
    auto r = recognise(instantiate(p));
    REQUIRE(r.has_value());
    CHECK(instantiate(*r) == instantiate(p));

    auto t = instantiate({PresetKind::line_inner, 5, 2, 3});
    auto r2 = recognise(t);
    REQUIRE(r2.has_value());
    CHECK(instantiate(*r2) == t);
}

TEST_CASE("verify_tree falls back to oracle self-checks")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        BrauerTree t = testing::random_tree(rng, 6, 3);
        auto rep = verify_tree(t, 4 * t.edge_count() - 1, 2);
        CAPTURE(t.describe());
        CAPTURE(rep.to_string());
        CHECK(rep.pass());
    }
}

TEST_CASE("csv and json rendering")
{
    ExtGrid g = oracle_grid(instantiate({PresetKind::line_plain, 2, 1}), 2, 3);
    std::string csv = render_csv(g);
    CHECK(csv.rfind("i,j,ell,dim\n1,1,0,1\n1,1,1,0\n1,1,2,0\n1,1,3,1\n1,2,0,0\n1,2,1,1\n1,2,2,1\n1,2,3,0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 2 * 4);

    auto doc = nlohmann::json::parse(render_json(oracle_grid(instantiate({PresetKind::single_edge, 1, 3}), 2, 5)));
    CHECK(doc["provenance"] == "oracle");
    CHECK(doc["dims"].size() == 6);
    for (const auto& row : doc["dims"])
        CHECK(row[3] == 1);

    auto form = closed_form_for({PresetKind::ree_qpsp1, 6, 2});
    REQUIRE(form.has_value());
    ExtGrid c = closed_grid(*form, 6, 11);
    CHECK(c.period == 12);
    CHECK(c.provenance == Provenance::printed_table);
    ExtGrid o = oracle_grid(instantiate({PresetKind::ree_qpsp1, 6, 2}), 2, 11);
    CHECK(render_csv(c) == render_csv(o));
}

TEST_CASE("Omega identities")
{
    for (const auto& t : check_traces(2)) {
        CAPTURE(describe(t.preset));
        CAPTURE(t.n);
        CHECK(t.result == IsoResult::yes);
    }
}
