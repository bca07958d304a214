#include "brauer/closed_form.hpp"
#include "brauer/errors.hpp"
#include "brauer/oracle.hpp"
#include "brauer/presets.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace brauer;

namespace {

using Fn = int (*)(const FormulaParams&, int, int, std::int64_t);

std::set<int> residues(Fn f, const FormulaParams& p, int i, int j)
{
    std::set<int> out;
    for (int l = 0; l < 2 * p.e; ++l)
        if (f(p, i, j, l))
            out.insert(l);
    return out;
}

std::set<int> table_residues(GroupTable t, int i, int j, int m = 2)
{
    std::set<int> out;
    for (int l = 0; l < group_table_period(t); ++l)
        if (ext_group_table(t, i, j, l, m))
            out.insert(l);
    return out;
}

int table_index(GroupTable t, const std::string& label)
{
    auto labels = group_table_labels(t);
    return static_cast<int>(std::find(labels.begin(), labels.end(), label) - labels.begin());
}

}  // namespace

TEST_CASE("lonely module")
{
    CHECK(ext_lonely(0) == 1);
    CHECK(ext_lonely(1) == 1);
    CHECK(ext_lonely(1000000) == 1);
}

TEST_CASE("central star")
{
    FormulaParams two{2, 3};
    CHECK(residues(ext_star_central_stated, two, 1, 2) == std::set<int>{1, 2});
    CHECK(residues(ext_star_central_walk, two, 1, 2) == std::set<int>{1, 2});

    for (int e = 1; e <= 6; ++e)
        for (int i = 1; i <= e; ++i) {
            CHECK(ext_star_central_stated({e, 2}, i, i, 0) == 1);
            CHECK(ext_star_central_walk({e, 2}, i, i, 0) == 1);
        }

    FormulaParams four{4, 2};
    CHECK(ext_star_central_walk(four, 1, 3, 4) == 1);
    CHECK(ext_star_central_stated(four, 1, 3, 4) == 0);

    // Reduction modulo 2e.
    CHECK(ext_star_central_walk(four, 1, 3, 4 + 8 * 1000) == 1);
    CHECK_THROWS_AS(ext_star_central_walk(four, 0, 1, 0), ParameterError);
    CHECK_THROWS_AS(ext_star_central_walk(four, 1, 5, 0), ParameterError);
}

TEST_CASE("outer star against the long-period table")
{
    FormulaParams p{6, 2};
    CHECK(residues(ext_star_outer, p, 1, 1).size() == 12);
    // The printed table reads the centre in descending order.
    FormulaParams desc{6, 2, 0, true};
    CHECK(residues(ext_star_outer, desc, 2, 1) == std::set<int>{1, 2});
    CHECK(residues(ext_star_outer, desc, 4, 1) == std::set<int>{5, 6});
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            CHECK(residues(ext_star_outer, desc, i, j) == table_residues(GroupTable::ree_star, i, j));
    CHECK_THROWS_AS(ext_star_outer({6, 1}, 1, 1, 0), ParameterError);
}

TEST_CASE("plain line")
{
    // The corrected rule; this is what the oracle computes on the 2-edge line.
    CHECK(residues(ext_line_plain_derived, {2, 1}, 1, 1) == std::set<int>{0, 3});
    CHECK(residues(ext_line_plain_derived, {2, 1}, 1, 2) == std::set<int>{1, 2});
    CHECK(ext_line_plain_derived({3, 1}, 1, 3, 2) == 1);
    // The rule as printed admits all four residues on the diagonal.
    CHECK(residues(ext_line_plain, {2, 1}, 1, 1) == std::set<int>{0, 1, 2, 3});
    CHECK(ext_line_plain({3, 1}, 1, 3, 2) == 1);
    for (int e = 1; e <= 6; ++e)
        for (int i = 1; i <= e; ++i) {
            CHECK(ext_line_plain({e, 1}, i, i, 0) == 1);
            CHECK(ext_line_plain_derived({e, 1}, i, i, 0) == 1);
        }
}

TEST_CASE("plain line rule is symmetric under l -> 2e - 1 - l")
{
    for (int e = 1; e <= 7; ++e)
        for (int i = 1; i <= e; ++i)
            for (int j = 1; j <= e; ++j)
                for (int l = 0; l < 2 * e; ++l)
                    CHECK(ext_line_plain_derived({e, 1}, i, j, l) == ext_line_plain_derived({e, 1}, i, j, 2 * e - 1 - l));
}

TEST_CASE("outer line")
{
    FormulaParams p{2, 3};
    CHECK(residues(ext_line_outer, p, 2, 2) == std::set<int>{0, 3});
    CHECK(residues(ext_line_outer, p, 2, 1) == std::set<int>{1, 2});
    for (int e = 1; e <= 5; ++e)
        CHECK(residues(ext_line_outer, {e, 2}, 1, 1).size() == static_cast<std::size_t>(2 * e));
}

TEST_CASE("inner line")
{
    FormulaParams central{2, 2, 1};
    CHECK(residues(ext_line_inner, central, 1, 2) == std::set<int>{1, 2});
    CHECK(residues(ext_line_inner_derived, central, 1, 2) == std::set<int>{1, 2});

    FormulaParams p{4, 2, 2};
    CHECK(ext_line_inner(p, 1, 1, 2) == 0);
    CHECK(ext_line_inner_derived(p, 1, 1, 2) == 0);
    for (int i = 1; i <= 4; ++i) {
        CHECK(ext_line_inner(p, i, i, 0) == 1);
        CHECK(ext_line_inner_derived(p, i, i, 0) == 1);
    }
    CHECK_THROWS_AS(ext_line_inner({4, 2, 0}, 1, 1, 0), ParameterError);
    CHECK_THROWS_AS(ext_line_inner({4, 2, 4}, 1, 1, 0), ParameterError);
}

TEST_CASE("derived line rules match the oracle")
{
    for (int e = 2; e <= 5; ++e) {
        CAPTURE(e);
        auto plain = instantiate({PresetKind::line_plain, e, 1});
        for (int i = 1; i <= e; ++i) {
            auto rows = ext_dims_oracle(plain, 2, i, 2 * e - 1);
            for (int l = 0; l < 2 * e; ++l)
                for (int j = 1; j <= e; ++j)
                    CHECK(rows[l][j - 1] == ext_line_plain_derived({e, 1}, i, j, l));
        }
        for (int a = 2; a < e; ++a) {
            CAPTURE(a);
            TreePreset tp{PresetKind::line_inner, e, 2, a};
            auto t = instantiate(tp);
            for (int i = 1; i <= e; ++i) {
                auto rows = ext_dims_oracle(t, 2, i, 2 * e - 1);
                for (int l = 0; l < 2 * e; ++l)
                    for (int j = 1; j <= e; ++j)
                        CHECK(rows[l][j - 1] == ext_line_inner_derived({e, 2, a}, i, j, l));
            }
        }
    }
}

TEST_CASE("group tables as printed")
{
    auto V = table_index(GroupTable::suzuki_case2, "V");
    CHECK(ext_group_table(GroupTable::suzuki_case2, V, V, 5) == 1);
    CHECK(table_residues(GroupTable::suzuki_case2, V, V) == std::set<int>{0, 2, 5, 7});
    CHECK(ext_group_table(GroupTable::forkylad, 2, 2, 1) == 0);
    CHECK(table_residues(GroupTable::forkylad, 2, 2) == std::set<int>{0, 2, 4, 5, 6, 7, 9, 11});
    CHECK(table_residues(GroupTable::forkylad, 1, 2) == std::set<int>{3, 8});
    CHECK(ext_group_table(GroupTable::ree_long_star, 1, 2, 10) == 1);
    CHECK(table_residues(GroupTable::ree_star, 1, 1).size() == 12);

    auto k = table_index(GroupTable::suzuki_case2, "k");
    auto U = table_index(GroupTable::suzuki_case2, "U");
    CHECK(table_residues(GroupTable::suzuki_case2, k, U) == std::set<int>{2, 3});

    CHECK(table_residues(GroupTable::suzuki1, 1, 1) == std::set<int>{0, 3});
    CHECK(table_residues(GroupTable::suzuki1, 1, 2) == std::set<int>{1, 2});
    CHECK(table_residues(GroupTable::ree_minus_one, 2, 1) == std::set<int>{1, 2});

    auto V3 = table_index(GroupTable::suzuki_case3, "V");
    CHECK(table_residues(GroupTable::suzuki_case3, V3, V3, 1) == std::set<int>{3, 4});

    for (auto t : all_group_tables()) {
        CAPTURE(to_string(t));
        CHECK(group_table_from_name(to_string(t)) == t);
        CHECK(group_table_period(t) == 2 * group_table_size(t));
        ExtTable tab = group_ext_table(t);
        CHECK(tab.provenance == Provenance::printed_table);
        for (int i = 1; i <= group_table_size(t); ++i) {
            CHECK(ext_group_table(t, i, i, 0) == 1);
            for (int j = 1; j <= group_table_size(t); ++j)
                for (int l = 0; l < tab.period; ++l) {
                    CHECK(tab.at(i, j, l) == ext_group_table(t, i, j, l));
                    CHECK(tab.at(i, j, l + 7 * tab.period) == tab.at(i, j, l));
                }
        }
    }
    CHECK_THROWS_AS(group_table_from_name("psl2"), ParameterError);
    CHECK_THROWS_AS(ext_group_table(GroupTable::suzuki1, 3, 1, 0), ParameterError);
}
