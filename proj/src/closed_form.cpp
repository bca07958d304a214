#include "brauer/closed_form.hpp"

#include "brauer/errors.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <sstream>

namespace brauer {

namespace {

int mod(std::int64_t x, int n)
{
    std::int64_t r = x % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void check_indices(const FormulaParams& p, int i, int j, std::int64_t l)
{
    if (p.e < 1)
        throw ParameterError("edge count must be >= 1");
    if (i < 1 || i > p.e || j < 1 || j > p.e)
        throw ParameterError("simple index out of range 1.." + std::to_string(p.e));
    if (l < 0)
        throw ParameterError("degree must be >= 0");
}

bool in(int lo, int x, int hi) { return lo <= x && x <= hi; }

// The star formulas are written for the centre order (1, 2, ..., e). The
// descending centre is the same star relabelled.
int star_label(const FormulaParams& p, int k, bool fix_first)
{
    if (!p.descending)
        return k;
    if (fix_first)
        return k == 1 ? 1 : p.e + 2 - k;
    return p.e + 1 - k;
}

// Generic two windows of the inner proposition with the upper bound as printed.
bool inner_generic_stated(int n, int i, int j, int l)
{
    const int d = std::abs(i - j);
    if (l % 2 == d % 2 && in(d, l, std::min(i + j - 2, 2 * n - i - j)))
        return true;
    return l % 2 == (d + 1) % 2 && in(std::abs(n - i - j + 1) + n, l, 2 * n + d - 1);
}

bool plain_derived(int n, int i, int j, int l)
{
    const int d = std::abs(i - j);
    if (l % 2 == d % 2 && in(d, l, std::min(i + j - 2, 2 * n - i - j)))
        return true;
    return l % 2 == (d + 1) % 2 && in(std::abs(n - i - j + 1) + n, l, 2 * n - d - 1);
}

using Cell = const char*;

// Residue lists; "*" is every residue.
constexpr std::array<Cell, 4> kSuzuki1{"0,3", "1,2", "1,2", "0,3"};

constexpr std::array<Cell, 16> kSuzukiCase2{
    "0,7", "2,3", "1,6",     "4,5",
    "4,5", "0,7", "3,6",     "1,2",
    "1,6", "1,4", "0,2,5,7", "3,6",
    "2,3", "5,6", "1,4",     "0,7",
};

constexpr std::array<Cell, 16> kSuzukiCase3{
    "0,7", "1,2", "3,4", "5,6",
    "5,6", "0,7", "1,2", "3,4",
    "3,4", "5,6", "*",   "1,2",
    "1,2", "3,4", "5,6", "0,7",
};

constexpr std::array<Cell, 4> kForkyladAux{"*", "1,2", "1,2", "0,3"};

constexpr std::array<Cell, 36> kForkylad{
    "0,11", "3,8",              "9,10", "1,2",  "6,7",  "4,5",
    "3,8",  "0,2,4,5,6,7,9,11", "1,6",  "5,10", "3,10", "1,8",
    "1,2",  "5,10",             "0,11", "3,4",  "4,5",  "6,7",
    "9,10", "1,6",              "7,8",  "0,11", "4,5",  "2,3",
    "4,5",  "1,8",              "2,3",  "6,7",  "0,11", "9,10",
    "6,7",  "3,10",             "4,5",  "8,9",  "1,2",  "0,11",
};

constexpr std::array<Cell, 36> kReeStar{
    "*",    "9,10", "7,8",  "5,6",  "3,4",  "1,2",
    "1,2",  "0,11", "9,10", "7,8",  "5,6",  "3,4",
    "3,4",  "1,2",  "0,11", "9,10", "7,8",  "5,6",
    "5,6",  "3,4",  "1,2",  "0,11", "9,10", "7,8",
    "7,8",  "5,6",  "3,4",  "1,2",  "0,11", "9,10",
    "9,10", "7,8",  "5,6",  "3,4",  "1,2",  "0,11",
};

constexpr std::array<Cell, 36> kReeLongStar{
    "0,11", "1,10",       "2,3",  "4,5",  "6,7",  "8,9",
    "1,10", "0,2,9,11",   "1,4",  "3,6",  "5,8",  "7,10",
    "8,9",  "7,10",       "0,11", "1,2",  "3,4",  "5,6",
    "6,7",  "5,8",        "9,10", "0,11", "1,2",  "3,4",
    "4,5",  "3,6",        "7,8",  "9,10", "0,11", "1,2",
    "2,3",  "1,4",        "5,6",  "7,8",  "9,10", "0,11",
};

std::vector<int> parse_cell(Cell c, int period)
{
    std::vector<int> out;
    if (std::string(c) == "*") {
        for (int k = 0; k < period; ++k)
            out.push_back(k);
        return out;
    }
    std::istringstream is(c);
    std::string tok;
    while (std::getline(is, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

const Cell* cells(GroupTable t)
{
    switch (t) {
    case GroupTable::suzuki1:
    case GroupTable::ree_minus_one:
        return kSuzuki1.data();
    case GroupTable::suzuki_case2:
        return kSuzukiCase2.data();
    case GroupTable::suzuki_case3:
        return kSuzukiCase3.data();
    case GroupTable::forkylad:
        return kForkylad.data();
    case GroupTable::forkylad_aux:
        return kForkyladAux.data();
    case GroupTable::ree_star:
        return kReeStar.data();
    case GroupTable::ree_long_star:
        return kReeLongStar.data();
    }
    throw ParameterError("unknown group table");
}

constexpr std::array<std::pair<GroupTable, const char*>, 8> kTableNames{{
    {GroupTable::suzuki1, "suzuki1"},
    {GroupTable::suzuki_case2, "suzuki_case2"},
    {GroupTable::suzuki_case3, "suzuki_case3"},
    {GroupTable::ree_minus_one, "ree_minus_one"},
    {GroupTable::forkylad, "forkylad"},
    {GroupTable::forkylad_aux, "forkylad_aux"},
    {GroupTable::ree_star, "ree_star"},
    {GroupTable::ree_long_star, "ree_long_star"},
}};

}  // namespace

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::printed_table:
        return "printed_table";
    case Provenance::printed_formula:
        return "printed_formula";
    case Provenance::walk_derived:
        return "walk_derived";
    case Provenance::oracle:
        return "oracle";
    }
    return "unknown";
}

int ExtTable::at(int i, int j, std::int64_t l) const
{
    auto it = entries.find({i, j, mod(l, period)});
    if (it == entries.end())
        throw ParameterError("table has no entry for (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return it->second;
}

void ExtTable::set(int i, int j, int l, int dim) { entries[{i, j, mod(l, period)}] = dim; }

int ext_lonely(std::int64_t l)
{
    if (l < 0)
        throw ParameterError("degree must be >= 0");
    return 1;
}

int ext_star_central_stated(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    i = star_label(p, i, false);
    j = star_label(p, j, false);
    const int n2 = 2 * p.e;
    const int r = mod(l, n2);
    return r == mod(j - i, n2) || r == mod(j - i + 1, n2);
}

int ext_star_central_walk(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    i = star_label(p, i, false);
    j = star_label(p, j, false);
    const int n2 = 2 * p.e;
    const int d = mod(j - i, p.e);
    const int r = mod(l, n2);
    return r == mod(2 * d, n2) || r == mod(2 * d - 1, n2);
}

int ext_star_outer_stated(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    i = star_label(p, i, true);
    j = star_label(p, j, true);
    if (i == 1 && j == 1)
        return 1;
    const int n2 = 2 * p.e;
    const int r = mod(l, n2);
    return r == mod(j - i, n2) || r == mod(j - i - 1, n2);
}

int ext_star_outer(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    if (p.m <= 1)
        throw ParameterError("ext_star_outer needs m > 1; a star with m = 1 is the central case");
    i = star_label(p, i, true);
    j = star_label(p, j, true);
    if (i == 1 && j == 1)
        return 1;
    const int e = p.e;
    const int n2 = 2 * e;
    const int r = mod(l, n2);
    int hi = 0;  // the set is {hi - 1, hi}
    if (i != 1 && j != 1)
        hi = 2 * (j - i);
    else if (j == 1)
        hi = 2 * (e - i) + 2;
    else
        hi = 2 * j - 2;
    return r == mod(hi, n2) || r == mod(hi - 1, n2);
}

int ext_line_plain(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    const int n = p.e;
    const int r = mod(l, 2 * n);
    const int d = std::abs(i - j);
    if (r % 2 == d % 2 && in(d, r, 2 * n - i - j))
        return 1;
    return r % 2 == (d + 1) % 2 && in(i + j - 1, r, 2 * n - d - 1);
}

int ext_line_outer(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    if (j == 1)
        return in(i - 1, mod(l, 2 * p.e), 2 * p.e - i);
    return ext_line_plain(p, i, j, l);
}

int ext_line_inner(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    const int n = p.e;
    int a = p.a;
    if (a < 1 || a >= n)
        throw ParameterError("inner position a must satisfy 1 <= a < e");
    if (2 * a < n) {
        a = n - a;
        i = n + 1 - i;
        j = n + 1 - j;
    }
    const int r = mod(l, 2 * n);
    if (i != a || 2 * a == n)
        return inner_generic_stated(n, i, j, r);
    const int d = std::abs(a - j);
    if (r % 2 == d % 2 && in(d, r, std::min(a + j - 2, 2 * n - a - j)))
        return 1;
    if (r % 2 != (d + 1) % 2)
        return 0;
    if (a >= r)
        return in(2 * n - a - j + 1, r, 2 * n + d - 1);
    return in(std::abs(n - a - j + 1) + n, r, 2 * n + d - 1);
}

int ext_line_plain_derived(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    return plain_derived(p.e, i, j, mod(l, 2 * p.e));
}

int ext_line_inner_derived(const FormulaParams& p, int i, int j, std::int64_t l)
{
    check_indices(p, i, j, l);
    const int n = p.e;
    const int a = p.a;
    if (a < 1 || a >= n)
        throw ParameterError("inner position a must satisfy 1 <= a < e");
    int r = mod(l, 2 * n);
    if (r >= n)
        r = 2 * n - 1 - r;
    if (plain_derived(n, i, j, r))
        return 1;
    const int s = std::min(a, n - a);
    int di = 0;
    int dj = 0;
    if (a > n - a && i <= a && j <= a) {
        di = a - i;
        dj = a - j;
    } else if (a < n - a && i > a && j > a) {
        di = i - a - 1;
        dj = j - a - 1;
    } else {
        return 0;
    }
    return in(2 * s + 1 + di + dj, r, n - 1);
}

std::string to_string(GroupTable t)
{
    for (const auto& [k, name] : kTableNames)
        if (k == t)
            return name;
    return "unknown";
}

GroupTable group_table_from_name(const std::string& name)
{
    for (const auto& [k, n] : kTableNames)
        if (name == n)
            return k;
    throw ParameterError("unknown group table '" + name + "'");
}

std::vector<GroupTable> all_group_tables()
{
    std::vector<GroupTable> out;
    for (const auto& kv : kTableNames)
        out.push_back(kv.first);
    return out;
}

int group_table_period(GroupTable t)
{
    switch (t) {
    case GroupTable::suzuki1:
    case GroupTable::ree_minus_one:
    case GroupTable::forkylad_aux:
        return 4;
    case GroupTable::suzuki_case2:
    case GroupTable::suzuki_case3:
        return 8;
    default:
        return 12;
    }
}

int group_table_size(GroupTable t) { return group_table_period(t) / 2; }

std::vector<std::string> group_table_labels(GroupTable t)
{
    switch (t) {
    case GroupTable::suzuki1:
        return {"", "k", "V"};
    case GroupTable::suzuki_case2:
    case GroupTable::suzuki_case3:
        return {"", "k", "U", "V", "W"};
    case GroupTable::forkylad_aux:
        return {"", "T_2", "T_1"};
    default: {
        std::vector<std::string> out{""};
        for (int k = 1; k <= group_table_size(t); ++k)
            out.push_back("S_" + std::to_string(k));
        return out;
    }
    }
}

std::vector<int> group_table_cell(GroupTable t, int i, int j, int m)
{
    const int n = group_table_size(t);
    if (i < 1 || i > n || j < 1 || j > n)
        throw ParameterError("index out of range for table " + to_string(t));
    if (t == GroupTable::suzuki_case3 && m == 1 && i == 3 && j == 3)
        return {3, 4};
    return parse_cell(cells(t)[(i - 1) * n + (j - 1)], group_table_period(t));
}

int ext_group_table(GroupTable t, int i, int j, std::int64_t l, int m)
{
    if (l < 0)
        throw ParameterError("degree must be >= 0");
    const auto set = group_table_cell(t, i, j, m);
    return std::find(set.begin(), set.end(), mod(l, group_table_period(t))) != set.end();
}

ExtTable group_ext_table(GroupTable t, int m)
{
    ExtTable out;
    out.period = group_table_period(t);
    out.simple_count = group_table_size(t);
    out.provenance = Provenance::printed_table;
    for (int i = 1; i <= out.simple_count; ++i)
        for (int j = 1; j <= out.simple_count; ++j)
            for (int l = 0; l < out.period; ++l)
                out.set(i, j, l, ext_group_table(t, i, j, l, m));
    return out;
}

}  // namespace brauer
