#include "brauer/tree.hpp"

#include "brauer/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace brauer {

namespace {

std::string join(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

std::string ValidationReport::to_string() const
{
    if (ok())
        return "ok";
    std::ostringstream os;
    for (const auto& v : violations)
        os << v.invariant << ": " << v.detail << '\n';
    return os.str();
}

BrauerTree::BrauerTree(int edge_count, std::vector<Vertex> vertices)
    : edge_count_(edge_count), vertices_(std::move(vertices))
{
}

std::optional<Exceptional> BrauerTree::exceptional() const
{
    for (const auto& v : vertices_)
        if (v.multiplicity > 1)
            return Exceptional{v.id, v.multiplicity};
    return std::nullopt;
}

std::pair<std::size_t, std::size_t> BrauerTree::endpoints(int edge) const
{
    std::size_t found[2] = {0, 0};
    int n = 0;
    for (std::size_t w = 0; w < vertices_.size() && n < 2; ++w)
        for (int f : vertices_[w].order)
            if (f == edge) {
                found[n++] = w;
                break;
            }
    if (n != 2)
        throw ParameterError("edge " + std::to_string(edge) + " does not have two endpoints");
    return {found[0], found[1]};
}

std::size_t BrauerTree::position(std::size_t w, int edge) const
{
    const auto& ord = vertices_.at(w).order;
    auto it = std::find(ord.begin(), ord.end(), edge);
    if (it == ord.end())
        throw ParameterError("edge " + std::to_string(edge) + " is not incident to vertex " +
                             std::to_string(vertices_[w].id));
    return static_cast<std::size_t>(it - ord.begin());
}

int BrauerTree::step(std::size_t w, int edge, long k) const
{
    const auto& ord = vertices_.at(w).order;
    const long n = static_cast<long>(ord.size());
    long pos = static_cast<long>(position(w, edge));
    return ord[static_cast<std::size_t>(((pos + k) % n + n) % n)];
}

BrauerTree BrauerTree::mirrored() const
{
    auto vs = vertices_;
    for (auto& v : vs)
        std::reverse(v.order.begin(), v.order.end());
    return BrauerTree(edge_count_, std::move(vs));
}

bool rotation_equal(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    for (std::size_t shift = 0; shift < b.size(); ++shift) {
        bool same = true;
        for (std::size_t i = 0; i < a.size() && same; ++i)
            same = a[i] == b[(i + shift) % b.size()];
        if (same)
            return true;
    }
    return false;
}

bool BrauerTree::operator==(const BrauerTree& other) const
{
    if (edge_count_ != other.edge_count_ || vertices_.size() != other.vertices_.size())
        return false;
    std::map<int, const Vertex*> mine, theirs;
    for (const auto& v : vertices_)
        mine[v.id] = &v;
    for (const auto& v : other.vertices_)
        theirs[v.id] = &v;
    if (mine.size() != theirs.size())
        return false;
    for (const auto& [id, v] : mine) {
        auto it = theirs.find(id);
        if (it == theirs.end())
            return false;
        if (v->multiplicity != it->second->multiplicity || !rotation_equal(v->order, it->second->order))
            return false;
    }
    return true;
}

std::string BrauerTree::describe() const
{
    std::ostringstream os;
    os << "e=" << edge_count_ << " {";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        os << (i ? "; " : "") << v.id << ":(" << join(v.order) << ")";
        if (v.multiplicity > 1)
            os << "^" << v.multiplicity;
    }
    os << "}";
    return os.str();
}

ValidationReport validate(const BrauerTree& tree)
{
    ValidationReport rep;
    auto fail = [&](std::string inv, std::string detail) { rep.violations.push_back({std::move(inv), std::move(detail)}); };

    const int e = tree.edge_count();
    if (e < 1) {
        fail("edge count positive", "edge count is " + std::to_string(e));
        return rep;
    }
    if (tree.vertex_count() != static_cast<std::size_t>(e) + 1)
        fail("vertex count = e + 1",
             std::to_string(tree.vertex_count()) + " vertices for " + std::to_string(e) + " edges");

    std::set<int> ids;
    std::vector<int> seen(static_cast<std::size_t>(e) + 1, 0);
    int exceptional = 0;
    for (const auto& v : tree.vertices()) {
        if (!ids.insert(v.id).second)
            fail("distinct vertex ids", "vertex id " + std::to_string(v.id) + " repeated");
        if (v.order.empty())
            fail("nonempty cyclic order", "vertex " + std::to_string(v.id) + " has no edges");
        if (v.multiplicity < 1)
            fail("multiplicity >= 1", "vertex " + std::to_string(v.id) + " has multiplicity " +
                                          std::to_string(v.multiplicity));
        if (v.multiplicity > 1)
            ++exceptional;
        std::set<int> local;
        for (int f : v.order) {
            if (f < 1 || f > e) {
                fail("edge labels in 1..e", "vertex " + std::to_string(v.id) + " lists edge " + std::to_string(f));
                continue;
            }
            if (!local.insert(f).second)
                fail("distinct labels in cyclic order",
                     "vertex " + std::to_string(v.id) + " lists edge " + std::to_string(f) + " twice");
            else
                ++seen[static_cast<std::size_t>(f)];
        }
    }
    if (exceptional > 1)
        fail("at most one exceptional vertex", "more than one exceptional vertex (" + std::to_string(exceptional) + ")");

    bool counts_ok = true;
    for (int f = 1; f <= e; ++f)
        if (seen[static_cast<std::size_t>(f)] != 2) {
            counts_ok = false;
            fail("edge appears at exactly two vertices",
                 "edge " + std::to_string(f) + " appears " + std::to_string(seen[static_cast<std::size_t>(f)]) +
                     " times (edge appears != 2 times)");
        }

    if (counts_ok && rep.ok()) {
        // Union-find over vertices joined by each edge.
        std::vector<std::size_t> parent(tree.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int f = 1; f <= e; ++f) {
            auto [a, b] = tree.endpoints(f);
            auto ra = find(a), rb = find(b);
            if (ra == rb)
                fail("incidence is a tree", "edge " + std::to_string(f) + " closes a cycle");
            parent[ra] = rb;
        }
        std::set<std::size_t> roots;
        for (std::size_t w = 0; w < tree.vertex_count(); ++w)
            roots.insert(find(w));
        if (roots.size() != 1)
            fail("incidence is a tree", "graph has " + std::to_string(roots.size()) + " components");
    }
    return rep;
}

void require_valid(const BrauerTree& tree)
{
    auto rep = validate(tree);
    if (!rep.ok())
        throw InvariantError("invalid Brauer tree:\n" + rep.to_string());
}

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte)
{
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

int get_int(const nlohmann::json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        throw ParseError(where + ": missing field \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer())
        throw ParseError(where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

BrauerTree parse_tree(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        auto [line, col] = line_column(text, err.byte == 0 ? 0 : err.byte - 1);
        throw ParseError("syntax error", line, col);
    }
    if (!doc.is_object())
        throw ParseError("tree file: top level must be an object");
    int e = get_int(doc, "edges", "tree file");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw ParseError("tree file: field \"vertices\" must be an array");

    std::vector<Vertex> vertices;
    std::size_t k = 0;
    for (const auto& jv : doc["vertices"]) {
        std::string where = "vertex #" + std::to_string(k++);
        if (!jv.is_object())
            throw ParseError(where + ": must be an object");
        Vertex v;
        v.id = get_int(jv, "id", where);
        if (!jv.contains("order") || !jv["order"].is_array())
            throw ParseError(where + ": field \"order\" must be an array");
        for (const auto& x : jv["order"]) {
            if (!x.is_number_integer())
                throw ParseError(where + ": edge labels must be integers");
            v.order.push_back(x.get<int>());
        }
        if (jv.contains("multiplicity"))
            v.multiplicity = get_int(jv, "multiplicity", where);
        vertices.push_back(std::move(v));
    }
    BrauerTree tree(e, std::move(vertices));
    require_valid(tree);
    return tree;
}

std::string serialize_tree(const BrauerTree& tree)
{
    nlohmann::ordered_json doc;
    doc["edges"] = tree.edge_count();
    doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : tree.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v.id;
        jv["order"] = v.order;
        if (v.multiplicity != 1)
            jv["multiplicity"] = v.multiplicity;
        doc["vertices"].push_back(std::move(jv));
    }
    return doc.dump(2) + "\n";
}

BrauerTree load_tree_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open tree file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_tree(buf.str());
}

}  // namespace brauer
