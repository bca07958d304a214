#pragma once

// Brauer trees: edges are the simple modules 1..e of a block, every vertex
// carries a cyclic order of its incident edges (the planar embedding) and at
// most one vertex carries a multiplicity m > 1.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

struct Vertex {
    int id = 0;
    /// Incident edge labels in cyclic order. Rotations are equal, reflections are not.
    std::vector<int> order;
    int multiplicity = 1;

    int degree() const { return static_cast<int>(order.size()); }
};

struct Exceptional {
    int vertex_id;
    int multiplicity;
};

struct Violation {
    std::string invariant;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

class BrauerTree {
public:
    BrauerTree() = default;
    BrauerTree(int edge_count, std::vector<Vertex> vertices);

    int edge_count() const { return edge_count_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t index) const { return vertices_.at(index); }
    std::size_t vertex_count() const { return vertices_.size(); }

    std::optional<Exceptional> exceptional() const;

    /// Indices (into vertices()) of the two vertices carrying edge i.
    /// Only meaningful on a valid tree.
    std::pair<std::size_t, std::size_t> endpoints(int edge) const;

    /// Position of edge i in the cyclic order of vertex index w.
    std::size_t position(std::size_t w, int edge) const;

    /// The edge k steps after `edge` in the cyclic order at vertex index w.
    int step(std::size_t w, int edge, long k) const;

    /// e_w * m_w: the length of one full walk around vertex w.
    int walk_length(std::size_t w) const { return vertices_[w].degree() * vertices_[w].multiplicity; }

    /// Same tree with every cyclic order reversed.
    BrauerTree mirrored() const;

    /// Equality up to rotation of each cyclic order; vertices are matched by id.
    bool operator==(const BrauerTree& other) const;

    std::string describe() const;

private:
    int edge_count_ = 0;
    std::vector<Vertex> vertices_;
};

ValidationReport validate(const BrauerTree& tree);

/// Throws InvariantError carrying the report text when validate() fails.
void require_valid(const BrauerTree& tree);

bool rotation_equal(const std::vector<int>& a, const std::vector<int>& b);

/// JSON tree file format: {"edges": e, "vertices": [{"id", "order", "multiplicity"?}]}.
BrauerTree parse_tree(const std::string& text);
std::string serialize_tree(const BrauerTree& tree);

BrauerTree load_tree_file(const std::string& path);

}  // namespace brauer
