#pragma once

#include <string>
#include <vector>

#include "gcx/weyl.hpp"

namespace gcx {

// Grid cell of the Gelfand-Cetlin triangle. Column c holds lambda^(c)_c at
// row 1 up to lambda^(n)_c at row n-c+1, so lambda^(i)_j sits at (j, i-j+1).
struct Cell {
    int col = 0;
    int row = 0;
    int i() const { return row + col - 1; }
    int j() const { return col; }
    bool operator==(const Cell&) const = default;
};

enum class EdgeKind { H, V };

// H(i,j): between lambda^(i)_j and the box lambda^(i-1)_j below it.
// V(i,j): between the box lambda^(i)_j and lambda^(i+1)_{j+1} to its right.
struct Edge {
    EdgeKind kind = EdgeKind::H;
    int i = 0;
    int j = 0;
    int hi = -1;  // cell index of the larger side (above or left)
    int lo = -1;  // cell index of the smaller side
    bool roof = false;
    bool effective = false;
    std::string str() const;
};

struct PositivePath {
    std::vector<int> I;  // horizontal-step positions, strictly increasing

    int level() const { return static_cast<int>(I.size()); }
    std::string str() const;  // "1,3"
    static PositivePath parse(const std::string& text);

    auto operator<=>(const PositivePath&) const = default;
};

// pi_I <= pi_J iff |I| >= |J| and i_r <= j_r for r <= |J|
bool path_leq(const PositivePath& p, const PositivePath& q);
bool incomparable(const PositivePath& p, const PositivePath& q);
PositivePath meet(const PositivePath& p, const PositivePath& q);
PositivePath join(const PositivePath& p, const PositivePath& q);
PositivePath translate_path(const Permutation& u, const PositivePath& p);

// Grassmannian partition (i_m - m, ..., i_1 - 1) and back.
Partition partition_of_path(const PositivePath& p);
PositivePath path_of_partition(const Partition& mu);
Partition complement(const Partition& mu, int n);

// Triangular array lambda^(i)_j, 1 <= j <= i <= n.
class GCPattern {
public:
    GCPattern() = default;
    explicit GCPattern(int n) : n_(n), v_(static_cast<std::size_t>(n * (n + 1) / 2), 0) {}

    int n() const { return n_; }
    int& at(int i, int j) { return v_[idx(i, j)]; }
    int at(int i, int j) const { return v_[idx(i, j)]; }
    std::vector<int> top() const;
    bool interlaces() const;
    const std::vector<int>& raw() const { return v_; }

    GCPattern& operator+=(const GCPattern& o);
    GCPattern& operator-=(const GCPattern& o);
    auto operator<=>(const GCPattern&) const = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * (i - 1) / 2 + j - 1); }
    int n_ = 0;
    std::vector<int> v_;
};

// b-pattern stored in the same triangular layout: b_{ij} at at(i,j).
using BPattern = GCPattern;

BPattern exponent_vector(const PositivePath& p, int n);
GCPattern phi(const BPattern& b);
BPattern psi(const GCPattern& g);

class LadderDiagram {
public:
    explicit LadderDiagram(ParabolicShape shape);

    const ParabolicShape& shape() const { return shape_; }
    int n() const { return shape_.n(); }

    int num_cells() const { return static_cast<int>(cells_.size()); }
    const Cell& cell(int id) const { return cells_[static_cast<std::size_t>(id)]; }
    int cell_id(int col, int row) const;
    int cell_id_ij(int i, int j) const { return cell_id(j, i - j + 1); }
    bool is_box(int id) const { return box_[static_cast<std::size_t>(id)]; }
    // block whose constant a cell carries when it is not a box
    int block_of_cell(int id) const;
    const std::vector<int>& boxes() const { return boxes_; }
    int num_boxes() const { return static_cast<int>(boxes_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& effective_edges() const { return effective_; }
    // -1 when the edge is not part of the diagram
    int edge_id(EdgeKind kind, int i, int j) const;
    // position of an edge within effective_edges(), or -1
    int facet_index(int edge) const { return facet_of_edge_[static_cast<std::size_t>(edge)]; }
    int num_facets() const { return static_cast<int>(effective_.size()); }

    // every (up, down) and (left, right) pair of cells, as (hi, lo)
    const std::vector<std::pair<int, int>>& adjacencies() const { return adj_; }

    // levels n_1..n_k
    const std::vector<int>& levels() const { return shape_.levels(); }
    std::vector<PositivePath> paths_at_level(int level) const;
    std::vector<PositivePath> all_paths() const;

    // Diagram edges traversed by the path; boundary steps are skipped.
    std::vector<int> path_edges(const PositivePath& p) const;
    std::vector<int> path_effective_edges(const PositivePath& p) const;
    // edges meeting at a corner of the path, as pairs
    std::vector<std::pair<int, int>> path_corners(const PositivePath& p) const;

    std::vector<int> roof_edges() const;
    PositivePath special_path(int roofEdge) const;
    std::vector<PositivePath> special_paths() const;

    // Multiset of paths summing (with b_n copies of the bottom path) to psi(point).
    std::vector<PositivePath> decompose_weight(const GCPattern& point) const;
    // All integral patterns with top row lambda.
    std::vector<GCPattern> lattice_points(const std::vector<int>& lambda) const;
    // Distinct sums of exponent vectors with b_j paths at each level j.
    std::vector<BPattern> weight_set(const std::vector<int>& lambda) const;

    std::string ascii() const;

private:
    ParabolicShape shape_;
    std::vector<Cell> cells_;
    std::vector<int> cell_index_;  // (col,row) -> id
    std::vector<char> box_;
    std::vector<int> boxes_;
    std::vector<Edge> edges_;
    std::vector<int> effective_;
    std::vector<int> facet_of_edge_;
    std::vector<int> edge_lookup_;  // (kind,i,j) -> id
    std::vector<std::pair<int, int>> adj_;
};

}  // namespace gcx
