#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcx/bits.hpp"
#include "gcx/ladder.hpp"

namespace gcx {

// Raised when V^X is requested for a shape the criterion does not cover.
struct UnsupportedShape : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A face is stored as the set of polytope vertices it contains.
using Face = Bits;

struct Vertex {
    std::vector<int8_t> block;  // per cell: index l of the top-row value a_l
    Bits facets;                // tight effective edges, indexed like effective_edges()
};

class Polytope {
public:
    // lambda: one value per block, strictly decreasing; empty means a_l = k+1-l
    explicit Polytope(const ParabolicShape& shape, std::vector<int> lambda = {});

    const LadderDiagram& diagram() const { return d_; }
    const ParabolicShape& shape() const { return d_.shape(); }
    int n() const { return d_.n(); }
    int dim() const { return d_.num_boxes(); }
    int num_facets() const { return d_.num_facets(); }
    int block_value(int l) const { return lambda_[static_cast<std::size_t>(l - 1)]; }
    // full top row, length n
    std::vector<int> top_row() const;

    const std::vector<Vertex>& vertices() const { return verts_; }
    int num_vertices() const { return static_cast<int>(verts_.size()); }
    int value(int vertex, int cell) const;
    GCPattern pattern(int vertex) const;

    Face whole() const;
    Face empty() const { return Face(verts_.size()); }
    Face facet(int f) const { return facet_verts_[static_cast<std::size_t>(f)]; }
    Face facet_of_edge(int edge) const;
    Face vertex_face(int vertex) const;
    // vertices satisfying every listed facet equation
    Face face_of_facets(const std::vector<int>& facets) const;

    // tight effective edges common to the whole face (its equality system)
    Bits closure(const Face& f) const;
    // DAG saturation on the equality system; -1 when empty
    int face_dimension(const Face& f) const;
    // affine rank of the vertex set, exact arithmetic
    int face_dimension_oracle(const Face& f) const;

    bool is_regular(int vertex) const;
    // Grassmannian: always; complete flag: square criterion; otherwise throws
    bool in_VX(int vertex) const;
    // true when the per-level coordinate index sets are nested
    bool coordinates_nested(int vertex) const;
    // per level n_1..n_k, the unique nonvanishing Pluecker index
    std::vector<PositivePath> coordinate_point(int vertex) const;

    // Grassmannian faces: boxes below (above) the partition path set to b (a)
    Face named_face_F(const Partition& mu) const;
    Face named_face_Fvee(const Partition& mu) const;
    // Gr(2,n): lambda^(k)_1 = lambda^(k+1)_1, lambda^(k)_2 = lambda^(k+1)_2
    Face delta_k_face(int k) const;

    std::string face_str(const Face& f) const;  // sorted edge identifiers of the closure
    std::string vertex_tsv(int vertex) const;

private:
    void enumerate_vertices();

    LadderDiagram d_;
    std::vector<int> lambda_;
    std::vector<Vertex> verts_;
    std::vector<Bits> facet_verts_;
};

// Antichain of maximal faces.
class FaceUnion {
public:
    FaceUnion() = default;
    explicit FaceUnion(std::vector<Face> faces);
    static FaceUnion single(Face f);

    const std::vector<Face>& faces() const { return faces_; }
    bool empty() const { return faces_.empty(); }
    std::size_t size() const { return faces_.size(); }
    // union of all member vertex sets
    Bits points(std::size_t nverts) const;

    bool operator==(const FaceUnion&) const = default;

private:
    void reduce();
    std::vector<Face> faces_;
};

FaceUnion intersect(const FaceUnion& a, const FaceUnion& b);
// a intersected with the union of the listed facets
FaceUnion intersect_facet_union(const Polytope& P, const FaceUnion& a, const std::vector<int>& facets);

}  // namespace gcx
