#pragma once

#include <string>
#include <vector>

#include "gcx/gc_polytope.hpp"

namespace gcx {

struct KoganFace {
    bool dual = false;
    std::vector<int> edges;  // diagram edge ids, in reading order
    Word word;
    Permutation perm;
    bool reduced = true;
};

// Horizontal (dual: vertical) edges of the complete-flag diagram in reading
// order: Kogan by column then row, dual by row then column.
std::vector<int> kogan_reading(const LadderDiagram& d, bool dual);
// s-index attached to an edge: H(i,j) -> n-i+j, V(i,j) -> j
int edge_label(const LadderDiagram& d, int edge);

KoganFace read_word(const LadderDiagram& d, std::vector<int> edges, bool dual);
// 1-based positions inside the full reading word
KoganFace face_from_positions(const LadderDiagram& d, const std::vector<int>& positions, bool dual);
std::vector<int> positions_of(const LadderDiagram& d, const KoganFace& f);

std::vector<KoganFace> enumerate_reduced(const LadderDiagram& d, const Permutation& target, bool dual);

// X^v (opposite = true) or X_v (opposite = false) degenerated to its Kogan faces.
FaceUnion degeneration_union(const Polytope& P, const Permutation& v, bool opposite);

}  // namespace gcx
