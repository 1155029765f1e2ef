#pragma once

#include <map>
#include <vector>

#include "gcx/gc_polytope.hpp"

namespace gcx {

// level -> index sets whose Pluecker coordinate vanishes
using VanishingSet = std::map<int, std::vector<PositivePath>>;

// path of the divisor u X^{s_level}
PositivePath w_divisor(const Permutation& u, int level);

// opposite = true gives X^v (p_I = 0 iff pi_I is not >= the reference path),
// opposite = false gives X_v (p_I = 0 iff pi_I is not <= the reference path).
VanishingSet vanishing_schubert(const ParabolicShape& shape, const Permutation& v, bool opposite = true);
VanishingSet vanishing_translated(const ParabolicShape& shape, const Permutation& u, const Permutation& v);
VanishingSet translate(const Permutation& u, const VanishingSet& s);

// paths through an effective edge
VanishingSet toric_divisor_equations(const LadderDiagram& d, int edge);
// Grassmannian index sets cut out F_mu (dual: F_mu^vee)
VanishingSet toric_subvariety_equations(const ParabolicShape& shape, const Partition& mu, bool dual);

std::vector<PositivePath> flatten(const VanishingSet& s);

// Intersection over the paths of the union of the facets on each path.
FaceUnion delta_of_paths(const Polytope& P, std::vector<PositivePath> paths);
FaceUnion delta_uv(const Polytope& P, const Permutation& u, const Permutation& v);

}  // namespace gcx
