#pragma once

#include <array>
#include <span>
#include <vector>

#include "polysurg/comb_map.hpp"

namespace polysurg {

struct Point2 {
    double x = 0;
    double y = 0;
};

/// Builds a map from an undirected cubic graph and a drawing whose local edge
/// directions are planar. Rotations are read off by sorting edge angles.
/// `at_infinity`, when set, names a vertex placed beyond every other vertex:
/// its edges leave radially outwards and its own rotation is reversed.
CombMap from_drawing(std::span<const std::array<VertexId, 3>> adjacency,
                     std::span<const Point2> position, VertexId at_infinity = -1);

/// The simplex.
CombMap tetrahedron();
/// Prism over an n-gon (n = 4 gives the cube).
CombMap prism(int n);
CombMap cube();

/// Capped tube with n-fold symmetry: two n-gon caps, a ring of n pentagons at
/// each cap and `rings` zig-zag rings of n hexagons between them.
/// n = 5 gives Family I (the dodecahedron for rings = 0); n = 6, rings = 0 is
/// the barrel.
CombMap capped_tube(int n, int rings);

/// Three-fold capped tube: two six-pentagon caps joined by `layers` layers of
/// three hexagons.
CombMap three_fold_tube(int layers);

/// Goldberg-Coxeter construction GC(m, n): every vertex of the map is
/// replaced by a triangle of the Eisenstein lattice spanned by m + n*w. Face
/// sizes are kept, all new faces are hexagons, and the vertex count grows by
/// the factor m^2 + mn + n^2. GC(1,1) is the leapfrog, GC(2,0) the chamfer.
CombMap goldberg_coxeter(const CombMap& map, int m, int n);

}  // namespace polysurg
