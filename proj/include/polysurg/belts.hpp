#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polysurg/comb_map.hpp"

namespace polysurg {

class BeltError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Closed walk along edges; darts[i] ends where darts[i+1] starts.
struct EdgeCycle {
    std::vector<DartId> darts;
};

/// A cyclic face sequence together with the number of cycle edges each entry
/// touches. For a bordering loop entry r covers a^r consecutive cycle edges.
struct FaceLoop {
    std::vector<FaceId> faces;
    std::vector<int> contact;

    int length() const { return static_cast<int>(faces.size()); }
    bool simple() const;
};

struct RegionSplit {
    EdgeCycle cycle;
    /// Faces on the left of the cycle darts, and on the right.
    std::vector<FaceId> side[2];
    FaceLoop loop[2];
    bool side_is_disk[2] = {false, false};
};

/// Splits the sphere along a simple edge cycle. Throws BeltError when the walk
/// is not closed or repeats a vertex.
RegionSplit split_by_cycle(const CombMap& map, const EdgeCycle& cycle);

/// Boundary cycle of a set of faces whose union is a disk, oriented so the set
/// lies on the left. Throws BeltError if the boundary is not one simple cycle.
EdgeCycle boundary_cycle(const CombMap& map, const std::vector<FaceId>& faces);

/// Faces pairwise adjacency as a dense matrix.
class DualGraph {
public:
    explicit DualGraph(const CombMap& map);
    bool adjacent(FaceId a, FaceId b) const { return adj_[a * n_ + b] != 0; }
    const std::vector<FaceId>& neighbors(FaceId f) const { return nbr_[f]; }
    int size() const { return n_; }

private:
    int n_;
    std::vector<char> adj_;
    std::vector<std::vector<FaceId>> nbr_;
};

struct Belt {
    std::vector<FaceId> faces;
    int k() const { return static_cast<int>(faces.size()); }
};

/// True when the cyclic sequence is a k-belt: consecutive faces adjacent, and
/// for k = 3 no common vertex, for k >= 4 no other pair adjacent.
bool is_belt(const CombMap& map, const std::vector<FaceId>& faces);

/// All k-belts, each reported once up to rotation and reversal, starting at
/// its smallest face with the second entry smaller than the last.
std::vector<Belt> find_k_belts(const CombMap& map, int k);

/// All simple k-loops (dual cycles), same normalisation as find_k_belts.
std::vector<std::vector<FaceId>> find_k_loops(const CombMap& map, int k);

enum class BeltCase {
    /// Both complementary regions are single facets.
    SurroundsTwoFacets,
    /// One complementary region is a single facet.
    SurroundsFacet,
    /// Both regions contain at least two facets.
    BordersLoops,
};

const char* to_string(BeltCase c);

struct BeltAnalysis {
    Belt belt;
    /// b[i] counts i-gons in the belt, 0 <= i < 9.
    std::vector<int> b;
    /// Edges of belt face j on each side; alpha[j] + beta[j] = s_j - 2.
    std::vector<int> alpha, beta;
    EdgeCycle gamma[2];
    std::vector<FaceId> region[2];
    FaceLoop loop[2];
    BeltCase kind = BeltCase::BordersLoops;
    /// l1 + l2 = 2k - 2 b4 - b5 + b7, required when the belt has no triangle
    /// and no face above a heptagon.
    bool loop_sum_ok = false;
    /// The bordering loop lengths agree with sum(alpha - 1) and sum(beta - 1).
    bool contact_ok = false;
};

BeltAnalysis border_loops(const CombMap& map, const Belt& belt);

enum class FiveBeltKind { SurroundsPentagon, HexagonRing, Other };

struct FiveBeltReport {
    int count = 0;
    int surrounds_pentagon = 0;
    int hexagon_rings = 0;
    std::vector<Belt> belts;
    std::vector<FiveBeltKind> kinds;
};

/// Throws BeltError when the map is not a fullerene.
FiveBeltReport classify_five_belts(const CombMap& map);

/// A 3-loop that is not a belt, with the outcome of the three-loop check.
struct ThreeLoopCheck {
    std::vector<FaceId> faces;
    bool common_vertex = false;
    int bordering_length = 0;
    int expected_length = 0;
};

/// Runs the three-loop check on every non-belt 3-loop.
std::vector<ThreeLoopCheck> check_three_loops(const CombMap& map);

}  // namespace polysurg
