#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurg/comb_map.hpp"

namespace polysurg {

class PatternError : public std::runtime_error {
public:
    PatternError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Neighbour entry meaning "a facet outside the patch".
inline constexpr int kOutside = -1;

struct PatternFace {
    std::string name;
    /// Required number of edges; 0 accepts any size.
    int size = 0;
    /// Counterclockwise neighbour list: pattern face indices or kOutside.
    /// A sized face lists all `size` neighbours. A wildcard face lists a
    /// contiguous arc of its neighbours.
    std::vector<int> neighbors;
};

/// Disk-shaped fragment given at the level of facets.
struct PatchPattern {
    std::string id;
    std::vector<PatternFace> faces;

    int index_of(const std::string& name) const;
    int hexagons() const;
    /// Throws PatternError when the face lists are not mutually consistent.
    void validate() const;
};

/// Lengths of the runs of outside edges met when walking the patch boundary
/// counterclockwise. Requires every boundary face to be sized.
std::vector<int> boundary_contacts(const PatchPattern& pattern);

/// True when two cyclic sequences agree up to rotation and reversal.
bool same_cyclic_sequence(const std::vector<int>& a, const std::vector<int>& b);

/// The pattern spanned by `faces` of `map`, named by the given names.
/// The first listed neighbour of each face is across its face_dart.
PatchPattern extract_pattern(const CombMap& map, const std::vector<FaceId>& faces,
                             const std::vector<std::string>& names, const std::string& id = "");

struct MatchResult {
    /// Map face of every pattern face.
    std::vector<FaceId> faces;
    /// Dart of the map matched to neighbour position 0 of pattern face 0.
    DartId anchor = kNoDart;
    /// The pattern's counterclockwise order runs clockwise on the map.
    bool mirrored = false;
};

struct MatchOptions {
    /// Report one match per facet set, that is, modulo pattern automorphisms.
    bool distinct_face_sets = true;
};

/// Every embedding of the pattern in the map, both orientations.
std::vector<MatchResult> match_pattern(const CombMap& map, const PatchPattern& pattern,
                                       const MatchOptions& opt = {});

/// Re-checks one assignment of pattern faces; used to validate results of
/// surgery against the expected pattern.
bool is_match(const CombMap& map, const PatchPattern& pattern, const std::vector<FaceId>& faces,
              bool mirrored);

/// Next dart along the face on the left of `d`, in the pattern's orientation.
DartId oriented_step(const CombMap& map, DartId d, bool mirrored);

/// Text form of a pattern, one face per line.
void write_pattern_faces(std::ostream& out, const PatchPattern& pattern, const std::string& indent = "");

struct ThickPath {
    std::vector<FaceId> faces;
    int length() const { return static_cast<int>(faces.size()); }
};

/// Minimal dual path from a to b; ties broken towards lower face ids.
ThickPath shortest_thick_path(const CombMap& map, FaceId a, FaceId b);

/// Step type at an interior face of a thick path: the entry and exit edges
/// are opposite (forward) or share a neighbouring edge (left or right turn).
enum class PathStep { Forward, Left, Right, Other };

std::vector<PathStep> path_steps(const CombMap& map, const ThickPath& path);

/// Rewrites a minimal thick path between two pentagons through hexagons into
/// an equal-length path with at most one turn. Returns the input unchanged if
/// a rewrite would leave the hexagonal region.
ThickPath normalize_path(const CombMap& map, const ThickPath& path);

}  // namespace polysurg
