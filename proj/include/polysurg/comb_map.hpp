#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polysurg {

using DartId = std::int32_t;
using VertexId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr DartId kNoDart = -1;
inline constexpr FaceId kNoFace = -1;

enum class MapErrorKind {
    NonCubic,
    AsymmetricAdjacency,
    NonPlanar,
    Disconnected,
};

const char* to_string(MapErrorKind kind);

class MapError : public std::runtime_error {
public:
    MapError(MapErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    MapErrorKind kind() const noexcept { return kind_; }

private:
    MapErrorKind kind_;
};

/// Counterclockwise neighbour triple of one vertex.
using Rotation = std::array<VertexId, 3>;

/// Cubic planar combinatorial map.
///
/// Darts 3v, 3v+1, 3v+2 leave vertex v in counterclockwise order, so the
/// rotation permutation is implicit. Faces are the orbits of
/// `prev(twin(d))` and lie to the left of each of their darts. A map is
/// immutable after construction; surgery builds fresh maps.
class CombMap {
public:
    CombMap() = default;

    /// Builds a map from per-vertex counterclockwise neighbour lists.
    /// Throws MapError when the input is not a connected cubic map of genus 0.
    static CombMap from_rotation(std::span<const Rotation> rotations);

    int vertex_count() const { return static_cast<int>(twin_.size() / 3); }
    int edge_count() const { return static_cast<int>(twin_.size() / 2); }
    int face_count() const { return static_cast<int>(face_start_.size()); }
    int dart_count() const { return static_cast<int>(twin_.size()); }

    DartId twin(DartId d) const { return twin_[d]; }
    DartId next(DartId d) const { return d - d % 3 + (d % 3 + 1) % 3; }
    DartId prev(DartId d) const { return d - d % 3 + (d % 3 + 2) % 3; }
    VertexId origin(DartId d) const { return d / 3; }
    VertexId head(DartId d) const { return twin_[d] / 3; }

    /// Successor of d along the boundary of the face on its left.
    DartId face_next(DartId d) const { return prev(twin_[d]); }
    /// Predecessor of d along the boundary of the face on its left.
    DartId face_prev(DartId d) const { return twin_[next(d)]; }

    FaceId face_of(DartId d) const { return face_of_[d]; }
    /// Face on the other side of the edge carrying d.
    FaceId face_across(DartId d) const { return face_of_[twin_[d]]; }
    int face_size(FaceId f) const { return face_size_[f]; }
    /// A canonical dart on the boundary of f (the lowest dart id in the orbit).
    DartId face_dart(FaceId f) const { return face_start_[f]; }
    /// Boundary darts of f in traversal order, starting at face_dart(f).
    std::vector<DartId> face_darts(FaceId f) const;
    /// Faces adjacent to f in boundary order.
    std::vector<FaceId> face_neighbors(FaceId f) const;
    /// Faces meeting at vertex v, in the order of its darts.
    std::array<FaceId, 3> vertex_faces(VertexId v) const;

    /// Dart on the boundary of `f` whose edge separates f from `g`, or kNoDart.
    DartId shared_edge(FaceId f, FaceId g) const;
    bool faces_adjacent(FaceId f, FaceId g) const { return shared_edge(f, g) != kNoDart; }
    /// True when the three faces share a vertex.
    bool faces_meet_at_vertex(FaceId a, FaceId b, FaceId c) const;

    std::vector<Rotation> rotations() const;
    /// The same map with every rotation reversed.
    CombMap mirror() const;
    /// The same map with vertex v renamed perm[v].
    CombMap relabel(std::span<const VertexId> perm) const;

private:
    void compute_faces();

    std::vector<DartId> twin_;
    std::vector<FaceId> face_of_;
    std::vector<DartId> face_start_;
    std::vector<int> face_size_;
};

/// Counts of k-gonal faces.
using FaceVector = std::map<int, int>;

FaceVector face_vector(const CombMap& map);

/// 3p3 + 2p4 + p5 - 12 - sum_{k>=7} (k-6) p_k; zero on every simple 3-polytope.
int face_count_residual(const FaceVector& fv);

struct ValidationReport {
    FaceVector faces;
    int f0 = 0;
    int f1 = 0;
    int f2 = 0;
    bool euler_ok = false;
    bool cubic_ok = false;
    bool simple_graph = false;
    bool connected = false;
    bool three_connected = false;
    /// Two distinct faces never share more than one edge.
    bool faces_meet_properly = false;
    int residual = 0;
    /// A vertex pair whose removal disconnects the graph, when one exists.
    std::array<VertexId, 2> separating_pair{-1, -1};

    bool ok() const {
        return euler_ok && cubic_ok && simple_graph && connected && three_connected &&
               faces_meet_properly && residual == 0;
    }
};

ValidationReport validate(const CombMap& map);

/// Brute-force 2-vertex-cut search; returns {-1,-1} when none exists.
std::array<VertexId, 2> find_separating_pair(const CombMap& map);

/// Minimal BFS code over all rooted darts and both orientations.
class CanonicalCode {
public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::vector<std::uint16_t> words) : words_(std::move(words)) {}

    const std::vector<std::uint16_t>& words() const { return words_; }
    /// Big-endian byte serialisation; preserves ordering.
    std::vector<std::uint8_t> bytes() const;
    std::string hex() const;
    /// Number of vertices encoded.
    int vertex_count() const { return static_cast<int>(words_.size() / 3); }

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;

private:
    std::vector<std::uint16_t> words_;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept;
};

CanonicalCode canonical_code(const CombMap& map);
bool is_isomorphic(const CombMap& a, const CombMap& b);
/// True when the map has an orientation-reversing automorphism.
bool is_achiral(const CombMap& map);

/// A map built from its canonical labelling; equal codes give identical maps.
CombMap canonical_form(const CombMap& map);

}  // namespace polysurg
