#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polysurg/belts.hpp"
#include "polysurg/comb_map.hpp"

namespace polysurg {

enum class SurgeryErrorKind { InvalidRun, SpecOutOfRange, NotDefined, IsSimplex };

const char* to_string(SurgeryErrorKind kind);

class SurgeryError : public std::runtime_error {
public:
    SurgeryError(SurgeryErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    SurgeryErrorKind kind() const noexcept { return kind_; }

private:
    SurgeryErrorKind kind_;
};

/// Cut of the run E_0, ..., E_{s+1} of consecutive edges on the boundary of
/// `face`. `start` is the dart of E_0 with `face` on its left; the run follows
/// face_next from there.
struct TruncationSpec {
    FaceId face = kNoFace;
    DartId start = kNoDart;
    int s = 0;
};

/// (s,k;t0,t1) with s replaced by min(s, k-s-2), since the complementary run
/// gives the same operation, and t0 <= t1.
struct TruncationSignature {
    int s = 0;
    int k = 0;
    int t0 = 0;
    int t1 = 0;

    /// "(1;t0,t1)" when s = 1, otherwise "(s,k;t0,t1)".
    std::string str() const;
    bool operator==(const TruncationSignature&) const = default;
};

TruncationSignature signature(const CombMap& map, const TruncationSpec& spec);

/// The seven truncation types used by the fullerene growth operations.
const std::vector<TruncationSignature>& permitted_signatures();
bool is_permitted(const TruncationSignature& sig);

struct SurgeryResult {
    CombMap map;
    /// For every face of the input, the faces of the output it became.
    std::vector<std::vector<FaceId>> face_image;
    /// Truncation: the (s+3)-gon F'. Straightening: the merged facet.
    FaceId new_face = kNoFace;
    /// Truncation: the (k-s+1)-gon F''. Straightening: unused.
    FaceId other_face = kNoFace;
    /// Truncation: the new edge, as the dart with F' on its left.
    DartId new_edge = kNoDart;
    /// Straightening: the truncation of the output that restores the input,
    /// with the former left face of the straightened edge as F'.
    TruncationSpec restore;
};

/// Checks the spec against the map; throws SurgeryError when it is invalid.
void check_spec(const CombMap& map, const TruncationSpec& spec);

SurgeryResult truncate(const CombMap& map, const TruncationSpec& spec);

/// (1;t0,t2)-truncation cutting off the edge of `edge`, performed inside the
/// facet on the left of `edge`.
TruncationSpec edge_truncation(const CombMap& map, DartId edge);

/// The four facets around an edge: the two containing it and the two meeting
/// it at its endpoints (at the origin of the dart, then at its head).
struct EdgeFaces {
    FaceId left = kNoFace;
    FaceId right = kNoFace;
    FaceId at_origin = kNoFace;
    FaceId at_head = kNoFace;
};

EdgeFaces edge_faces(const CombMap& map, DartId edge);

/// Definedness by disjointness of the two neighbour sets.
bool can_straighten(const CombMap& map, DartId edge);

/// Definedness via belts: false iff a 3-belt contains both facets of the edge.
bool can_straighten_by_belts(const CombMap& map, DartId edge);

/// Signature of the truncation that undoes straightening along `edge`, with
/// the left face of `edge` as F'.
TruncationSignature straighten_signature(const CombMap& map, DartId edge);

/// Throws SurgeryError(IsSimplex) on the tetrahedron and
/// SurgeryError(NotDefined) when the neighbour sets meet.
SurgeryResult straighten(const CombMap& map, DartId edge);

/// True when the map has no 3-belt and is not the simplex.
bool is_flag(const CombMap& map);

struct FlagReport {
    bool input_flag = false;
    bool output_flag = false;
    /// 4-belts of the input through both facets of the edge.
    std::vector<Belt> four_belts;
    /// 3-belts of the output, when it is not flag.
    std::vector<Belt> output_three_belts;
};

FlagReport flag_effects(const CombMap& map, DartId edge);

}  // namespace polysurg
