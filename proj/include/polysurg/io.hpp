#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysurg/comb_map.hpp"

namespace polysurg {

class IoError : public std::runtime_error {
public:
    enum class Kind { BadHeader, TruncatedRecord, ValidationFailure };
    IoError(Kind kind, int index, const std::string& what) : std::runtime_error(what), kind_(kind), index_(index) {}
    Kind kind() const noexcept { return kind_; }
    /// Zero-based record index, or -1 for the header.
    int index() const noexcept { return index_; }

private:
    Kind kind_;
    int index_;
};

/// Reads a plantri planar_code stream. Records with fewer than 256 vertices
/// use one byte per entry; larger ones start with a zero byte and use two.
/// Every record is validated as a simple 3-polytope.
std::vector<CombMap> read_planar_code(std::istream& in);

enum class RecordOrder {
    /// Canonical forms sorted by (vertex count, canonical code).
    Canonical,
    /// The maps as given, in the given order.
    AsGiven,
};

void write_planar_code(std::ostream& out, const std::vector<CombMap>& maps, RecordOrder order = RecordOrder::Canonical);

/// Canonical forms sorted by (vertex count, canonical code).
std::vector<CombMap> sort_canonical(const std::vector<CombMap>& maps);

struct Embedding {
    std::vector<std::array<double, 2>> position;
    int sweeps = 0;
    /// Largest vertex move in the last sweep.
    double residual = 0;
};

/// Tutte barycentric embedding: the outer face on the unit regular polygon,
/// every other vertex at the mean of its neighbours, to within `tolerance`.
Embedding tutte_embedding(const CombMap& map, FaceId outer, double tolerance = 1e-9);

/// SVG drawing with faces coloured by size (pentagons yellow, hexagons red,
/// quadrangles blue, heptagons green). Highlighted faces get a heavy outline.
std::string render_svg(const CombMap& map, FaceId outer, const std::vector<FaceId>& highlight = {});

}  // namespace polysurg
