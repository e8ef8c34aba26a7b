#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zsurg {

enum class DiagramErrc {
    BadToken,
    OddLabel,
    DuplicateLabel,
    NonContiguousLabels,
    NonRealizable,
    TooManyCrossings,
};

std::string_view to_string(DiagramErrc e);

class DiagramError : public std::runtime_error {
public:
    DiagramError(DiagramErrc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    DiagramErrc code() const noexcept { return code_; }

private:
    DiagramErrc code_;
};

/// Dowker-Thistlethwaite code. labels[i] is the signed even label paired
/// with the odd label 2i+1. A positive label means the odd-labelled passage
/// is the overcrossing.
struct DtCode {
    std::vector<int> labels;

    std::size_t crossing_count() const noexcept { return labels.size(); }
    bool operator==(const DtCode&) const = default;
};

DtCode parse_dt(std::string_view text);
std::string serialize(const DtCode& code);

/// Half-edge incident to a crossing: the knot strand at traversal
/// `position` either arriving at (incoming) or leaving (outgoing) it.
struct EdgeEnd {
    int position = 0;
    bool incoming = false;
    bool operator==(const EdgeEnd&) const = default;
};

struct Crossing {
    int first = 0;            // traversal position of the odd-labelled passage
    int second = 0;           // traversal position of the even-labelled passage
    bool first_over = true;
    int sign = 1;             // right-handed crossing = +1
    std::array<EdgeEnd, 4> ends{};  // counterclockwise around the crossing

    int over_position() const noexcept { return first_over ? first : second; }
    int under_position() const noexcept { return first_over ? second : first; }
    bool operator==(const Crossing&) const = default;
};

/// Overstrand arc: starts leaving the undercrossing at traversal position
/// `start` and runs to the undercrossing at position `end`.
struct Arc {
    int start = 0;
    int end = 0;
    bool operator==(const Arc&) const = default;
};

/// One corner of a face: the sector between ends[k] and ends[(k+1)%4] of a
/// crossing.
struct Corner {
    int crossing = 0;
    int slot = 0;
    bool operator==(const Corner&) const = default;
};

/// Planar knot diagram with its embedding. Passages are numbered 0..2n-1
/// along the knot; the edge leaving passage k arrives at passage k+1 (mod 2n).
class KnotDiagram {
public:
    KnotDiagram() = default;
    KnotDiagram(std::vector<Crossing> crossings, std::vector<int> traversal);

    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t passage_count() const noexcept { return traversal_.size(); }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<int>& traversal() const noexcept { return traversal_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool is_over(int position) const;
    /// Index of the arc that contains `position` as an overpassing point,
    /// or the arc starting at it when the passage is under.
    int arc_at(int position) const;

    /// Faces of the embedding, each a cyclic list of corners.
    std::vector<std::vector<Corner>> faces() const;

    DtCode to_dt() const;

    bool operator==(const KnotDiagram&) const = default;

private:
    std::vector<Crossing> crossings_;
    std::vector<int> traversal_;
    std::vector<Arc> arcs_;
    std::vector<int> arc_of_position_;
};

/// Largest code `realize` accepts; the embedding search is exponential.
inline constexpr std::size_t kMaxRealizeCrossings = 26;

KnotDiagram realize(const DtCode& code);
KnotDiagram mirror(const KnotDiagram& d);
int writhe(const KnotDiagram& d);

/// Rotation of the four ends at a crossing whose odd passage is `a` and even
/// passage is `b`. `flipped` selects the embedding where b crosses a from
/// left to right.
std::array<EdgeEnd, 4> crossing_rotation(int a, int b, bool flipped);

/// Number of faces of the map defined by per-crossing rotations.
std::size_t count_faces(const DtCode& code, const std::vector<bool>& flips);

struct KnotRecord {
    std::string name;
    DtCode dt;
    std::optional<std::string> census_name;
    std::optional<std::pair<int, int>> crossing_interval;
    std::optional<int> tetrahedral_complexity;
    /// Extra annotation columns from the table (genus, fibered, ...).
    std::vector<std::pair<std::string, std::string>> annotations;
};

/// Reads a `name,dt[,extra...]` CSV. Malformed DT codes are returned in
/// `errors` rather than thrown.
struct KnotTable {
    std::vector<KnotRecord> records;
    std::vector<std::pair<std::string, std::string>> errors;
};

KnotTable read_knot_table(std::string_view csv_text);
KnotTable load_knot_table(const std::string& path);

}  // namespace zsurg
