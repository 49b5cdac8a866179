#pragma once

// Arc diagrams on the marked points 0 < z_1 < ... < z_n.
//
// A diagram is a multiset of chords (i, j), 0 <= i < j <= n, where position 0
// is the origin and position p >= 1 is z_p.  It is admissible when
//   * no two chords cross (i < k < j < l),
//   * every z_p is an endpoint of at most lambda_p chords,
//   * no chord passes over a z_p that is an endpoint of fewer than lambda_p
//     chords.
// The origin has unbounded capacity.  Its index a(d) counts, for each z_i,
// the chords reaching it from the left (the origin included).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcanon/tensor.hpp"

namespace qcanon {

using Chord = std::pair<int, int>;

struct ArcDiagram {
  std::vector<int> capacities;  // lambda_1 .. lambda_n
  std::vector<Chord> chords;    // sorted

  int points() const noexcept { return static_cast<int>(capacities.size()); }
  int degree(int p) const;

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
  friend auto operator<=>(const ArcDiagram&, const ArcDiagram&) = default;
};

/// Sorts the chords so that equal multisets compare equal.
ArcDiagram make_diagram(std::vector<int> capacities, std::vector<Chord> chords);

struct DiagramReport {
  bool valid = true;
  std::string clause;  // "endpoints", "crossing", "capacity" or "pass-over"
  std::string detail;
};

DiagramReport validate_diagram(const ArcDiagram& d);

/// All admissible diagrams with `level` chords, sorted by chord list.
std::vector<ArcDiagram> enumerate_B(const std::vector<int>& lambda, int level);

/// Throws InvalidDiagram for an inadmissible diagram.
MultiIndex index_of_diagram(const ArcDiagram& d);

/// The unique diagram with index a, found by filtering enumerate_B.  Throws
/// NotInP unless 0 <= a_i <= lambda_i.
ArcDiagram diagram_of_index(const std::vector<int>& lambda, const MultiIndex& a);
/// Direct construction: sweep left to right keeping a stack of open endpoint
/// slots, closing a_i of them at z_i (the origin supplies any shortfall).
ArcDiagram diagram_of_index_greedy(const std::vector<int>& lambda, const MultiIndex& a);

/// Diagrams without chords at the origin.
std::vector<ArcDiagram> filter_singular(const std::vector<ArcDiagram>& diagrams);
/// Singular diagrams in which every z_p has degree lambda_p.  Throws
/// WeightMismatch unless sum(lambda) = 2 level.
std::vector<ArcDiagram> filter_invariant(const std::vector<ArcDiagram>& diagrams, const std::vector<int>& lambda,
                                         int level);

/// pi: {1..sum lambda} -> {1..n}, constant on consecutive blocks of sizes
/// lambda_1, lambda_2, ...  Returned as pi[0..sum-1] (1-based values).
/// Throws ZeroBlock if some lambda_i is 0.
std::vector<int> block_map(const std::vector<int>& lambda);

/// Collapses a unit-capacity diagram along pi.  nullopt (the zero vector) if
/// some chord joins two points of one block.
std::optional<ArcDiagram> cable_diagram(const ArcDiagram& unit, const std::vector<int>& lambda);

enum class RenderFormat { Ascii, Svg };

std::string render(const ArcDiagram& d, RenderFormat format);

}  // namespace qcanon
