#pragma once

#include "vtangle/diagram.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace vtangle {

/// A place between two consecutive visits of a component: inserting there puts
/// new visits before `visits[index]`. For a closed component, index 0 and
/// index == visits.size() denote the same gap.
struct Gap {
  std::size_t component = 0;
  std::size_t index = 0;

  friend bool operator==(const Gap&, const Gap&) = default;
};

/// Kink: one chord whose endpoints are adjacent on one strand.
struct R1Insert {
  Gap gap;
  int sign = 1;
  bool over_first = true;  // the first passage along the strand is the over passage
};

struct R1Remove {
  std::string chord;
};

/// Two chords of opposite signs whose over endpoints are adjacent on one strand
/// (first chord first) and whose under endpoints are adjacent on another.
/// Parallel strands keep the order on the under strand, antiparallel ones
/// reverse it. When both gaps coincide, `under_first` puts the under pair first.
struct R2Insert {
  Gap over_gap;
  Gap under_gap;
  int first_sign = 1;
  bool antiparallel = false;
  bool under_first = false;
};

struct R2Remove {
  std::string first;   // over endpoint comes first along the over strand
  std::string second;
};

/// Braid-like third move on three arcs x, y, z with chords xy (x over y),
/// xz (x over z) and yz (y over z), all of the same sign. The two local
/// patterns, read along each arc, are
///
///   x: O_xy O_xz    y: U_xy O_yz    z: U_xz U_yz
///   x: O_xz O_xy    y: O_yz U_xy    z: U_yz U_xz
///
/// and the slide exchanges them by swapping the two passages on each arc.
struct R3Slide {
  std::string xy;
  std::string xz;
  std::string yz;
};

using MoveSite = std::variant<R1Insert, R1Remove, R2Insert, R2Remove, R3Slide>;

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove, R3Slide };

MoveKind kind_of(const MoveSite& site);
std::string describe(const MoveSite& site);

/// Every legal application of one move kind, in a deterministic order.
/// Moves never touch singular chords.
std::vector<MoveSite> enumerate_sites(const TangleDiagram& d, MoveKind kind);

/// Applies a move. New chords get fresh labels "m1", "m2", ... not already in
/// use. Throws StaleSiteError if the site does not match `d`.
TangleDiagram apply(const TangleDiagram& d, const MoveSite& site);

struct WalkOptions {
  std::size_t chord_cap = 24;
};

/// Deterministic sequence d = d_0, d_1, ..., d_steps where each diagram is one
/// Reidemeister move away from its predecessor. Shorter only if `d` admits no
/// move at all (no components).
std::vector<TangleDiagram> random_walk(const TangleDiagram& d, std::size_t steps, std::uint64_t seed,
                                       const WalkOptions& options = {});

}  // namespace vtangle
