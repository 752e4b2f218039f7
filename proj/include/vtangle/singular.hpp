#pragma once

#include "vtangle/diagram.hpp"
#include "vtangle/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtangle {

enum class Choice { Plus, Minus };

/// A choice of resolution for every double point of a diagram.
struct Resolution {
  std::map<std::string, Choice> assignment;

  /// (-1)^(number of Minus choices).
  int weight() const;
};

/// Replaces every singular chord by the classical crossing picked by `r`.
/// Plus gives a positive crossing with end A over when the frame is +1 (end B
/// when -1); Minus gives the negative crossing with the other end over.
/// Throws std::invalid_argument for unassigned singular chords or for
/// assignments naming non-singular chords.
TangleDiagram resolve(const TangleDiagram& d, const Resolution& r);

/// All 2^k resolutions in a fixed order (binary counting over singular chords
/// in chord-list order, Plus before Minus).
std::vector<Resolution> all_resolutions(const TangleDiagram& d);

enum class InvariantKind { Psc, Plk, PlkL };

struct InvariantSpec {
  InvariantKind kind = InvariantKind::Psc;
  Rational a{1};
  Rational b{1};
};

LaurentPoly evaluate(const TangleDiagram& d, const InvariantSpec& spec);

/// Vassiliev derivative: sum over resolutions of weight * invariant.
LaurentPoly derivative(const TangleDiagram& d, const InvariantSpec& spec);

}  // namespace vtangle
