#pragma once

#include "vtangle/diagram.hpp"
#include "vtangle/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vtangle {

/// The two pieces left after smoothing a self-crossing along the orientation.
/// For a long component piece1 is the long piece and piece2 the closed middle
/// piece; for a closed component piece1 is the arc following end A.
struct SmoothSplit {
  std::string chord;
  std::size_t component = 0;
  std::vector<std::size_t> piece1;  // visit positions
  std::vector<std::size_t> piece2;

  SmoothSplit swapped() const { return SmoothSplit{chord, component, piece2, piece1}; }
};

struct IndexValue {
  int signed_value = 0;
  int absolute = 0;

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

/// Throws std::invalid_argument if the chord is unknown or joins two components,
/// SingularChordError if it is singular.
SmoothSplit smooth_split(const TangleDiagram& d, const std::string& chord);

/// Intersection index of a smoothing: the sum over chords joining the two pieces
/// of sign(x) if x's over endpoint is on piece1, else -sign(x). Chords touching
/// other components are ignored.
IndexValue index_of_split(const TangleDiagram& d, const SmoothSplit& split);
IndexValue intersection_index(const TangleDiagram& d, const std::string& chord);

/// Self-crossing polynomial: sum of sign(c) (t_i^{|i(c)|} - 1) over self-crossings.
LaurentPoly p_sc(const TangleDiagram& d);

/// Virtual linking number: signed count of crossings where component i is over
/// component j. Indices are 0-based.
long vlk(const TangleDiagram& d, std::size_t i, std::size_t j);
long wriggle(const TangleDiagram& d, std::size_t i, std::size_t j);

LaurentPoly p_lk(const TangleDiagram& d, const Rational& a, const Rational& b);
LaurentPoly p_lk_L(const TangleDiagram& d, const Rational& a, const Rational& b);

/// Henrich-Turaev polynomial of a one-component closed diagram.
LaurentPoly henrich_pt(const TangleDiagram& d);

/// Ordered index polynomial of a long knot, with the long piece fixed as the
/// first piece. Negative exponents may appear.
LaurentPoly ordered_pt_long(const TangleDiagram& d);

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix vlk_matrix(const TangleDiagram& d);
IntMatrix wriggle_matrix(const TangleDiagram& d);

/// Everything the CLI prints for one diagram.
struct InvariantReport {
  LaurentPoly psc;
  Rational a;
  Rational b;
  LaurentPoly plk;
  LaurentPoly plkL;
  IntMatrix vlk;
  IntMatrix wriggle;
};

InvariantReport compute_report(const TangleDiagram& d, const Rational& a, const Rational& b);

}  // namespace vtangle
