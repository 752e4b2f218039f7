#pragma once

#include "vtangle/diagram.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace vtangle {

enum class Operand { Upper, Lower };

/// One input component of a connected sum.
struct InputComponent {
  Operand tangle = Operand::Upper;
  std::size_t index = 0;

  friend bool operator==(const InputComponent&, const InputComponent&) = default;
};

/// Variables identified by stacking: (variable of the upper tangle, variable of the lower tangle).
struct RelationSet {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct GlueResult {
  TangleDiagram diagram;
  RelationSet relations;
  /// For each result component, the input components concatenated into it, in traversal order.
  std::vector<std::vector<InputComponent>> component_map;

  /// Result component that each input variable ended up in.
  std::vector<std::size_t> upper_var_map() const;
  std::vector<std::size_t> lower_var_map() const;
};

/// Stacks `upper` above `lower`, gluing bottom point i of `upper` to top point i
/// of `lower`. Chains of long components ending at free boundary points become
/// long components; chains that close up become closed components. Closed input
/// components pass through unchanged. Result components are ordered by their
/// first input component (upper components first). Lower chord labels that
/// clash with upper ones are renamed. Throws GluingError on a count or
/// direction mismatch.
GlueResult connect(const TangleDiagram& upper, const TangleDiagram& lower);

/// (n, n), no closed components, component i runs from T i (in) to B i (out).
bool is_string_link(const TangleDiagram& d);

/// Identity braid on n strands.
TangleDiagram identity_braid(std::size_t strands);

/// Turns every long component of a string link into a closed one.
/// Throws std::invalid_argument if `d` is not a string link.
TangleDiagram closure(const TangleDiagram& d);

/// Two-component link with vlk(L1, L2) = a and vlk(L2, L1) = -b: a positive
/// chords with L1 over, then b negative chords with L2 over, no self-crossings.
/// Throws std::invalid_argument for negative a or b.
TangleDiagram gen_vlk_link(int a, int b);

/// The same chord layout on a two-strand string link.
TangleDiagram gen_vlk_string_link(int a, int b);

}  // namespace vtangle
