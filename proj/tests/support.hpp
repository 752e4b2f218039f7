#pragma once

// Shared fixtures and random generators for the test suites.

#include "vtangle/diagram.hpp"
#include "vtangle/polynomial.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <string_view>

namespace vtangle::testing {

using Rng = std::mt19937_64;

TangleDiagram parse(std::string_view text);

// Named fixtures, all built from the text format.
TangleDiagram clasp();
TangleDiagram virtual_trefoil();
TangleDiagram classical_trefoil();
TangleDiagram long_virtual_trefoil();
TangleDiagram singular_trefoil();

struct RandomSpec {
  std::size_t closed = 0;      // closed components
  std::size_t strands = 0;     // long components, strand i runs T i -> B perm(i)
  std::size_t chords = 0;
  std::size_t singular = 0;    // how many of the chords are double points
  bool permute_bottom = false;
};

/// Chords are dropped onto uniformly random gaps of uniformly random components.
TangleDiagram random_diagram(Rng& rng, const RandomSpec& spec);

TangleDiagram random_string_link(Rng& rng, std::size_t strands, std::size_t chords);
TangleDiagram random_knot(Rng& rng, std::size_t chords);

/// Inverse of render_canonical, for round-trip checks.
LaurentPoly parse_canonical(std::string_view text, std::size_t num_vars);

/// Writes `text` to a fresh file under the build tree and returns its path.
std::string write_temp(const std::string& name, const std::string& text);

}  // namespace vtangle::testing
