#include "support.hpp"

#include "vtangle/gauss_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vtangle::testing {

TangleDiagram parse(std::string_view text) { return parse_tangle(text); }

TangleDiagram clasp() {
  return parse(
      "tangle 2 2\n"
      "component A long T1:in B1:out\n"
      "O1+ U2+\n"
      "component B long T2:in B2:out\n"
      "U1+ O2+\n");
}

TangleDiagram virtual_trefoil() { return parse("tangle 0 0\ncomponent K closed\nO1+ O2+ U1+ U2+\n"); }

TangleDiagram classical_trefoil() {
  return parse("tangle 0 0\ncomponent K closed\nO1+ U2+ O3+ U1+ O2+ U3+\n");
}

TangleDiagram long_virtual_trefoil() {
  return parse("tangle 1 1\ncomponent K long T1:in B1:out\nO1+ O2+ U1+ U2+\n");
}

TangleDiagram singular_trefoil() { return parse("tangle 0 0\ncomponent K closed\nS1+ O2+ S1+ U2+\n"); }

namespace {

void drop(Rng& rng, TangleDiagram& d, EndpointRef ref) {
  std::uniform_int_distribution<std::size_t> pick_comp(0, d.components.size() - 1);
  auto& visits = d.components[pick_comp(rng)].visits;
  std::uniform_int_distribution<std::size_t> pick_pos(0, visits.size());
  visits.insert(visits.begin() + static_cast<std::ptrdiff_t>(pick_pos(rng)), std::move(ref));
}

}  // namespace

TangleDiagram random_diagram(Rng& rng, const RandomSpec& spec) {
  if (spec.closed + spec.strands == 0) throw std::invalid_argument("random_diagram: no components");
  if (spec.singular > spec.chords) throw std::invalid_argument("random_diagram: too many singular chords");

  TangleDiagram d;
  d.top = d.bottom = static_cast<int>(spec.strands);

  std::vector<int> bottom(spec.strands);
  for (std::size_t i = 0; i < spec.strands; ++i) bottom[i] = static_cast<int>(i) + 1;
  if (spec.permute_bottom) std::shuffle(bottom.begin(), bottom.end(), rng);

  // Interleave kinds so long components are not always first.
  std::size_t closed_left = spec.closed;
  std::size_t strand = 0;
  while (closed_left + (spec.strands - strand) > 0) {
    std::bernoulli_distribution coin(static_cast<double>(closed_left) /
                                     static_cast<double>(closed_left + spec.strands - strand));
    const std::string id = "K" + std::to_string(d.components.size() + 1);
    if (closed_left > 0 && coin(rng)) {
      d.components.push_back(Component::closed(id));
      --closed_left;
    } else {
      BoundaryPoint start{Side::Top, static_cast<int>(strand) + 1, Direction::In};
      BoundaryPoint end{Side::Bottom, bottom[strand], Direction::Out};
      d.components.push_back(Component::long_strand(id, start, end));
      ++strand;
    }
  }

  std::bernoulli_distribution coin(0.5);
  for (std::size_t c = 0; c < spec.chords; ++c) {
    const std::string label = std::to_string(c + 1);
    const int sign = coin(rng) ? 1 : -1;
    if (c < spec.singular) {
      d.chords.push_back(Chord::singular(label, sign));
    } else {
      d.chords.push_back(Chord::classical(label, sign, coin(rng) ? ChordEnd::A : ChordEnd::B));
    }
    drop(rng, d, {label, ChordEnd::A});
    drop(rng, d, {label, ChordEnd::B});
  }
  // Mix the singular chords into the list.
  std::shuffle(d.chords.begin(), d.chords.end(), rng);
  return d;
}

TangleDiagram random_string_link(Rng& rng, std::size_t strands, std::size_t chords) {
  return random_diagram(rng, {.strands = strands, .chords = chords});
}

TangleDiagram random_knot(Rng& rng, std::size_t chords) { return random_diagram(rng, {.closed = 1, .chords = chords}); }

LaurentPoly parse_canonical(std::string_view text, std::size_t num_vars) {
  LaurentPoly p(num_vars);
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() == 1 && tokens[0] == "0") return p;

  std::size_t i = 0;
  while (i < tokens.size()) {
    Rational sign{1};
    if (tokens[i] == "+" || tokens[i] == "-") {
      if (tokens[i] == "-") sign = Rational{-1};
      ++i;
    }
    if (i >= tokens.size()) throw std::invalid_argument("parse_canonical: dangling operator");
    Rational coeff = sign * Rational::parse(tokens[i++]);
    std::vector<int> exps(num_vars, 0);
    while (i < tokens.size() && tokens[i][0] == 't') {
      const auto& v = tokens[i++];
      auto caret = v.find('^');
      std::size_t var = std::stoul(v.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      if (var < 1 || var > num_vars) throw std::invalid_argument("parse_canonical: bad variable " + v);
      exps[var - 1] = caret == std::string::npos ? 1 : std::stoi(v.substr(caret + 1));
    }
    p.add_term(coeff, exps);
  }
  return p;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "vtangle_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace vtangle::testing
