#include "vtangle/singular.hpp"

#include "vtangle/invariants.hpp"

#include <stdexcept>

namespace vtangle {

int Resolution::weight() const {
  int w = 1;
  for (const auto& [label, choice] : assignment) {
    if (choice == Choice::Minus) w = -w;
  }
  return w;
}

TangleDiagram resolve(const TangleDiagram& d, const Resolution& r) {
  for (const auto& [label, choice] : r.assignment) {
    const Chord* c = d.find_chord(label);
    if (c == nullptr) throw std::invalid_argument("resolution names unknown chord " + label);
    if (!c->is_singular()) throw std::invalid_argument("resolution names non-singular chord " + label);
  }
  TangleDiagram out = d;
  for (auto& c : out.chords) {
    if (!c.is_singular()) continue;
    auto it = r.assignment.find(c.label);
    if (it == r.assignment.end()) throw std::invalid_argument("singular chord " + c.label + " is unassigned");
    const ChordEnd frame_over = c.sign == 1 ? ChordEnd::A : ChordEnd::B;
    if (it->second == Choice::Plus) {
      c = Chord::classical(c.label, +1, frame_over);
    } else {
      c = Chord::classical(c.label, -1, other(frame_over));
    }
  }
  return out;
}

std::vector<Resolution> all_resolutions(const TangleDiagram& d) {
  std::vector<std::string> singular;
  for (const auto& c : d.chords) {
    if (c.is_singular()) singular.push_back(c.label);
  }
  if (singular.size() >= 31) throw std::invalid_argument("too many singular chords to expand");
  const std::size_t count = std::size_t{1} << singular.size();
  std::vector<Resolution> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Resolution r;
    for (std::size_t k = 0; k < singular.size(); ++k) {
      // most significant bit is the first singular chord
      bool minus = (mask >> (singular.size() - 1 - k)) & 1U;
      r.assignment.emplace(singular[k], minus ? Choice::Minus : Choice::Plus);
    }
    out.push_back(std::move(r));
  }
  return out;
}

LaurentPoly evaluate(const TangleDiagram& d, const InvariantSpec& spec) {
  switch (spec.kind) {
    case InvariantKind::Psc:
      return p_sc(d);
    case InvariantKind::Plk:
      return p_lk(d, spec.a, spec.b);
    case InvariantKind::PlkL:
      return p_lk_L(d, spec.a, spec.b);
  }
  throw std::logic_error("unhandled invariant kind");
}

LaurentPoly derivative(const TangleDiagram& d, const InvariantSpec& spec) {
  LaurentPoly total(d.components.size());
  for (const auto& r : all_resolutions(d)) {
    auto value = evaluate(resolve(d, r), spec);
    if (r.weight() > 0) {
      total += value;
    } else {
      total -= value;
    }
  }
  return total;
}

}  // namespace vtangle
