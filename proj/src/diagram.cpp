#include "vtangle/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace vtangle {

Component Component::closed(std::string id, std::vector<EndpointRef> visits) {
  Component c;
  c.id = std::move(id);
  c.kind = ComponentKind::Closed;
  c.visits = std::move(visits);
  return c;
}

Component Component::long_strand(std::string id, BoundaryPoint start, BoundaryPoint end,
                                 std::vector<EndpointRef> visits) {
  Component c;
  c.id = std::move(id);
  c.kind = ComponentKind::Long;
  c.start = start;
  c.end = end;
  c.visits = std::move(visits);
  return c;
}

Chord Chord::classical(std::string label, int sign, ChordEnd over) {
  return Chord{std::move(label), ChordKind::Classical, sign, over};
}

Chord Chord::singular(std::string label, int frame) {
  return Chord{std::move(label), ChordKind::Singular, frame, ChordEnd::A};
}

const Chord* TangleDiagram::find_chord(const std::string& label) const {
  auto it = std::find_if(chords.begin(), chords.end(), [&](const Chord& c) { return c.label == label; });
  return it == chords.end() ? nullptr : &*it;
}

Chord* TangleDiagram::find_chord(const std::string& label) {
  auto it = std::find_if(chords.begin(), chords.end(), [&](const Chord& c) { return c.label == label; });
  return it == chords.end() ? nullptr : &*it;
}

std::optional<std::size_t> TangleDiagram::component_index(const std::string& id) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].id == id) return i;
  }
  return std::nullopt;
}

std::optional<VisitLocation> TangleDiagram::locate(const std::string& label, ChordEnd end) const {
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const auto& visits = components[ci].visits;
    for (std::size_t p = 0; p < visits.size(); ++p) {
      if (visits[p].chord == label && visits[p].end == end) return VisitLocation{ci, p};
    }
  }
  return std::nullopt;
}

std::size_t TangleDiagram::visit_count() const {
  std::size_t n = 0;
  for (const auto& c : components) n += c.visits.size();
  return n;
}

bool TangleDiagram::has_singular_chords() const {
  return std::any_of(chords.begin(), chords.end(), [](const Chord& c) { return c.is_singular(); });
}

DiagramIndex::DiagramIndex(const TangleDiagram& d) : diagram_(&d) {
  std::map<std::string, ChordLocation> locs;
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& visits = d.components[ci].visits;
    for (std::size_t p = 0; p < visits.size(); ++p) {
      auto& slot = locs[visits[p].chord];
      (visits[p].end == ChordEnd::A ? slot.a : slot.b) = VisitLocation{ci, p};
    }
  }
  locations_.assign(locs.begin(), locs.end());
  chord_slots_.reserve(d.chords.size());
  for (std::size_t i = 0; i < d.chords.size(); ++i) chord_slots_.emplace_back(d.chords[i].label, i);
  std::sort(chord_slots_.begin(), chord_slots_.end());
}

const ChordLocation& DiagramIndex::at(const std::string& label) const {
  auto it = std::lower_bound(locations_.begin(), locations_.end(), label,
                             [](const auto& entry, const std::string& key) { return entry.first < key; });
  if (it == locations_.end() || it->first != label) {
    throw std::invalid_argument("unknown chord '" + label + "'");
  }
  return it->second;
}

const Chord& DiagramIndex::chord(const std::string& label) const {
  auto it = std::lower_bound(chord_slots_.begin(), chord_slots_.end(), label,
                             [](const auto& entry, const std::string& key) { return entry.first < key; });
  if (it == chord_slots_.end() || it->first != label) {
    throw std::invalid_argument("unknown chord '" + label + "'");
  }
  return diagram_->chords[it->second];
}

VisitLocation DiagramIndex::location(const std::string& label, ChordEnd end) const {
  const auto& loc = at(label);
  return end == ChordEnd::A ? loc.a : loc.b;
}

VisitLocation DiagramIndex::over_location(const std::string& label) const {
  return location(label, chord(label).over);
}

VisitLocation DiagramIndex::under_location(const std::string& label) const {
  return location(label, other(chord(label).over));
}

std::string to_string(Side s) { return s == Side::Top ? "T" : "B"; }
std::string to_string(Direction d) { return d == Direction::In ? "in" : "out"; }
std::string to_string(const BoundaryPoint& p) {
  return to_string(p.side) + std::to_string(p.index) + ":" + to_string(p.direction);
}

std::vector<std::string> validate(const TangleDiagram& d) {
  std::vector<std::string> out;
  if (d.top < 0 || d.bottom < 0) out.push_back("negative boundary point count");

  std::set<std::string> labels;
  for (const auto& c : d.chords) {
    if (!labels.insert(c.label).second) out.push_back("duplicate chord label " + c.label);
    if (c.sign != 1 && c.sign != -1) out.push_back("chord " + c.label + " has sign other than +1/-1");
  }

  std::set<std::string> ids;
  std::map<std::pair<Side, int>, int> boundary_use;
  for (const auto& comp : d.components) {
    if (!ids.insert(comp.id).second) out.push_back("duplicate component id " + comp.id);
    if (!comp.is_long()) continue;
    if (comp.start.direction != Direction::In) {
      out.push_back("component " + comp.id + " does not start at an in point");
    }
    if (comp.end.direction != Direction::Out) {
      out.push_back("component " + comp.id + " does not end at an out point");
    }
    for (const auto& bp : {comp.start, comp.end}) {
      int limit = bp.side == Side::Top ? d.top : d.bottom;
      if (bp.index < 1 || bp.index > limit) {
        out.push_back("component " + comp.id + " uses out-of-range boundary point " + to_string(bp));
      }
      ++boundary_use[{bp.side, bp.index}];
    }
  }
  for (const auto& [key, count] : boundary_use) {
    if (count > 1) {
      out.push_back("boundary point " + to_string(key.first) + std::to_string(key.second) + " used " +
                    std::to_string(count) + " times");
    }
  }
  for (auto side : {Side::Top, Side::Bottom}) {
    int limit = side == Side::Top ? d.top : d.bottom;
    for (int i = 1; i <= limit; ++i) {
      if (!boundary_use.contains({side, i})) {
        out.push_back("boundary point " + to_string(side) + std::to_string(i) + " is not an endpoint");
      }
    }
  }

  std::map<std::string, std::pair<int, int>> seen;  // label -> (#A, #B)
  for (const auto& comp : d.components) {
    for (const auto& v : comp.visits) {
      if (!labels.contains(v.chord)) {
        out.push_back("component " + comp.id + " visits unknown chord " + v.chord);
        continue;
      }
      auto& [na, nb] = seen[v.chord];
      (v.end == ChordEnd::A ? na : nb) += 1;
    }
  }
  for (const auto& c : d.chords) {
    auto [na, nb] = seen[c.label];
    if (na + nb < 2) {
      out.push_back("dangling chord " + c.label);
    } else if (na != 1 || nb != 1) {
      out.push_back("chord " + c.label + " endpoint visited more than once");
    }
  }
  return out;
}

bool is_valid(const TangleDiagram& d) { return validate(d).empty(); }

namespace {

/// What a passage looks like independent of A/B naming.
struct Passage {
  std::string label;
  int role;  // +/-1 over, +/-2 under (times sign); +/-3 singular (times frame seen from here)
  friend bool operator==(const Passage&, const Passage&) = default;
};

std::vector<Passage> passages(const TangleDiagram& d, const Component& comp) {
  std::vector<Passage> out;
  out.reserve(comp.visits.size());
  for (const auto& v : comp.visits) {
    const Chord* c = d.find_chord(v.chord);
    if (c == nullptr) {
      out.push_back({v.chord, 0});
    } else if (c->is_singular()) {
      out.push_back({v.chord, 3 * (v.end == ChordEnd::A ? c->sign : -c->sign)});
    } else {
      out.push_back({v.chord, (v.end == c->over ? 1 : 2) * c->sign});
    }
  }
  return out;
}

bool cyclic_equal(const std::vector<Passage>& lhs, const std::vector<Passage>& rhs) {
  if (lhs.size() != rhs.size()) return false;
  if (lhs.empty()) return true;
  for (std::size_t shift = 0; shift < rhs.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < lhs.size() && ok; ++i) ok = lhs[i] == rhs[(i + shift) % rhs.size()];
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool equal_diagrams(const TangleDiagram& lhs, const TangleDiagram& rhs) {
  if (lhs.top != rhs.top || lhs.bottom != rhs.bottom) return false;
  if (lhs.components.size() != rhs.components.size() || lhs.chords.size() != rhs.chords.size()) return false;
  for (std::size_t i = 0; i < lhs.components.size(); ++i) {
    const auto& a = lhs.components[i];
    const auto& b = rhs.components[i];
    if (a.id != b.id || a.kind != b.kind) return false;
    auto pa = passages(lhs, a);
    auto pb = passages(rhs, b);
    if (a.is_long()) {
      if (a.start != b.start || a.end != b.end || pa != pb) return false;
    } else if (!cyclic_equal(pa, pb)) {
      return false;
    }
  }
  std::set<std::string> la, lb;
  for (const auto& c : lhs.chords) la.insert(c.label);
  for (const auto& c : rhs.chords) lb.insert(c.label);
  return la == lb;
}

TangleDiagram reverse_component(const TangleDiagram& d, std::size_t component) {
  if (component >= d.components.size()) {
    throw std::invalid_argument("component index " + std::to_string(component) + " out of range");
  }
  TangleDiagram out = d;
  auto& comp = out.components[component];
  std::reverse(comp.visits.begin(), comp.visits.end());
  if (comp.is_long()) {
    auto new_start = comp.end;
    auto new_end = comp.start;
    new_start.direction = Direction::In;
    new_end.direction = Direction::Out;
    comp.start = new_start;
    comp.end = new_end;
  }
  // A crossing with another component changes sign; self-crossings keep theirs.
  std::map<std::string, int> ends_here;
  for (const auto& v : comp.visits) ++ends_here[v.chord];
  for (auto& chord : out.chords) {
    auto it = ends_here.find(chord.label);
    if (it != ends_here.end() && it->second == 1) chord.sign = -chord.sign;
  }
  return out;
}

TangleDiagram reverse_component(const TangleDiagram& d, const std::string& component_id) {
  auto idx = d.component_index(component_id);
  if (!idx) throw std::invalid_argument("unknown component '" + component_id + "'");
  return reverse_component(d, *idx);
}

}  // namespace vtangle
