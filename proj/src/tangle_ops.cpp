#include "vtangle/tangle_ops.hpp"

#include "vtangle/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace vtangle {

namespace {

struct Member {
  InputComponent input;
  std::size_t key;  // global order: upper components, then lower components
};

// Which long component has an endpoint at a given boundary point.
std::map<std::pair<Side, int>, std::size_t> endpoint_owner(const TangleDiagram& d) {
  std::map<std::pair<Side, int>, std::size_t> owner;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    if (!c.is_long()) continue;
    owner[{c.start.side, c.start.index}] = i;
    owner[{c.end.side, c.end.index}] = i;
  }
  return owner;
}

std::string unique_label(const std::string& base, std::set<std::string>& taken) {
  std::string candidate = "u_" + base;
  for (int k = 2; !taken.insert(candidate).second; ++k) candidate = "u_" + base + "_" + std::to_string(k);
  return candidate;
}

}  // namespace

GlueResult connect(const TangleDiagram& upper, const TangleDiagram& lower) {
  if (upper.bottom != lower.top) {
    throw GluingError("cannot stack: upper tangle has " + std::to_string(upper.bottom) +
                      " bottom points but lower tangle has " + std::to_string(lower.top) + " top points");
  }
  const int n = upper.bottom;
  const auto upper_owner = endpoint_owner(upper);
  const auto lower_owner = endpoint_owner(lower);

  GlueResult result;
  for (int i = 1; i <= n; ++i) {
    auto u = upper_owner.find({Side::Bottom, i});
    auto l = lower_owner.find({Side::Top, i});
    if (u == upper_owner.end() || l == lower_owner.end()) {
      throw GluingError("boundary point " + std::to_string(i) + " is not an endpoint on both sides");
    }
    const auto& uc = upper.components[u->second];
    const auto& lc = lower.components[l->second];
    const bool upper_exits = uc.end.side == Side::Bottom && uc.end.index == i;
    const bool lower_enters = lc.start.side == Side::Top && lc.start.index == i;
    if (upper_exits != lower_enters) {
      throw GluingError("orientation clash at glued point " + std::to_string(i));
    }
    result.relations.pairs.emplace_back(u->second, l->second);
  }

  // Chord relabeling for the lower tangle.
  std::set<std::string> taken;
  for (const auto& c : upper.chords) taken.insert(c.label);
  for (const auto& c : lower.chords) taken.insert(c.label);
  std::map<std::string, std::string> rename;
  std::set<std::string> upper_labels;
  for (const auto& c : upper.chords) upper_labels.insert(c.label);
  for (const auto& c : lower.chords) {
    if (upper_labels.contains(c.label)) rename[c.label] = unique_label(c.label, taken);
  }
  auto lower_label = [&](const std::string& l) {
    auto it = rename.find(l);
    return it == rename.end() ? l : it->second;
  };

  const std::size_t upper_count = upper.components.size();
  auto component_of = [&](const InputComponent& ic) -> const Component& {
    return ic.tangle == Operand::Upper ? upper.components[ic.index] : lower.components[ic.index];
  };
  auto key_of = [&](const InputComponent& ic) {
    return ic.tangle == Operand::Upper ? ic.index : upper_count + ic.index;
  };
  // Successor of a long component across the glued boundary, if any.
  auto successor = [&](const InputComponent& ic) -> std::optional<InputComponent> {
    const auto& c = component_of(ic);
    if (ic.tangle == Operand::Upper && c.end.side == Side::Bottom) {
      return InputComponent{Operand::Lower, lower_owner.at({Side::Top, c.end.index})};
    }
    if (ic.tangle == Operand::Lower && c.end.side == Side::Top) {
      return InputComponent{Operand::Upper, upper_owner.at({Side::Bottom, c.end.index})};
    }
    return std::nullopt;
  };
  auto free_start = [&](const InputComponent& ic) {
    const auto& c = component_of(ic);
    return ic.tangle == Operand::Upper ? c.start.side == Side::Top : c.start.side == Side::Bottom;
  };

  std::vector<InputComponent> all;
  for (std::size_t i = 0; i < upper.components.size(); ++i) all.push_back({Operand::Upper, i});
  for (std::size_t i = 0; i < lower.components.size(); ++i) all.push_back({Operand::Lower, i});

  std::vector<std::vector<InputComponent>> groups;
  std::set<std::size_t> used;
  for (const auto& ic : all) {
    const auto& c = component_of(ic);
    if (c.is_closed()) {
      groups.push_back({ic});
      used.insert(key_of(ic));
    } else if (free_start(ic)) {
      std::vector<InputComponent> chain{ic};
      used.insert(key_of(ic));
      for (auto next = successor(ic); next; next = successor(*next)) {
        chain.push_back(*next);
        used.insert(key_of(*next));
      }
      groups.push_back(std::move(chain));
    }
  }
  // Remaining long components close up into cycles; start each at its smallest member.
  for (const auto& ic : all) {
    if (used.contains(key_of(ic))) continue;
    std::vector<InputComponent> cycle{ic};
    used.insert(key_of(ic));
    for (auto next = successor(ic); next && !used.contains(key_of(*next)); next = successor(*next)) {
      cycle.push_back(*next);
      used.insert(key_of(*next));
    }
    groups.push_back(std::move(cycle));
  }

  auto group_key = [&](const std::vector<InputComponent>& g) {
    std::size_t k = key_of(g.front());
    for (const auto& ic : g) k = std::min(k, key_of(ic));
    return k;
  };
  std::stable_sort(groups.begin(), groups.end(),
                   [&](const auto& x, const auto& y) { return group_key(x) < group_key(y); });

  TangleDiagram& out = result.diagram;
  out.top = upper.top;
  out.bottom = lower.bottom;
  std::set<std::string> ids;
  for (const auto& group : groups) {
    std::vector<EndpointRef> visits;
    std::string id;
    for (const auto& ic : group) {
      const auto& c = component_of(ic);
      id += (id.empty() ? "" : "-") + c.id;
      for (const auto& v : c.visits) {
        visits.push_back(ic.tangle == Operand::Upper ? v : EndpointRef{lower_label(v.chord), v.end});
      }
    }
    std::string unique = id;
    for (int k = 2; !ids.insert(unique).second; ++k) unique = id + "_" + std::to_string(k);

    const auto& first = component_of(group.front());
    const auto& last = component_of(group.back());
    const bool is_chain = first.is_long() && free_start(group.front()) && !successor(group.back());
    if (is_chain) {
      out.components.push_back(Component::long_strand(unique, first.start, last.end, std::move(visits)));
    } else {
      out.components.push_back(Component::closed(unique, std::move(visits)));
    }
    result.component_map.push_back(group);
  }

  out.chords = upper.chords;
  for (auto c : lower.chords) {
    c.label = lower_label(c.label);
    out.chords.push_back(std::move(c));
  }
  return result;
}

std::vector<std::size_t> GlueResult::upper_var_map() const {
  std::vector<std::size_t> map;
  for (std::size_t r = 0; r < component_map.size(); ++r) {
    for (const auto& ic : component_map[r]) {
      if (ic.tangle != Operand::Upper) continue;
      if (map.size() <= ic.index) map.resize(ic.index + 1);
      map[ic.index] = r;
    }
  }
  return map;
}

std::vector<std::size_t> GlueResult::lower_var_map() const {
  std::vector<std::size_t> map;
  for (std::size_t r = 0; r < component_map.size(); ++r) {
    for (const auto& ic : component_map[r]) {
      if (ic.tangle != Operand::Lower) continue;
      if (map.size() <= ic.index) map.resize(ic.index + 1);
      map[ic.index] = r;
    }
  }
  return map;
}

bool is_string_link(const TangleDiagram& d) {
  if (d.top != d.bottom) return false;
  if (d.components.size() != static_cast<std::size_t>(d.top)) return false;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    const int pos = static_cast<int>(i) + 1;
    if (!c.is_long()) return false;
    if (c.start != BoundaryPoint{Side::Top, pos, Direction::In}) return false;
    if (c.end != BoundaryPoint{Side::Bottom, pos, Direction::Out}) return false;
  }
  return true;
}

TangleDiagram identity_braid(std::size_t strands) {
  TangleDiagram d;
  d.top = d.bottom = static_cast<int>(strands);
  for (std::size_t i = 0; i < strands; ++i) {
    const int pos = static_cast<int>(i) + 1;
    d.components.push_back(Component::long_strand("S" + std::to_string(pos), {Side::Top, pos, Direction::In},
                                                  {Side::Bottom, pos, Direction::Out}));
  }
  return d;
}

TangleDiagram closure(const TangleDiagram& d) {
  if (!is_string_link(d)) throw std::invalid_argument("closure needs a string link");
  TangleDiagram out = d;
  out.top = out.bottom = 0;
  for (auto& c : out.components) c = Component::closed(c.id, std::move(c.visits));
  return out;
}

namespace {

void fill_vlk_chords(TangleDiagram& d, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("linking counts must be non-negative");
  auto& l1 = d.components[0].visits;
  auto& l2 = d.components[1].visits;
  int label = 1;
  for (int k = 0; k < a; ++k, ++label) {
    auto name = std::to_string(label);
    d.chords.push_back(Chord::classical(name, +1, ChordEnd::A));
    l1.push_back({name, ChordEnd::A});
    l2.push_back({name, ChordEnd::B});
  }
  for (int k = 0; k < b; ++k, ++label) {
    auto name = std::to_string(label);
    d.chords.push_back(Chord::classical(name, -1, ChordEnd::B));
    l1.push_back({name, ChordEnd::A});
    l2.push_back({name, ChordEnd::B});
  }
}

}  // namespace

TangleDiagram gen_vlk_link(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("linking counts must be non-negative");
  TangleDiagram d;
  d.components.push_back(Component::closed("L1"));
  d.components.push_back(Component::closed("L2"));
  fill_vlk_chords(d, a, b);
  return d;
}

TangleDiagram gen_vlk_string_link(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("linking counts must be non-negative");
  TangleDiagram d = identity_braid(2);
  d.components[0].id = "L1";
  d.components[1].id = "L2";
  fill_vlk_chords(d, a, b);
  return d;
}

}  // namespace vtangle
