#include "vtangle/moves.hpp"

#include "vtangle/errors.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace vtangle {

namespace {

std::optional<VisitLocation> next_visit(const TangleDiagram& d, VisitLocation loc) {
  const auto& comp = d.components[loc.component];
  const std::size_t len = comp.visits.size();
  if (loc.position + 1 < len) return VisitLocation{loc.component, loc.position + 1};
  if (comp.is_closed() && len > 1) return VisitLocation{loc.component, 0};
  return std::nullopt;
}

std::optional<VisitLocation> prev_visit(const TangleDiagram& d, VisitLocation loc) {
  const auto& comp = d.components[loc.component];
  const std::size_t len = comp.visits.size();
  if (loc.position > 0) return VisitLocation{loc.component, loc.position - 1};
  if (comp.is_closed() && len > 1) return VisitLocation{loc.component, len - 1};
  return std::nullopt;
}

bool follows(const TangleDiagram& d, VisitLocation first, VisitLocation second) {
  auto n = next_visit(d, first);
  return n && *n == second;
}

const EndpointRef& visit_at(const TangleDiagram& d, VisitLocation loc) {
  return d.components[loc.component].visits[loc.position];
}

std::size_t gap_count(const Component& c) {
  if (c.is_long()) return c.visits.size() + 1;
  return std::max<std::size_t>(c.visits.size(), 1);
}

Gap normalize(const TangleDiagram& d, Gap g) {
  const auto& comp = d.components[g.component];
  if (comp.is_closed()) g.index = comp.visits.empty() ? 0 : g.index % comp.visits.size();
  return g;
}

void check_gap(const TangleDiagram& d, const Gap& g) {
  if (g.component >= d.components.size() || g.index > d.components[g.component].visits.size()) {
    throw StaleSiteError("gap out of range");
  }
}

std::string fresh_label(const TangleDiagram& d, std::set<std::string>& taken) {
  if (taken.empty()) {
    for (const auto& c : d.chords) taken.insert(c.label);
  }
  for (std::size_t k = 1;; ++k) {
    std::string label = "m" + std::to_string(k);
    if (taken.insert(label).second) return label;
  }
}

bool is_over_visit(const TangleDiagram& d, const DiagramIndex& index, VisitLocation loc) {
  const auto& v = visit_at(d, loc);
  const auto& c = index.chord(v.chord);
  return c.is_classical() && c.over == v.end;
}

bool r1_match(const TangleDiagram& d, const DiagramIndex& index, const std::string& label) {
  const Chord* c = d.find_chord(label);
  if (c == nullptr || !c->is_classical()) return false;
  const auto& loc = index.at(label);
  return follows(d, loc.a, loc.b) || follows(d, loc.b, loc.a);
}

bool r2_match(const TangleDiagram& d, const DiagramIndex& index, const std::string& first, const std::string& second) {
  if (first == second) return false;
  const Chord* c1 = d.find_chord(first);
  const Chord* c2 = d.find_chord(second);
  if (c1 == nullptr || c2 == nullptr || !c1->is_classical() || !c2->is_classical()) return false;
  if (c1->sign != -c2->sign) return false;
  if (!follows(d, index.over_location(first), index.over_location(second))) return false;
  auto u1 = index.under_location(first);
  auto u2 = index.under_location(second);
  return follows(d, u1, u2) || follows(d, u2, u1);
}

enum class R3Pattern { None, Before, After };

R3Pattern r3_match(const TangleDiagram& d, const DiagramIndex& index, const R3Slide& s) {
  if (s.xy == s.xz || s.xy == s.yz || s.xz == s.yz) return R3Pattern::None;
  const Chord* xy = d.find_chord(s.xy);
  const Chord* xz = d.find_chord(s.xz);
  const Chord* yz = d.find_chord(s.yz);
  if (xy == nullptr || xz == nullptr || yz == nullptr) return R3Pattern::None;
  if (!xy->is_classical() || !xz->is_classical() || !yz->is_classical()) return R3Pattern::None;
  if (xy->sign != xz->sign || xz->sign != yz->sign) return R3Pattern::None;
  auto o_xy = index.over_location(s.xy);
  auto u_xy = index.under_location(s.xy);
  auto o_xz = index.over_location(s.xz);
  auto u_xz = index.under_location(s.xz);
  auto o_yz = index.over_location(s.yz);
  auto u_yz = index.under_location(s.yz);
  if (follows(d, o_xy, o_xz) && follows(d, u_xy, o_yz) && follows(d, u_xz, u_yz)) return R3Pattern::Before;
  if (follows(d, o_xz, o_xy) && follows(d, o_yz, u_xy) && follows(d, u_yz, u_xz)) return R3Pattern::After;
  return R3Pattern::None;
}

void erase_chord(TangleDiagram& d, const std::string& label) {
  for (auto& comp : d.components) {
    std::erase_if(comp.visits, [&](const EndpointRef& v) { return v.chord == label; });
  }
  std::erase_if(d.chords, [&](const Chord& c) { return c.label == label; });
}

void insert_visits(TangleDiagram& d, Gap g, const std::vector<EndpointRef>& seq) {
  auto& visits = d.components[g.component].visits;
  visits.insert(visits.begin() + static_cast<std::ptrdiff_t>(g.index), seq.begin(), seq.end());
}

TangleDiagram apply_r1_insert(const TangleDiagram& d, const R1Insert& s) {
  check_gap(d, s.gap);
  if (s.sign != 1 && s.sign != -1) throw StaleSiteError("R1 sign must be +1 or -1");
  TangleDiagram out = d;
  std::set<std::string> taken;
  auto label = fresh_label(d, taken);
  out.chords.push_back(Chord::classical(label, s.sign, s.over_first ? ChordEnd::A : ChordEnd::B));
  insert_visits(out, normalize(d, s.gap), {{label, ChordEnd::A}, {label, ChordEnd::B}});
  return out;
}

TangleDiagram apply_r2_insert(const TangleDiagram& d, const R2Insert& s) {
  check_gap(d, s.over_gap);
  check_gap(d, s.under_gap);
  if (s.first_sign != 1 && s.first_sign != -1) throw StaleSiteError("R2 sign must be +1 or -1");
  TangleDiagram out = d;
  std::set<std::string> taken;
  auto l1 = fresh_label(d, taken);
  auto l2 = fresh_label(d, taken);
  out.chords.push_back(Chord::classical(l1, s.first_sign, ChordEnd::A));
  out.chords.push_back(Chord::classical(l2, -s.first_sign, ChordEnd::A));

  std::vector<EndpointRef> over{{l1, ChordEnd::A}, {l2, ChordEnd::A}};
  std::vector<EndpointRef> under{{l1, ChordEnd::B}, {l2, ChordEnd::B}};
  if (s.antiparallel) std::swap(under[0], under[1]);

  Gap og = normalize(d, s.over_gap);
  Gap ug = normalize(d, s.under_gap);
  if (og == ug) {
    std::vector<EndpointRef> seq = s.under_first ? under : over;
    const auto& tail = s.under_first ? over : under;
    seq.insert(seq.end(), tail.begin(), tail.end());
    insert_visits(out, og, seq);
  } else if (og.component == ug.component && og.index > ug.index) {
    insert_visits(out, og, over);
    insert_visits(out, ug, under);
  } else {
    insert_visits(out, ug, under);
    insert_visits(out, og, over);
  }
  return out;
}

}  // namespace

MoveKind kind_of(const MoveSite& site) {
  return std::visit(
      [](const auto& s) -> MoveKind {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Insert>) return MoveKind::R1Insert;
        else if constexpr (std::is_same_v<T, R1Remove>) return MoveKind::R1Remove;
        else if constexpr (std::is_same_v<T, R2Insert>) return MoveKind::R2Insert;
        else if constexpr (std::is_same_v<T, R2Remove>) return MoveKind::R2Remove;
        else return MoveKind::R3Slide;
      },
      site);
}

std::string describe(const MoveSite& site) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          os << "R1+ gap(" << s.gap.component << "," << s.gap.index << ") sign " << s.sign
             << (s.over_first ? " over-first" : " under-first");
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          os << "R1- " << s.chord;
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          os << "R2+ over(" << s.over_gap.component << "," << s.over_gap.index << ") under(" << s.under_gap.component
             << "," << s.under_gap.index << ") sign " << s.first_sign << (s.antiparallel ? " anti" : " par")
             << (s.under_first ? " under-first" : "");
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          os << "R2- " << s.first << " " << s.second;
        } else {
          os << "R3 " << s.xy << " " << s.xz << " " << s.yz;
        }
      },
      site);
  return os.str();
}

std::vector<MoveSite> enumerate_sites(const TangleDiagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::R1Insert:
      for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        for (std::size_t g = 0; g < gap_count(d.components[ci]); ++g) {
          for (int sign : {1, -1}) {
            for (bool over_first : {true, false}) out.push_back(R1Insert{{ci, g}, sign, over_first});
          }
        }
      }
      break;
    case MoveKind::R1Remove: {
      DiagramIndex index(d);
      for (const auto& c : d.chords) {
        if (r1_match(d, index, c.label)) out.push_back(R1Remove{c.label});
      }
      break;
    }
    case MoveKind::R2Insert: {
      std::vector<Gap> gaps;
      for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        for (std::size_t g = 0; g < gap_count(d.components[ci]); ++g) gaps.push_back({ci, g});
      }
      for (const auto& og : gaps) {
        for (const auto& ug : gaps) {
          for (int sign : {1, -1}) {
            for (bool anti : {false, true}) {
              out.push_back(R2Insert{og, ug, sign, anti, false});
              if (og == ug) out.push_back(R2Insert{og, ug, sign, anti, true});
            }
          }
        }
      }
      break;
    }
    case MoveKind::R2Remove: {
      DiagramIndex index(d);
      std::set<std::pair<std::string, std::string>> seen;
      for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        for (std::size_t p = 0; p < d.components[ci].visits.size(); ++p) {
          VisitLocation here{ci, p};
          auto nxt = next_visit(d, here);
          if (!nxt || !is_over_visit(d, index, here) || !is_over_visit(d, index, *nxt)) continue;
          const auto& first = visit_at(d, here).chord;
          const auto& second = visit_at(d, *nxt).chord;
          if (!r2_match(d, index, first, second)) continue;
          auto key = std::minmax(first, second);
          if (seen.emplace(key.first, key.second).second) out.push_back(R2Remove{first, second});
        }
      }
      break;
    }
    case MoveKind::R3Slide: {
      DiagramIndex index(d);
      std::set<std::tuple<std::string, std::string, std::string>> seen;
      auto consider = [&](const R3Slide& s) {
        if (r3_match(d, index, s) == R3Pattern::None) return;
        if (seen.emplace(s.xy, s.xz, s.yz).second) out.push_back(s);
      };
      for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        for (std::size_t p = 0; p < d.components[ci].visits.size(); ++p) {
          VisitLocation here{ci, p};
          auto nxt = next_visit(d, here);
          if (!nxt || !is_over_visit(d, index, here) || !is_over_visit(d, index, *nxt)) continue;
          const auto& c1 = visit_at(d, here).chord;
          const auto& c2 = visit_at(d, *nxt).chord;
          if (c1 == c2) continue;
          // before pattern: x = O_c1 O_c2 with c1 = xy; yz follows U_xy
          if (auto y = next_visit(d, index.under_location(c1))) consider(R3Slide{c1, c2, visit_at(d, *y).chord});
          // after pattern: x = O_c1 O_c2 with c1 = xz, c2 = xy; yz precedes U_xy
          if (auto y = prev_visit(d, index.under_location(c2))) consider(R3Slide{c2, c1, visit_at(d, *y).chord});
        }
      }
      break;
    }
  }
  return out;
}

TangleDiagram apply(const TangleDiagram& d, const MoveSite& site) {
  return std::visit(
      [&](const auto& s) -> TangleDiagram {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          return apply_r1_insert(d, s);
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          return apply_r2_insert(d, s);
        } else if constexpr (std::is_same_v<T, R1Remove>) {
          if (d.find_chord(s.chord) == nullptr || !r1_match(d, DiagramIndex(d), s.chord)) {
            throw StaleSiteError("no kink at chord " + s.chord);
          }
          TangleDiagram out = d;
          erase_chord(out, s.chord);
          return out;
        } else if constexpr (std::is_same_v<T, R2Remove>) {
          if (d.find_chord(s.first) == nullptr || d.find_chord(s.second) == nullptr ||
              !r2_match(d, DiagramIndex(d), s.first, s.second)) {
            throw StaleSiteError("no R2 pair at chords " + s.first + ", " + s.second);
          }
          TangleDiagram out = d;
          erase_chord(out, s.first);
          erase_chord(out, s.second);
          return out;
        } else {
          for (const auto* l : {&s.xy, &s.xz, &s.yz}) {
            if (d.find_chord(*l) == nullptr) throw StaleSiteError("no R3 triangle: unknown chord " + *l);
          }
          DiagramIndex index(d);
          if (r3_match(d, index, s) == R3Pattern::None) {
            throw StaleSiteError("no R3 triangle at chords " + s.xy + ", " + s.xz + ", " + s.yz);
          }
          TangleDiagram out = d;
          auto swap_at = [&](VisitLocation p, VisitLocation q) {
            std::swap(out.components[p.component].visits[p.position], out.components[q.component].visits[q.position]);
          };
          swap_at(index.over_location(s.xy), index.over_location(s.xz));
          swap_at(index.under_location(s.xy), index.over_location(s.yz));
          swap_at(index.under_location(s.xz), index.under_location(s.yz));
          return out;
        }
      },
      site);
}

namespace {

class Walker {
 public:
  Walker(const TangleDiagram& d, std::size_t steps, std::uint64_t seed, const WalkOptions& options)
      : steps_(steps), options_(options), rng_(seed) {
    walk_.push_back(d);
  }

  std::vector<TangleDiagram> run() {
    if (walk_.front().components.empty()) return walk_;
    while (!done()) step();
    return std::move(walk_);
  }

 private:
  enum class Action { R1In, R1Out, R2In, R2Out, R3, Triangle };

  bool done() const { return walk_.size() > steps_; }
  const TangleDiagram& current() const { return walk_.back(); }

  std::size_t uniform(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return uniform(2) == 1; }
  int random_sign() { return coin() ? 1 : -1; }

  Gap random_gap() {
    const auto& d = current();
    std::size_t total = 0;
    for (const auto& c : d.components) total += gap_count(c);
    std::size_t pick = uniform(total);
    for (std::size_t ci = 0;; ++ci) {
      auto n = gap_count(d.components[ci]);
      if (pick < n) return Gap{ci, pick};
      pick -= n;
    }
  }

  void push(const MoveSite& site) { walk_.push_back(apply(current(), site)); }

  bool try_enumerated(MoveKind kind) {
    auto sites = enumerate_sites(current(), kind);
    if (sites.empty()) return false;
    push(sites[uniform(sites.size())]);
    return true;
  }

  // Two targeted R2 insertions that leave an R3 triangle around an existing
  // classical chord c, followed by the slide itself.
  bool try_triangle() {
    std::vector<std::string> classical;
    for (const auto& c : current().chords) {
      if (c.is_classical()) classical.push_back(c.label);
    }
    if (classical.empty()) return false;
    const std::string c = classical[uniform(classical.size())];
    const int s = current().find_chord(c)->sign;

    VisitLocation o_c = DiagramIndex(current()).over_location(c);
    std::size_t n_before = current().chords.size();
    push(R2Insert{random_gap(), Gap{o_c.component, o_c.position}, -s, false, false});
    const std::string b = current().chords[n_before + 1].label;
    if (done()) return true;

    DiagramIndex idx(current());
    VisitLocation o_b = idx.over_location(b);
    VisitLocation u_c = idx.under_location(c);
    n_before = current().chords.size();
    push(R2Insert{Gap{o_b.component, o_b.position + 1}, Gap{u_c.component, u_c.position}, s, true, false});
    const std::string e = current().chords[n_before].label;
    if (done()) return true;

    push(R3Slide{b, e, c});
    return true;
  }

  void step() {
    const auto chords = current().chords.size();
    const bool room1 = chords + 1 <= options_.chord_cap;
    const bool room2 = chords + 2 <= options_.chord_cap;
    const bool room4 = chords + 4 <= options_.chord_cap;

    // weights: R1In, R1Out, R2In, R2Out, R3, Triangle
    const std::vector<double> weights{room1 ? 2.0 : 0.0, 3.0, room2 ? 3.0 : 0.0, 4.0, 3.0, room4 ? 2.0 : 0.0};
    for (int attempt = 0; attempt < 16; ++attempt) {
      std::discrete_distribution<int> pick(weights.begin(), weights.end());
      switch (static_cast<Action>(pick(rng_))) {
        case Action::R1In:
          push(R1Insert{random_gap(), random_sign(), coin()});
          return;
        case Action::R2In: {
          Gap og = random_gap();
          Gap ug = random_gap();
          bool same = normalize(current(), og) == normalize(current(), ug);
          push(R2Insert{og, ug, random_sign(), coin(), same && coin()});
          return;
        }
        case Action::R1Out:
          if (try_enumerated(MoveKind::R1Remove)) return;
          break;
        case Action::R2Out:
          if (try_enumerated(MoveKind::R2Remove)) return;
          break;
        case Action::R3:
          if (try_enumerated(MoveKind::R3Slide)) return;
          break;
        case Action::Triangle:
          if (try_triangle()) return;
          break;
      }
    }
    // Nothing else applied: fall back to a kink even above the cap.
    push(R1Insert{random_gap(), random_sign(), coin()});
  }

  std::size_t steps_;
  WalkOptions options_;
  std::mt19937_64 rng_;
  std::vector<TangleDiagram> walk_;
};

}  // namespace

std::vector<TangleDiagram> random_walk(const TangleDiagram& d, std::size_t steps, std::uint64_t seed,
                                       const WalkOptions& options) {
  return Walker(d, steps, seed, options).run();
}

}  // namespace vtangle
