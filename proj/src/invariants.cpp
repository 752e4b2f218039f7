#include "vtangle/invariants.hpp"

#include "vtangle/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace vtangle {

namespace {

void require_classical(const TangleDiagram& d, const char* what) {
  for (const auto& c : d.chords) {
    if (c.is_singular()) {
      throw SingularChordError(std::string(what) + ": diagram has singular chord " + c.label);
    }
  }
}

void check_pair(const TangleDiagram& d, std::size_t i, std::size_t j) {
  if (i >= d.components.size() || j >= d.components.size()) {
    throw std::invalid_argument("component index out of range");
  }
  if (i == j) throw std::invalid_argument("linking number needs two distinct components");
}

Exponents unit_exponents(std::size_t n, std::size_t var, int power) {
  Exponents e(n, 0);
  e[var] = power;
  return e;
}

}  // namespace

SmoothSplit smooth_split(const TangleDiagram& d, const std::string& chord) {
  const Chord* c = d.find_chord(chord);
  if (c == nullptr) throw std::invalid_argument("unknown chord '" + chord + "'");
  if (c->is_singular()) throw SingularChordError("cannot smooth singular chord " + chord);
  auto a = d.locate(chord, ChordEnd::A);
  auto b = d.locate(chord, ChordEnd::B);
  if (!a || !b) throw std::invalid_argument("dangling chord " + chord);
  if (a->component != b->component) {
    throw std::invalid_argument("chord " + chord + " joins two components");
  }

  const auto& comp = d.components[a->component];
  const std::size_t len = comp.visits.size();
  SmoothSplit split;
  split.chord = chord;
  split.component = a->component;

  if (comp.is_closed()) {
    for (std::size_t p = (a->position + 1) % len; p != b->position; p = (p + 1) % len) split.piece1.push_back(p);
    for (std::size_t p = (b->position + 1) % len; p != a->position; p = (p + 1) % len) split.piece2.push_back(p);
  } else {
    auto first = std::min(a->position, b->position);
    auto second = std::max(a->position, b->position);
    for (std::size_t p = 0; p < len; ++p) {
      if (p == first || p == second) continue;
      (p > first && p < second ? split.piece2 : split.piece1).push_back(p);
    }
  }
  return split;
}

IndexValue index_of_split(const TangleDiagram& d, const SmoothSplit& split) {
  const auto& comp = d.components.at(split.component);
  std::vector<int> piece(comp.visits.size(), 0);
  for (auto p : split.piece1) piece.at(p) = 1;
  for (auto p : split.piece2) piece.at(p) = 2;

  DiagramIndex index(d);
  int total = 0;
  for (const auto& x : d.chords) {
    if (x.label == split.chord) continue;
    const auto& loc = index.at(x.label);
    if (loc.a.component != split.component || loc.b.component != split.component) continue;
    int pa = piece[loc.a.position];
    int pb = piece[loc.b.position];
    if (pa == 0 || pb == 0 || pa == pb) continue;
    if (x.is_singular()) throw SingularChordError("singular chord " + x.label + " crosses the smoothing");
    int over_piece = x.over == ChordEnd::A ? pa : pb;
    total += over_piece == 1 ? x.sign : -x.sign;
  }
  return IndexValue{total, std::abs(total)};
}

IndexValue intersection_index(const TangleDiagram& d, const std::string& chord) {
  return index_of_split(d, smooth_split(d, chord));
}

LaurentPoly p_sc(const TangleDiagram& d) {
  require_classical(d, "p_sc");
  const std::size_t n = d.components.size();
  LaurentPoly out(n);
  DiagramIndex index(d);
  const Exponents zero(n, 0);
  for (const auto& c : d.chords) {
    const auto& loc = index.at(c.label);
    if (loc.a.component != loc.b.component) continue;
    int power = intersection_index(d, c.label).absolute;
    out.add_term(Rational(c.sign), unit_exponents(n, loc.a.component, power));
    out.add_term(Rational(-c.sign), zero);
  }
  return out;
}

long vlk(const TangleDiagram& d, std::size_t i, std::size_t j) {
  check_pair(d, i, j);
  require_classical(d, "vlk");
  DiagramIndex index(d);
  long total = 0;
  for (const auto& c : d.chords) {
    auto over = index.location(c.label, c.over);
    auto under = index.location(c.label, other(c.over));
    if (over.component == i && under.component == j) total += c.sign;
  }
  return total;
}

long wriggle(const TangleDiagram& d, std::size_t i, std::size_t j) { return vlk(d, i, j) - vlk(d, j, i); }

IntMatrix vlk_matrix(const TangleDiagram& d) {
  require_classical(d, "vlk");
  const std::size_t n = d.components.size();
  IntMatrix m(n, std::vector<long>(n, 0));
  DiagramIndex index(d);
  for (const auto& c : d.chords) {
    auto over = index.location(c.label, c.over);
    auto under = index.location(c.label, other(c.over));
    if (over.component != under.component) m[over.component][under.component] += c.sign;
  }
  return m;
}

IntMatrix wriggle_matrix(const TangleDiagram& d) {
  auto v = vlk_matrix(d);
  IntMatrix w = v;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) w[i][j] = v[i][j] - v[j][i];
  }
  return w;
}

namespace {

enum class CrossTerms { Product, Laurent };

LaurentPoly linking_polynomial(const TangleDiagram& d, const Rational& a, const Rational& b, CrossTerms form) {
  LaurentPoly out = p_sc(d);
  const std::size_t n = d.components.size();
  auto v = vlk_matrix(d);
  Exponents e(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (form == CrossTerms::Product) {
        e[i] = 1;
        e[j] = 1;
        out.add_term(a * Rational(v[i][j]) + b * Rational(v[j][i]), e);
      } else {
        e[i] = 1;
        e[j] = -1;
        out.add_term(a * Rational(v[i][j]), e);
        e[i] = -1;
        e[j] = 1;
        out.add_term(b * Rational(v[j][i]), e);
      }
      e[i] = 0;
      e[j] = 0;
    }
  }
  return out;
}

void require_single(const TangleDiagram& d, ComponentKind kind, const char* what) {
  if (d.components.size() != 1 || d.components.front().kind != kind) {
    throw std::invalid_argument(std::string(what) + " needs exactly one " +
                                (kind == ComponentKind::Closed ? "closed" : "long") + " component");
  }
  require_classical(d, what);
}

}  // namespace

LaurentPoly p_lk(const TangleDiagram& d, const Rational& a, const Rational& b) {
  require_classical(d, "p_lk");
  return linking_polynomial(d, a, b, CrossTerms::Product);
}

LaurentPoly p_lk_L(const TangleDiagram& d, const Rational& a, const Rational& b) {
  require_classical(d, "p_lk_L");
  return linking_polynomial(d, a, b, CrossTerms::Laurent);
}

LaurentPoly henrich_pt(const TangleDiagram& d) {
  require_single(d, ComponentKind::Closed, "henrich_pt");
  LaurentPoly out(1);
  for (const auto& c : d.chords) {
    int power = intersection_index(d, c.label).absolute;
    out.add_term(Rational(c.sign), Exponents{power});
    out.add_term(Rational(-c.sign), Exponents{0});
  }
  return out;
}

LaurentPoly ordered_pt_long(const TangleDiagram& d) {
  require_single(d, ComponentKind::Long, "ordered_pt_long");
  LaurentPoly out(1);
  for (const auto& c : d.chords) {
    int power = intersection_index(d, c.label).signed_value;
    out.add_term(Rational(c.sign), Exponents{power});
    out.add_term(Rational(-c.sign), Exponents{0});
  }
  return out;
}

InvariantReport compute_report(const TangleDiagram& d, const Rational& a, const Rational& b) {
  InvariantReport r;
  r.psc = p_sc(d);
  r.a = a;
  r.b = b;
  r.plk = p_lk(d, a, b);
  r.plkL = p_lk_L(d, a, b);
  r.vlk = vlk_matrix(d);
  r.wriggle = wriggle_matrix(d);
  return r;
}

}  // namespace vtangle
