#include "vtangle/gauss_io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace vtangle {

ParseError::ParseError(const std::string& message, SourceSpan span)
    : std::runtime_error("line " + std::to_string(span.line) + ", columns " + std::to_string(span.column_start) +
                         "-" + std::to_string(span.column_end) + ": " + message),
      detail_(message),
      span_(span) {}

namespace {

struct Token {
  std::string text;
  SourceSpan span;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
    } else {
      Token t;
      t.span.line = line;
      t.span.column_start = col;
      while (i < text.size() && text[i] != '#' && !std::isspace(static_cast<unsigned char>(text[i]))) {
        t.text.push_back(text[i]);
        ++i;
        ++col;
      }
      t.span.column_end = col;
      tokens.push_back(std::move(t));
    }
  }
  return tokens;
}

bool is_label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return is_label_char(c) || c == '.' || c == '-'; }

enum class Role { Over, Under, Singular };

struct Passage {
  Role role;
  int sign;
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {
    if (!tokens_.empty()) {
      eof_span_ = tokens_.back().span;
      eof_span_.column_start = eof_span_.column_end;
      eof_span_.column_end = eof_span_.column_start + 1;
    }
  }

  TangleDiagram run() {
    const Token& head = expect_word("tangle");
    header_span_ = head.span;
    diagram_.top = parse_count("top point count");
    diagram_.bottom = parse_count("bottom point count");
    while (pos_ < tokens_.size()) parse_component();
    finish();
    return std::move(diagram_);
  }

 private:
  [[noreturn]] void fail(const std::string& message, SourceSpan span) const { throw ParseError(message, span); }

  const Token& next(const char* what) {
    if (pos_ >= tokens_.size()) fail(std::string("unexpected end of input, expected ") + what, eof_span_);
    return tokens_[pos_++];
  }

  const Token& expect_word(const char* word) {
    const Token& t = next(word);
    if (t.text != word) fail(std::string("expected '") + word + "', found '" + t.text + "'", t.span);
    return t;
  }

  int parse_count(const char* what) {
    const Token& t = next(what);
    if (t.text.empty() || t.text.size() > 6 ||
        !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail(std::string("expected ") + what + ", found '" + t.text + "'", t.span);
    }
    return std::stoi(t.text);
  }

  BoundaryPoint parse_point(const Token& t) {
    const auto& s = t.text;
    auto colon = s.find(':');
    if (s.size() < 2 || (s[0] != 'T' && s[0] != 'B') || colon == std::string::npos || colon < 2 || colon > 7) {
      fail("malformed boundary point '" + s + "'", t.span);
    }
    auto digits = s.substr(1, colon - 1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail("malformed boundary point '" + s + "'", t.span);
    }
    auto dir = s.substr(colon + 1);
    if (dir != "in" && dir != "out") fail("boundary direction must be 'in' or 'out' in '" + s + "'", t.span);
    BoundaryPoint p;
    p.side = s[0] == 'T' ? Side::Top : Side::Bottom;
    p.index = std::stoi(digits);
    p.direction = dir == "in" ? Direction::In : Direction::Out;
    const int limit = p.side == Side::Top ? diagram_.top : diagram_.bottom;
    if (p.index < 1 || p.index > limit) fail("boundary point '" + s + "' is out of range", t.span);
    auto [it, inserted] = used_points_.emplace(std::make_pair(p.side, p.index), t.span);
    if (!inserted) fail("boundary point " + to_string(p.side) + std::to_string(p.index) + " is already used", t.span);
    return p;
  }

  void parse_component() {
    expect_word("component");
    const Token& name = next("component name");
    if (name.text.empty() || !std::all_of(name.text.begin(), name.text.end(), is_name_char)) {
      fail("invalid component name '" + name.text + "'", name.span);
    }
    if (!names_.insert(name.text).second) fail("duplicate component name '" + name.text + "'", name.span);

    const Token& kind = next("'closed' or 'long'");
    Component comp;
    if (kind.text == "closed") {
      comp = Component::closed(name.text);
    } else if (kind.text == "long") {
      const Token& st = next("start boundary point");
      BoundaryPoint start = parse_point(st);
      if (start.direction != Direction::In) fail("long component must start at an 'in' point", st.span);
      const Token& en = next("end boundary point");
      BoundaryPoint end = parse_point(en);
      if (end.direction != Direction::Out) fail("long component must end at an 'out' point", en.span);
      comp = Component::long_strand(name.text, start, end);
    } else {
      fail("expected 'closed' or 'long', found '" + kind.text + "'", kind.span);
    }

    const std::size_t ci = diagram_.components.size();
    diagram_.components.push_back(std::move(comp));
    while (pos_ < tokens_.size() && tokens_[pos_].text != "component") {
      parse_visit(tokens_[pos_++], ci);
    }
  }

  void parse_visit(const Token& t, std::size_t ci) {
    const auto& s = t.text;
    if (s.size() < 3 || (s[0] != 'O' && s[0] != 'U' && s[0] != 'S') || (s.back() != '+' && s.back() != '-')) {
      fail("malformed visit '" + s + "'", t.span);
    }
    std::string label = s.substr(1, s.size() - 2);
    if (!std::all_of(label.begin(), label.end(), is_label_char)) fail("malformed chord label in '" + s + "'", t.span);
    Passage p{s[0] == 'O' ? Role::Over : s[0] == 'U' ? Role::Under : Role::Singular, s.back() == '+' ? 1 : -1, t.span};

    auto& seen = passages_[label];
    if (seen.empty()) order_.push_back(label);
    if (seen.size() == 2) fail("chord " + label + " appears more than twice", t.span);
    if (seen.size() == 1) {
      const Passage& first = seen.front();
      const bool first_singular = first.role == Role::Singular;
      const bool this_singular = p.role == Role::Singular;
      if (first_singular != this_singular) {
        fail("chord " + label + " mixes singular and classical passages", t.span);
      }
      if (!this_singular && first.role == p.role) {
        fail("chord " + label + " needs one O and one U passage", t.span);
      }
      if (first.sign != p.sign) fail("sign mismatch for chord " + label, t.span);
    }
    seen.push_back(p);
    auto end = seen.size() == 1 ? ChordEnd::A : ChordEnd::B;
    diagram_.components[ci].visits.push_back({label, end});
  }

  void finish() {
    for (const auto& label : order_) {
      const auto& seen = passages_.at(label);
      if (seen.size() != 2) fail("dangling chord " + label, seen.front().span);
      const Passage& first = seen.front();
      if (first.role == Role::Singular) {
        diagram_.chords.push_back(Chord::singular(label, first.sign));
      } else {
        diagram_.chords.push_back(
            Chord::classical(label, first.sign, first.role == Role::Over ? ChordEnd::A : ChordEnd::B));
      }
    }
    for (auto side : {Side::Top, Side::Bottom}) {
      const int limit = side == Side::Top ? diagram_.top : diagram_.bottom;
      for (int i = 1; i <= limit; ++i) {
        if (!used_points_.contains({side, i})) {
          fail("boundary point " + to_string(side) + std::to_string(i) + " is not an endpoint of any component",
               header_span_);
        }
      }
    }
    auto problems = validate(diagram_);
    if (!problems.empty()) fail(problems.front(), header_span_);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  SourceSpan eof_span_{1, 1, 2};
  SourceSpan header_span_{};
  TangleDiagram diagram_;
  std::set<std::string> names_;
  std::map<std::pair<Side, int>, SourceSpan> used_points_;
  std::map<std::string, std::vector<Passage>> passages_;
  std::vector<std::string> order_;
};

}  // namespace

TangleDiagram parse_tangle(std::string_view text) { return Parser(text).run(); }

std::string serialize_tangle(const TangleDiagram& d) {
  std::ostringstream os;
  os << "tangle " << d.top << ' ' << d.bottom << '\n';

  // A singular chord's frame is written as seen from its first passage in the file.
  std::map<std::string, ChordEnd> first_end;
  for (const auto& comp : d.components) {
    for (const auto& v : comp.visits) first_end.try_emplace(v.chord, v.end);
  }

  for (const auto& comp : d.components) {
    os << "component " << comp.id;
    if (comp.is_closed()) {
      os << " closed\n";
    } else {
      os << " long " << to_string(comp.start) << ' ' << to_string(comp.end) << '\n';
    }
    if (comp.visits.empty()) continue;
    bool first = true;
    for (const auto& v : comp.visits) {
      const Chord* c = d.find_chord(v.chord);
      if (c == nullptr) throw std::invalid_argument("serialize: unknown chord " + v.chord);
      if (!first) os << ' ';
      first = false;
      int sign = c->sign;
      if (c->is_singular()) {
        os << 'S';
        if (first_end.at(v.chord) == ChordEnd::B) sign = -sign;
      } else {
        os << (v.end == c->over ? 'O' : 'U');
      }
      os << v.chord << (sign > 0 ? '+' : '-');
    }
    os << '\n';
  }
  return os.str();
}

nlohmann::json report_to_json(const InvariantReport& report) {
  nlohmann::json j;
  j["psc"] = to_json(report.psc);
  j["plk"] = {{"a", report.a.str()}, {"b", report.b.str()}, {"value", to_json(report.plk)}};
  j["plkL"] = {{"a", report.a.str()}, {"b", report.b.str()}, {"value", to_json(report.plkL)}};
  j["vlk"] = report.vlk;
  j["wriggle"] = report.wriggle;
  return j;
}

namespace {

void write_matrix(std::ostringstream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << ' ';
    for (std::size_t j = 0; j < m.size(); ++j) {
      os << ' ';
      if (i == j) {
        os << '.';
      } else {
        os << m[i][j];
      }
    }
    os << '\n';
  }
}

}  // namespace

std::string report_to_text(const InvariantReport& report) {
  std::ostringstream os;
  const std::string ab = "(a=" + report.a.str() + ", b=" + report.b.str() + ")";
  os << "psc: " << render_canonical(report.psc) << '\n';
  os << "plk " << ab << ": " << render_canonical(report.plk) << '\n';
  os << "plkL " << ab << ": " << render_canonical(report.plkL) << '\n';
  os << "vlk:\n";
  write_matrix(os, report.vlk);
  os << "wriggle:\n";
  write_matrix(os, report.wriggle);
  return os.str();
}

}  // namespace vtangle
