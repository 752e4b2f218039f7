#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vtangle {

enum class Side { Top, Bottom };
enum class Direction { In, Out };

/// A distinguished point on the boundary of the tangle box.
struct BoundaryPoint {
  Side side = Side::Top;
  int index = 1;  // 1-based along its side
  Direction direction = Direction::In;

  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

/// Which of a chord's two endpoints.
enum class ChordEnd { A, B };

constexpr ChordEnd other(ChordEnd e) { return e == ChordEnd::A ? ChordEnd::B : ChordEnd::A; }

/// One passage of a component through a chord endpoint.
struct EndpointRef {
  std::string chord;
  ChordEnd end = ChordEnd::A;

  friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
};

enum class ComponentKind { Closed, Long };

/// A circle or a long strand. Long strands run from `start` (an In point) to
/// `end` (an Out point); visits are in traversal order, cyclic for circles.
struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::Closed;
  BoundaryPoint start{};
  BoundaryPoint end{};
  std::vector<EndpointRef> visits;

  bool is_closed() const { return kind == ComponentKind::Closed; }
  bool is_long() const { return kind == ComponentKind::Long; }

  static Component closed(std::string id, std::vector<EndpointRef> visits = {});
  static Component long_strand(std::string id, BoundaryPoint start, BoundaryPoint end,
                               std::vector<EndpointRef> visits = {});
};

enum class ChordKind { Classical, Singular };

/// A crossing. Classical chords carry a sign and the over endpoint. Singular
/// chords (double points) carry a frame: the crossing sign obtained when end A
/// is taken as the over strand.
struct Chord {
  std::string label;
  ChordKind kind = ChordKind::Classical;
  int sign = 1;                 // sign (classical) or frame (singular), always +1 or -1
  ChordEnd over = ChordEnd::A;  // classical only

  bool is_classical() const { return kind == ChordKind::Classical; }
  bool is_singular() const { return kind == ChordKind::Singular; }

  static Chord classical(std::string label, int sign, ChordEnd over);
  static Chord singular(std::string label, int frame);
};

/// Position of one chord endpoint: component index and visit index.
struct VisitLocation {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const VisitLocation&, const VisitLocation&) = default;
};

/// Gauss-diagram model of a virtual (m, n) tangle. Virtual crossings are not
/// represented. Component order is the variable order t_1..t_n.
struct TangleDiagram {
  int top = 0;     // m
  int bottom = 0;  // n
  std::vector<Component> components;
  std::vector<Chord> chords;

  const Chord* find_chord(const std::string& label) const;
  Chord* find_chord(const std::string& label);
  std::optional<std::size_t> component_index(const std::string& id) const;

  /// Locates the visit that refers to the given endpoint, if any.
  std::optional<VisitLocation> locate(const std::string& label, ChordEnd end) const;

  std::size_t visit_count() const;
  bool has_singular_chords() const;
};

/// Both endpoint locations of a chord, in terms of ends A and B.
struct ChordLocation {
  VisitLocation a;
  VisitLocation b;
};

/// Lookup table from chord label to endpoint locations; built once per query
/// batch. Assumes a valid diagram.
class DiagramIndex {
 public:
  explicit DiagramIndex(const TangleDiagram& d);

  const ChordLocation& at(const std::string& label) const;
  const Chord& chord(const std::string& label) const;
  VisitLocation location(const std::string& label, ChordEnd end) const;
  /// Location of a classical chord's over endpoint.
  VisitLocation over_location(const std::string& label) const;
  VisitLocation under_location(const std::string& label) const;

 private:
  const TangleDiagram* diagram_;
  std::vector<std::pair<std::string, ChordLocation>> locations_;  // sorted by label
  std::vector<std::pair<std::string, std::size_t>> chord_slots_;  // sorted by label
};

/// Returns every violated invariant, one message per violation; empty means valid.
std::vector<std::string> validate(const TangleDiagram& d);
bool is_valid(const TangleDiagram& d);

/// Equality up to rotation of each closed component's visit list. Labels and
/// component order are significant; A/B naming of chord ends is not.
bool equal_diagrams(const TangleDiagram& lhs, const TangleDiagram& rhs);

/// Reverses the traversal direction of one component. For a long component the
/// start and end points swap and their directions flip. Crossings with other
/// components change sign (frame, for double points); self-crossings do not.
/// Throws std::invalid_argument for an unknown id.
TangleDiagram reverse_component(const TangleDiagram& d, const std::string& component_id);
TangleDiagram reverse_component(const TangleDiagram& d, std::size_t component);

std::string to_string(Side s);
std::string to_string(Direction d);
std::string to_string(const BoundaryPoint& p);

}  // namespace vtangle
