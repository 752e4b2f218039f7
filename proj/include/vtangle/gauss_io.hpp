#pragma once

#include "vtangle/diagram.hpp"
#include "vtangle/invariants.hpp"

#include <nlohmann/json_fwd.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace vtangle {

/// 1-based line; columns are 1-based, end exclusive.
struct SourceSpan {
  int line = 1;
  int column_start = 1;
  int column_end = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span);

  const SourceSpan& span() const { return span_; }
  /// Message without the location prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  SourceSpan span_;
};

/// Parses the line-oriented tangle format:
///
///   tangle <m> <n>
///   component <name> closed | long <T|B><i>:in <T|B><j>:out
///   <visits>            O<label>± / U<label>± / S<label>±
///
/// '#' starts a comment. Each label occurs exactly twice; a classical label once
/// as O and once as U, a singular label twice as S. The sign is repeated at
/// both passages; for S it is the frame seen from the first passage.
/// Throws ParseError on the first problem found.
TangleDiagram parse_tangle(std::string_view text);

/// Canonical text; parse_tangle(serialize_tangle(d)) is equal_diagrams to d.
std::string serialize_tangle(const TangleDiagram& d);

nlohmann::json report_to_json(const InvariantReport& report);
std::string report_to_text(const InvariantReport& report);

}  // namespace vtangle
