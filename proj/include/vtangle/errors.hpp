#pragma once

#include <stdexcept>
#include <string>

namespace vtangle {

/// An invariant that needs classical crossings was given a diagram with double points.
class SingularChordError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two tangles cannot be stacked (boundary count or direction mismatch).
class GluingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move site no longer matches the diagram it is applied to.
class StaleSiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace vtangle
