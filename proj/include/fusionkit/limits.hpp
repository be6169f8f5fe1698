#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

// Resource guards for enumeration and dense-matrix construction.
// Defaults are desk scale; the CLI can override them via flags or the
// FUSIONKIT_MAX_POINTS / FUSIONKIT_MAX_ENTRIES environment variables.
struct Limits {
    int max_points = 12;
    long max_entries = 10'000'000L;
};

class LimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace fusionkit
