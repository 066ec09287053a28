#ifndef EMK_ERRORS_HPP
#define EMK_ERRORS_HPP

#include <stdexcept>

namespace emk {

// x at/outside the profile's interval, or inside the endpoint margin.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x = 0 or x = -alpha, where the metrics (explicit/induced forms) blow up.
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Classification hypothesis not met (leading coefficient or alpha zero).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Second branch requested with k != 1.
struct BranchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A compactification condition failed; message names the first failed check.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Kahler class with u/v <= 1, or collapsing b -> a.
struct DegenerateClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |trace-free Ricci| below tolerance: F is not determined by the metric.
struct EinsteinPointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Area-ratio involution requested at or below the u/v = 9 threshold.
struct ThresholdError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace emk

#endif  // EMK_ERRORS_HPP
