#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace gam {

/// Collects fallback events (tie resolutions, predictor pruning, degenerate
/// statistics) so that a run can report which resolved-ambiguity rules fired.
/// Operations take an optional pointer; nullptr means "don't record".
class DecisionLog {
 public:
  struct Event {
    std::string rule;    // stable identifier, e.g. "median.binary_tie"
    std::string detail;  // human-readable context
  };

  void record(std::string rule, std::string detail);

  std::vector<Event> events() const;
  /// Number of events per rule, ordered by rule name.
  std::map<std::string, std::size_t> counts() const;
  bool empty() const;

 private:
  mutable std::mutex mutex_;
  std::vector<Event> events_;
};

inline void note(DecisionLog* log, std::string rule, std::string detail) {
  if (log != nullptr) log->record(std::move(rule), std::move(detail));
}

}  // namespace gam
