#include "gam/decision_log.hpp"
#include "gam/outcome.hpp"

#include <fmt/format.h>

namespace gam {

namespace {

std::string locate(const std::string& what, const std::string& file, std::size_t row,
                   std::size_t column) {
  if (file.empty() && row == 0) return what;
  std::string where = file.empty() ? std::string("<input>") : file;
  if (row > 0) where += fmt::format(":{}", row);
  if (column > 0) where += fmt::format(":{}", column);
  return where + ": " + what;
}

}  // namespace

InputError::InputError(const std::string& what, std::string file, std::size_t row,
                       std::size_t column)
    : std::runtime_error(locate(what, file, row, column)),
      file_(std::move(file)),
      row_(row),
      column_(column) {}

void DecisionLog::record(std::string rule, std::string detail) {
  std::lock_guard lock(mutex_);
  events_.push_back({std::move(rule), std::move(detail)});
}

std::vector<DecisionLog::Event> DecisionLog::events() const {
  std::lock_guard lock(mutex_);
  return events_;
}

std::map<std::string, std::size_t> DecisionLog::counts() const {
  std::lock_guard lock(mutex_);
  std::map<std::string, std::size_t> out;
  for (const auto& e : events_) ++out[e.rule];
  return out;
}

bool DecisionLog::empty() const {
  std::lock_guard lock(mutex_);
  return events_.empty();
}

}  // namespace gam
