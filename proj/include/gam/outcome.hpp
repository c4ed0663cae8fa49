#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace gam {

/// Raised for malformed or inconsistent input files. Carries the location
/// (file, 1-based row and column; 0 when not applicable) in the message.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::string file = {}, std::size_t row = 0,
             std::size_t column = 0);

  const std::string& file() const noexcept { return file_; }
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string file_;
  std::size_t row_;
  std::size_t column_;
};

/// Raised when a computation has no defined answer for its inputs
/// (rank-deficient design, no pairable values, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value that may be undefined for a stated reason. Undefinedness is data,
/// not failure: it propagates into reports as an empty cell.
template <class T>
class Outcome {
 public:
  Outcome() : reason_("not computed") {}

  static Outcome ok(T value) {
    Outcome o;
    o.value_ = std::move(value);
    o.reason_.clear();
    return o;
  }
  static Outcome undefined(std::string reason) {
    Outcome o;
    o.reason_ = std::move(reason);
    return o;
  }

  bool defined() const noexcept { return value_.has_value(); }
  explicit operator bool() const noexcept { return defined(); }

  const T& value() const {
    if (!value_) throw ComputationError("undefined value: " + reason_);
    return *value_;
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const std::optional<T>& optional() const noexcept { return value_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::optional<T> value_;
  std::string reason_;
};

using Real = Outcome<double>;

}  // namespace gam
