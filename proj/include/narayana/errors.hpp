#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace narayana {

/// Malformed combinatorial input (bad word, bad tableau, bad labeling).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
  ValidationError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " +
                              std::to_string(position) + ")"),
        position_(position), has_position_(true) {}

  bool has_position() const noexcept { return has_position_; }
  /// 1-indexed position of the offending item, when known.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
  bool has_position_ = false;
};

/// An operation defined only for rectangular shapes received another shape.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Mathematically undefined request, e.g. analysis of the zero polynomial.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An enumeration would exceed a configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& limit_name, long long limit,
                 long long requested)
      : std::runtime_error(limit_name + " exceeded: requested " +
                           std::to_string(requested) + ", limit " +
                           std::to_string(limit)),
        limit_(limit), requested_(requested) {}

  long long limit() const noexcept { return limit_; }
  long long requested() const noexcept { return requested_; }

 private:
  long long limit_;
  long long requested_;
};

}  // namespace narayana
