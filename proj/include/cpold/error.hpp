#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpold {

enum class ErrorKind {
  invalid_input,
  inconsistent_data,
  not_invertible,
  invalid_index,
  not_symmetric,
  invalid_bound,
  out_of_domain,
  empty_fano,
  unsupported_degree,
  unsupported,
  internal_error,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cpold
