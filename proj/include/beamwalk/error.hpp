#pragma once

#include <stdexcept>
#include <string>

namespace beamwalk {

// Exit-code categories used by the CLI: 1 usage, 2 data, 3 numeric divergence, 4 I/O.
enum class ErrorCategory { usage = 1, data = 2, numeric = 3, io = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg) : std::runtime_error(msg), cat_(cat) {}
  ErrorCategory category() const { return cat_; }

 private:
  ErrorCategory cat_;
};

struct UsageError : Error {
  explicit UsageError(const std::string& m) : Error(ErrorCategory::usage, m) {}
};
struct DataError : Error {
  explicit DataError(const std::string& m) : Error(ErrorCategory::data, m) {}
};
struct NumericError : Error {
  explicit NumericError(const std::string& m) : Error(ErrorCategory::numeric, m) {}
};
struct IoError : Error {
  explicit IoError(const std::string& m) : Error(ErrorCategory::io, m) {}
};

}  // namespace beamwalk
