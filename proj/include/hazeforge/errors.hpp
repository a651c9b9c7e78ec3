#pragma once

#include <stdexcept>
#include <string>

namespace hazeforge {

// Error taxonomy shared by the library and the CLI. Each category maps to a
// stable process exit code so scripted callers can branch on failures.
enum class ErrorCategory {
  internal,    // exit 1
  config,      // exit 3
  shape,       // exit 4
  io,          // exit 5
  pairing,     // exit 6
  format,      // exit 7
  divergence,  // exit 8
};

inline const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::config: return "config";
    case ErrorCategory::shape: return "shape";
    case ErrorCategory::io: return "io";
    case ErrorCategory::pairing: return "pairing";
    case ErrorCategory::format: return "format";
    case ErrorCategory::divergence: return "divergence";
    default: return "internal";
  }
}

inline int category_exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::config: return 3;
    case ErrorCategory::shape: return 4;
    case ErrorCategory::io: return 5;
    case ErrorCategory::pairing: return 6;
    case ErrorCategory::format: return 7;
    case ErrorCategory::divergence: return 8;
    default: return 1;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), cat_(cat) {}
  ErrorCategory category() const { return cat_; }

 private:
  ErrorCategory cat_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(ErrorCategory::config, msg) {}
};

class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(ErrorCategory::shape, msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(ErrorCategory::io, msg) {}
};

class PairingError : public Error {
 public:
  explicit PairingError(const std::string& msg) : Error(ErrorCategory::pairing, msg) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(ErrorCategory::format, msg) {}
};

class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& msg) : Error(ErrorCategory::divergence, msg) {}
};

}  // namespace hazeforge
