#pragma once
#include <stdexcept>
#include <string>

namespace oiv {

// Error taxonomy mirrors the CLI exit codes: usage problems exit 1, violated
// preconditions exit 2, internal exactness failures exit 3.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

struct integrity_error : std::runtime_error {
  explicit integrity_error(const std::string& m) : std::runtime_error(m) {}
};

inline void require(bool ok, const std::string& m) {
  if (!ok) throw precondition_error(m);
}

// For conditions that can only fail through an implementation bug.
inline void ensure(bool ok, const std::string& m) {
  if (!ok) throw integrity_error(m);
}

}  // namespace oiv
