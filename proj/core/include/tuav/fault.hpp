#pragma once

#include <stdexcept>
#include <string>

namespace tuav {

/// Runtime fault raised by simulation components: singular attitude,
/// non-finite derivatives, malformed configuration, I/O failures.
class Fault : public std::runtime_error {
 public:
  explicit Fault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tuav
