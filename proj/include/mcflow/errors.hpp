#pragma once

#include <stdexcept>
#include <string>

namespace mcflow {

// Thrown when a state fails thermodynamic recovery (negative sound-speed
// radicand, gamma <= 1, non-positive density) or a scheme produces a
// non-finite value. The message carries the cell/face location when the
// solver is the one aborting.
class UnphysicalStateError : public std::runtime_error {
public:
    explicit UnphysicalStateError(const std::string& what)
        : std::runtime_error(what) {}
};

class UnknownCaseError : public std::invalid_argument {
public:
    explicit UnknownCaseError(const std::string& what)
        : std::invalid_argument(what) {}
};

}  // namespace mcflow
