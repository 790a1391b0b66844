#pragma once

#include <stdexcept>
#include <string>

namespace mcq {

// Group parameters violate one of the defining conditions.
struct condition_error : std::runtime_error {
    explicit condition_error(const std::string& what) : std::runtime_error(what) {}
};

// A verification step (cut property, invariance, homogeneity, ...) failed.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcq
