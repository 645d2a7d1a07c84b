#pragma once

#include <stdexcept>
#include <string>

namespace fibcube {

// A configured resource limit was exceeded (vertex caps, bitset width).
// The CLI maps this to exit code 3.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failure: a corrupted isomorphism map, or a set that
// must be independent turning out dependent. Distinct from bad user input.
class IntegrityError : public std::runtime_error {
public:
    explicit IntegrityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fibcube
