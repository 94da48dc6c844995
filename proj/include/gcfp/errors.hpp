#pragma once

#include <stdexcept>
#include <string>

namespace gcfp {

// Invalid inputs, malformed configs, unsatisfiable preconditions.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical hypothesis the caller claimed does not hold on the given data
// (e.g. no reduction index exists, an orbit escapes the domain).
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gcfp
