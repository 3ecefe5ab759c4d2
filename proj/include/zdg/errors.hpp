#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

// Invalid mathematical input: n out of range, a not a vertex, (a,b) not an
// edge, unsolvable preconditions. Maps to CLI exit code 1.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Request needs an exhaustive computation but n exceeds the configured
// oracle cap. Maps to CLI exit code 3.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zdg
