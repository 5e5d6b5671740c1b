#pragma once

#include <stdexcept>
#include <string>

namespace adams {

// Error taxonomy mirrors the CLI exit-code contract:
//   parse_error -> 1, precondition_error -> 2, internal_error -> 3.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Always-on invariant check; violations are engine bugs, never user errors.
#define ADAMS_REQUIRE(cond, msg)                                     \
    do {                                                             \
        if (!(cond)) throw ::adams::internal_error(std::string(msg)); \
    } while (0)

#define ADAMS_PRECONDITION(cond, msg)                                      \
    do {                                                                   \
        if (!(cond)) throw ::adams::precondition_error(std::string(msg)); \
    } while (0)

}  // namespace adams
