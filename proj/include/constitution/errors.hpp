#pragma once

#include <stdexcept>
#include <string>

namespace constitution {

// Exit-status mapping used by the CLI: usage/parse = 1, dimension/domain = 2,
// verification mismatch = 3, cycle = 4.

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_error : std::runtime_error {
    explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

struct degenerate_amendment_error : std::runtime_error {
    explicit degenerate_amendment_error(const std::string& what) : std::runtime_error(what) {}
};

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

struct cycle_error : std::runtime_error {
    explicit cycle_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace constitution
