#pragma once

#include <stdexcept>
#include <string>

namespace eulercert {

// Work refused because it exceeds the configured enumeration budget, as
// opposed to being mathematically invalid. The CLI maps this to its own
// exit code so "too big" is distinguishable from "wrong".
struct capacity_error : std::runtime_error {
    explicit capacity_error(std::string const& what) : std::runtime_error(what) {}
};

}  // namespace eulercert
