#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

// Evaluation hit a pole of a local factor, gamma function or completed L.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// A character was evaluated on an idele with a non-unit component at a
// ramified place (Wilson/t'Hooft coexistence at one place).
struct RamifiedCollision : std::domain_error {
    explicit RamifiedCollision(const std::string& what) : std::domain_error(what) {}
};

// A symbol of residue characteristic equal to the symbol order was requested.
struct WildPlaceError : std::domain_error {
    explicit WildPlaceError(const std::string& what) : std::domain_error(what) {}
};

// An insertion configuration failed validation.
struct ConfigError : std::domain_error {
    explicit ConfigError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace adelic
