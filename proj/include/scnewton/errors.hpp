#pragma once

#include <stdexcept>
#include <string>

namespace scnewton {

// Point lies outside the oracle's domain. Kept distinct from numerical
// breakdown so callers can tell "outside D" from "factorization failed".
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric factorization hit a pivot below the positive-definiteness floor.
class FactorizationError : public std::runtime_error {
public:
    explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

// A simulated trajectory went non-finite or hit a singularity guard.
class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scnewton
