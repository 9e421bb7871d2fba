#pragma once

#include <stdexcept>
#include <string>

namespace rlab {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// c ~ 0 for isometric circles, u = 0 or gamma = 0 for the Riley tests
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rlab
