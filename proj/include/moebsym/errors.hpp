#pragma once

#include <stdexcept>

namespace moebsym {

// Input lies outside an operation's domain (wrong region, bad modulus, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Geometrically degenerate configuration: repeated points, identical lines,
// antipodal pairs with no unique midpoint, and the like.
struct degeneracy_error : domain_error {
    using domain_error::domain_error;
};

} // namespace moebsym
