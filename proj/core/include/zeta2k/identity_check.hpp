#pragma once

#include <string>
#include <utility>

#include "zeta2k/rational.hpp"

namespace zeta2k {

// Outcome of one exact identity verification.  Both sides are kept so a
// failure report can show the actual values, not just a boolean.  The params
// string uses ';' between fields (e.g. "n=12;x=1/3") so it stays quote-free
// in CSV output.
struct IdentityCheckResult {
    std::string name;
    std::string params;
    Rational lhs;
    Rational rhs;
    bool pass = false;
};

inline IdentityCheckResult make_identity_check(std::string name, std::string params,
                                               Rational lhs, Rational rhs) {
    bool ok = lhs == rhs;
    return {std::move(name), std::move(params), std::move(lhs), std::move(rhs), ok};
}

// Same idea for identities whose sides are symbolic series rather than single
// rationals; both sides arrive already rendered so reports stay uniform.
struct SeriesIdentityResult {
    std::string name;
    std::string params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

}  // namespace zeta2k
