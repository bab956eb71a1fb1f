#pragma once

#include "xilab/real.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace testing {

using xilab::Real;

inline Real rel_err(const Real& got, const Real& want) {
    const Real d = abs(got - want);
    return want == 0 ? d : Real(d / abs(want));
}

inline Real rel_err(const std::string& got_text, const Real& want) { return rel_err(Real(got_text), want); }

/// max relative error, entries given as decimal strings
inline Real max_rel_err(const std::vector<Real>& got, const std::vector<const char*>& want) {
    Real m(0);
    for (std::size_t i = 0; i < want.size(); ++i) m = std::max(m, rel_err(got.at(i), Real(want[i])));
    return m;
}

}  // namespace testing

#define REQUIRE_REL(got, want, tol) REQUIRE(::testing::rel_err((got), (want)) < (tol))
