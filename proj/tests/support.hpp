#pragma once

#include <doctest.h>

#include "qselberg/params.hpp"

namespace qstest {

using qselberg::cplx;

inline double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

#define CHECK_CLOSE(got, want, tol) CHECK(qstest::rel((got), (want)) <= (tol))

} // namespace qstest
