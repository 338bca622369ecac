#pragma once

#include "lgskein/braid.hpp"
#include "lgskein/scalar.hpp"

namespace lgs {

// Alexander polynomial of a knot closure from the reduced Burau representation,
// as a Laurent polynomial in t0, normalized symmetric with value 1 at t0 = 1.
Scalar alexander_burau(const BraidWord& w);

// det(I - B) of the reduced Burau matrix B of w, in the variable t0.
Scalar burau_det(const BraidWord& w);

}  // namespace lgs
