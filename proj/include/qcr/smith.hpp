#pragma once

#include <vector>

#include "qcr/matrix.hpp"
#include "qcr/polynomial.hpp"

namespace qcr {

/// Invariant factors of a polynomial matrix over Q(i)[zeta]: the nonzero
/// diagonal entries of its Smith normal form, monic, each dividing the next.
/// The list length is the rank over Q(i)(zeta).
std::vector<Polynomial> smith_normal_form(const Matrix<Polynomial>& m);

}  // namespace qcr
