// Copyright 2026 The twalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWALG_POLYNOMIAL_HPP_
#define TWALG_POLYNOMIAL_HPP_

#include <vector>

#include "twalg/exactla.hpp"
#include "twalg/rational.hpp"

namespace twalg {

// Coefficients from the constant term upward; no trailing zeros.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& p, const Rational& x);
// Quotient and remainder of a / b. Throws std::domain_error if b == 0.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a,
                                         const Polynomial& b);
Polynomial derivative(const Polynomial& p);
// Monic gcd; the zero polynomial if both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
bool is_square_free(const Polynomial& p);
std::string to_string(const Polynomial& p);

// Monic minimal polynomial: the first linear dependency among I, m, m^2, ...
Polynomial minimal_polynomial(const RationalMatrix& m);

// Distinct rational roots of p with |root| <= bound, ascending, found by the
// rational root theorem on the denominator-cleared integer polynomial.
std::vector<Rational> rational_roots(const Polynomial& p,
                                     const Rational& bound);

// Eigenvalues of a diagonalizable rational matrix, ascending.
//
// The matrix is scaled to an integer matrix, whose minimal polynomial is
// monic over the integers, so candidate roots are integer divisors of the
// constant term inside the max-row-sum bound. Throws
// IrrationalEigenvalueError if a root is missing after extraction and
// VerificationError if the minimal polynomial is not square-free.
std::vector<Rational> rational_eigenvalues(const RationalMatrix& m);

}  // namespace twalg

#endif  // TWALG_POLYNOMIAL_HPP_
