// Bivariate polynomials over the rationals, represented densely: B[i] is the
// coefficient (a univariate rational polynomial in the secondary variable x)
// of the i-th power of the main variable y.  This is the working
// representation for bivariate factorization, which proceeds by evaluating at
// a good point of the secondary variable, factoring the resulting univariate
// polynomial, lifting the factors back, and recombining.
#pragma once

#include <utility>
#include <vector>

#include "upoly.hpp"

namespace mmp3::bivar {

using up::Q;
using B = std::vector<Q>;

B btrim(B a);
int bdeg(const B& a);  // degree in the main variable, -1 for zero
int bxdeg(const B& a);  // degree in the secondary variable
B badd(const B& a, const B& b);
B bsub(const B& a, const B& b);
B bmul(const B& a, const B& b);
B bscale(const B& a, const Q& c);  // multiply every coefficient by c
B bderiv(const B& a);              // derivative in the main variable

// Exact division in Q[x][y]; returns false (and leaves *quot untouched) when
// the division leaves a remainder.
bool btry_divide(const B& a, const B& b, B* quot);

Q bcontent(const B& a);    // monic gcd of the coefficients, 0 for 0
B bprimitive(const B& a);  // a divided by its content

// Primitive gcd via a pseudo-remainder sequence with content stripping.
B bgcd(B a, B b);

// Complete factorization of a primitive squarefree polynomial with positive
// degree in both variables.  Factors are primitive with rational-normalized
// content; their product equals the input up to a nonzero rational.
std::vector<B> bfactor_squarefree(const B& f);

}  // namespace mmp3::bivar
