#pragma once
// dense univariate polynomial kernels used by the factorization stack.
// coefficient vectors store low degree first and carry no trailing zeros.
#include <utility>
#include <vector>

#include "mmp3/scalar.hpp"

namespace mmp3::up {

using Q = std::vector<Rat>;        // over the rationals
using Z = std::vector<mpz_class>;  // over the integers
using P = std::vector<long long>;  // modulo a word-sized prime
using S = std::vector<Scalar>;     // over the session number field

// --- rational layer ---
Q qtrim(Q a);
int qdeg(const Q& a);  // -1 for zero
Q qadd(const Q& a, const Q& b);
Q qsub(const Q& a, const Q& b);
Q qmul(const Q& a, const Q& b);
Q qscale(const Q& a, const Rat& c);
std::pair<Q, Q> qdivmod(const Q& a, const Q& b);
Q qgcd_monic(Q a, Q b);
Q qderiv(const Q& a);
Rat qeval(const Q& a, const Rat& v);
Q qmonic(Q a);
Rat qresultant(Q a, Q b);

// squarefree decomposition (Yun): list of (factor, multiplicity) with
// pairwise coprime squarefree factors whose weighted product is a/lc
std::vector<std::pair<Q, int>> qsquarefree(const Q& a);

// --- integer layer ---
Z q_to_primitive_z(const Q& a);  // clear denominators, strip content, lc > 0
Q z_to_q(const Z& a);
mpz_class z_maxabs(const Z& a);

// --- modular layer (p an odd word prime) ---
P z_mod(const Z& a, long long p);
P pmul(const P& a, const P& b, long long p);
P psub(const P& a, const P& b, long long p);
std::pair<P, P> pdivmod(const P& a, const P& b, long long p);
P pgcd_monic(P a, P b, long long p);
P pmonic(P a, long long p);
P ppowmod(P base, mpz_class e, const P& mod, long long p);
long long pinv(long long a, long long p);

// monic squarefree input: complete factorization into monic irreducibles
std::vector<P> pfactor(const P& f, long long p);

// deterministic stream of odd primes for modular work
long long nth_prime(int n);

// --- quadratic-free integer factorization (Zassenhaus) ---
// input: primitive squarefree integer polynomial, positive leading
// coefficient, degree >= 1.  output: its irreducible integer factors.
std::vector<Z> zfactor_squarefree(const Z& f);

// --- number-field layer ---
S strim(S a);
int sdeg(const S& a);
S smul(const S& a, const S& b);
S ssub(const S& a, const S& b);
std::pair<S, S> sdivmod(const S& a, const S& b);
S sgcd_monic(S a, S b);
S sderiv(const S& a);
S smonic(S a);

}  // namespace mmp3::up
