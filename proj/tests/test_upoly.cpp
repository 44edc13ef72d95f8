// Dense univariate kernels: rational arithmetic, resultants, squarefree
// decomposition, the modular layer, and integer polynomial factorization.
#include <doctest.h>

#include "../src/upoly.hpp"

using namespace mmp3;
using namespace mmp3::up;

namespace {

// Coefficients are listed low degree first: qp({1, 0, 1}) is x^2 + 1.
Q qp(std::initializer_list<long> c) {
  Q r;
  for (long v : c) r.push_back(Rat(v));
  return qtrim(std::move(r));
}

bool qeq(const Q& a, std::initializer_list<long> c) { return a == qp(c); }

// Trial-division primality, used as an independent check on the prime stream.
bool is_prime_slow(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldPtr gaussian() {
  return std::make_shared<NumberField>(NumberField{"i", {Rat(1), Rat(0)}});
}

}  // namespace

TEST_SUITE("polyalg") {

TEST_CASE("univariate rational division and gcd") {
  Q cubic = qp({-1, 0, 0, 1});  // x^3 - 1
  auto [q, r] = qdivmod(cubic, qp({-1, 1}));
  CHECK(qeq(q, {1, 1, 1}));
  CHECK(r.empty());

  auto [q2, r2] = qdivmod(qp({1, 0, 1}), qp({1, 1}));  // x^2+1 by x+1
  CHECK(qeq(q2, {-1, 1}));
  CHECK(qeq(r2, {2}));

  CHECK(qeq(qgcd_monic(qp({-1, 0, 1}), qp({1, -2, 1})), {-1, 1}));
  CHECK(qeq(qgcd_monic(qp({1, 0, 1}), qp({-2, 0, 1})), {1}));
  CHECK(qeq(qgcd_monic(qp({0}), qp({2, 2})), {1, 1}));  // gcd(0, 2x+2)
}

TEST_CASE("univariate derivative and evaluation") {
  Q f = qp({0, 2, 0, 1});  // x^3 + 2x
  CHECK(qeq(qderiv(f), {2, 0, 3}));
  CHECK(qeval(f, Rat(2)) == Rat(12));
  CHECK(qeval(qderiv(f), Rat(2)) == Rat(14));
  CHECK(qeval(qp({5}), Rat(100)) == Rat(5));
}

TEST_CASE("univariate resultants") {
  // Res(x^2-2, x^2-3) = prod of (root^2 - 3) over both square roots of 2.
  CHECK(qresultant(qp({-2, 0, 1}), qp({-3, 0, 1})) == Rat(1));
  // Res(x^2+1, x-1) = 1^2 + 1.
  CHECK(qresultant(qp({1, 0, 1}), qp({-1, 1})) == Rat(2));
  // Shared root forces zero.
  CHECK(qresultant(qp({-1, 0, 1}), qp({-1, 1})) == Rat(0));
  // Value pinned against a Sylvester-determinant computation.
  Q f = qp({1, 2, 0, 1});
  Q g = qp({-3, 1, 1});
  CHECK(qresultant(f, g) == Rat(-92));
  // Swap symmetry: Res(g, f) = (-1)^(deg f * deg g) Res(f, g).
  CHECK(qresultant(g, f) == Rat(-92));            // 3*2 even
  CHECK(qresultant(f, qp({-2, 1})) == Rat(-13));  // 3*1 odd, -f(2)
  CHECK(qresultant(qp({-2, 1}), f) == Rat(13));
  // Leading-coefficient scaling: Res(c*f, g) = c^(deg g) Res(f, g).
  CHECK(qresultant(qscale(f, Rat(2)), g) == Rat(4) * qresultant(f, g));
}

TEST_CASE("univariate squarefree decomposition") {
  // (x+1)^2 (x-2)
  Q a = qmul(qmul(qp({1, 1}), qp({1, 1})), qp({-2, 1}));
  auto parts = qsquarefree(a);
  REQUIRE(parts.size() == 2);
  Q prod = qp({1});
  for (auto& [f, m] : parts) {
    CHECK(qdeg(f) >= 1);
    for (int i = 0; i < m; ++i) prod = qmul(prod, f);
  }
  CHECK(prod == a);
  bool saw_double = false;
  for (auto& [f, m] : parts)
    if (m == 2) {
      saw_double = true;
      CHECK(qeq(f, {1, 1}));
    }
  CHECK(saw_double);

  auto pow5 = qsquarefree(qp({0, 0, 0, 0, 0, 1}));  // x^5
  REQUIRE(pow5.size() == 1);
  CHECK(pow5[0].second == 5);
  CHECK(qeq(pow5[0].first, {0, 1}));

  auto flat = qsquarefree(qp({-2, 0, 1}));
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].second == 1);
}

TEST_CASE("prime stream for modular factorization") {
  long long prev = 0;
  for (int n = 0; n < 4; ++n) {
    long long p = nth_prime(n);
    CHECK(p >= 1000003);
    CHECK(p > prev);
    CHECK(is_prime_slow(p));
    // No prime is skipped between consecutive entries.
    for (long long c = prev + 1; prev >= 1000003 && c < p; ++c)
      CHECK_FALSE(is_prime_slow(c));
    prev = p;
  }
  CHECK(nth_prime(0) == 1000003);
}

TEST_CASE("factorization over a word-sized prime field") {
  // x^4 - 1 splits into four linear factors mod 5.
  Z f = {mpz_class(-1), 0, 0, 0, mpz_class(1)};
  auto parts = pfactor(z_mod(f, 5), 5);
  REQUIRE(parts.size() == 4);
  P prod = {1};
  for (auto& g : parts) {
    CHECK(g.size() == 2);
    CHECK(g.back() == 1);  // monic
    prod = pmul(prod, g, 5);
  }
  CHECK(prod == z_mod(f, 5));

  // x^2 + 1 is irreducible mod 7.
  Z g = {mpz_class(1), 0, mpz_class(1)};
  auto one = pfactor(z_mod(g, 7), 7);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 3);

  // Repeated roots are reported with multiplicity: (x-1)^2 (x-2) mod 11.
  Z h = {mpz_class(-2), 5, -4, 1};
  auto rep = pfactor(z_mod(h, 11), 11);
  CHECK(rep.size() == 3);
}

TEST_CASE("integer factorization of squarefree inputs") {
  auto check_split = [](const Q& input, size_t nfactors) {
    Z f = q_to_primitive_z(input);
    auto parts = zfactor_squarefree(f);
    REQUIRE(parts.size() == nfactors);
    Q prod = qp({1});
    for (auto& g : parts) {
      CHECK(g.back() > 0);  // positive leading coefficient
      prod = qmul(prod, z_to_q(g));
    }
    CHECK(q_to_primitive_z(prod) == f);
  };

  // (x^2+1)(x^2-2)(x+3)
  check_split(qmul(qmul(qp({1, 0, 1}), qp({-2, 0, 1})), qp({3, 1})), 3);
  // x^4 + 1 is irreducible over the rationals but splits mod every prime.
  check_split(qp({1, 0, 0, 0, 1}), 1);
  // x^4 - 10x^2 + 1 likewise exercises factor recombination.
  check_split(qp({1, 0, -10, 0, 1}), 1);
  // Non-monic: (2x+3)(3x+5)(x^2+x+1).
  check_split(qmul(qmul(qp({3, 2}), qp({5, 3})), qp({1, 1, 1})), 3);
  // Coefficients past the word size.
  Q big = qmul(qp({1, 100003, 0, 1}), qp({1, -100003, 0, 1}));
  check_split(qmul(big, big.size() ? qp({1}) : qp({1})), 2);
  // Linear times content is restored primitively.
  check_split(qp({6, 10}), 1);
}

TEST_CASE("division and gcd over a number field") {
  FieldPtr F = gaussian();
  Scalar i = Scalar::generator(F);
  Scalar one = Scalar::one(F);
  // x^2 + 1 = (x - i)(x + i)
  S f = {one, Scalar::zero(F), one};
  f[0] = one;
  S d = {-i, one};
  auto [q, r] = sdivmod(f, d);
  CHECK(strim(std::move(r)).empty());
  REQUIRE(q.size() == 2);
  CHECK(q[0] == i);
  CHECK(q[1] == one);

  // gcd(x^2 + 1, (x - i)(x - 2)) = x - i
  S other = smul(d, S{Scalar(-2) + Scalar::zero(F), one});
  S g = sgcd_monic(f, other);
  REQUIRE(g.size() == 2);
  CHECK(g[1] == one);
  CHECK(g[0] == -i);
}

}  // TEST_SUITE
