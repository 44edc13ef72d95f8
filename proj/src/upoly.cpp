#include "upoly.hpp"

#include <algorithm>

#include "mmp3/budget.hpp"
#include "mmp3/error.hpp"

namespace mmp3::up {

// ---------- rational layer ----------

Q qtrim(Q a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int qdeg(const Q& a) { return static_cast<int>(a.size()) - 1; }

Q qadd(const Q& a, const Q& b) {
  Q r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return qtrim(std::move(r));
}

Q qsub(const Q& a, const Q& b) {
  Q r(std::max(a.size(), b.size()), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return qtrim(std::move(r));
}

Q qmul(const Q& a, const Q& b) {
  if (a.empty() || b.empty()) return {};
  Q r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qtrim(std::move(r));
}

Q qscale(const Q& a, const Rat& c) {
  if (c == 0) return {};
  Q r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Q, Q> qdivmod(const Q& a, const Q& b) {
  require(!b.empty(), errc::internal, "univariate division by zero");
  Q rem = a, quo;
  if (a.size() >= b.size()) {
    quo.assign(a.size() - b.size() + 1, Rat(0));
    Rat inv = 1 / b.back();
    for (size_t sh = quo.size(); sh-- > 0;) {
      Rat c = rem[sh + b.size() - 1] * inv;
      if (c == 0) continue;
      quo[sh] = c;
      for (size_t i = 0; i < b.size(); ++i) rem[sh + i] -= c * b[i];
    }
  }
  return {qtrim(std::move(quo)), qtrim(std::move(rem))};
}

Q qmonic(Q a) {
  if (a.empty()) return a;
  Rat inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

Q qgcd_monic(Q a, Q b) {
  a = qtrim(std::move(a));
  b = qtrim(std::move(b));
  while (!b.empty()) {
    Q r = qdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(std::move(a));
}

Q qderiv(const Q& a) {
  if (a.size() <= 1) return {};
  Q r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rat(static_cast<long>(i));
  return qtrim(std::move(r));
}

Rat qeval(const Q& a, const Rat& v) {
  Rat r(0);
  for (size_t i = a.size(); i-- > 0;) r = r * v + a[i];
  return r;
}

Rat qresultant(Q a, Q b) {
  // Euclidean remainder sequence with the standard degree/lead bookkeeping
  a = qtrim(std::move(a));
  b = qtrim(std::move(b));
  if (a.empty() || b.empty()) return Rat(0);
  Rat res(1);
  bool neg = false;
  while (true) {
    int da = qdeg(a), db = qdeg(b);
    if (db == 0) {
      Rat lb = b.back();
      Rat p = 1;
      for (int i = 0; i < da; ++i) p *= lb;
      res *= p;
      break;
    }
    Q r = qdivmod(a, b).second;
    if (r.empty()) return Rat(0);
    int dr = qdeg(r);
    // res(a,b) = (-1)^{da*db} lc(b)^{da-dr} res(b,r)
    if ((da & 1) && (db & 1)) neg = !neg;
    Rat lb = b.back();
    Rat p = 1;
    for (int i = 0; i < da - dr; ++i) p *= lb;
    res *= p;
    a = std::move(b);
    b = std::move(r);
  }
  return neg ? -res : res;
}

std::vector<std::pair<Q, int>> qsquarefree(const Q& a0) {
  std::vector<std::pair<Q, int>> out;
  Q a = qmonic(qtrim(a0));
  if (qdeg(a) < 1) return out;
  // Yun's algorithm in characteristic zero
  Q d = qderiv(a);
  Q g = qgcd_monic(a, d);
  Q c = qdivmod(a, g).first;
  Q w = qdivmod(d, g).first;
  int mult = 1;
  while (qdeg(c) > 0) {
    Q y = qsub(w, qderiv(c));
    Q f = qgcd_monic(c, y);
    if (qdeg(f) > 0) out.push_back({f, mult});
    c = qdivmod(c, f).first;
    w = qdivmod(y, f).first;
    ++mult;
  }
  return out;
}

// ---------- integer layer ----------

Z q_to_primitive_z(const Q& a) {
  mpz_class den(1);
  for (const auto& c : a) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  Z r(a.size());
  mpz_class content(0);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i].get_num() * (den / a[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[i].get_mpz_t());
  }
  if (content != 0)
    for (auto& c : r) c /= content;
  if (!r.empty() && r.back() < 0)
    for (auto& c : r) c = -c;
  return r;
}

Q z_to_q(const Z& a) {
  Q r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return qtrim(std::move(r));
}

mpz_class z_maxabs(const Z& a) {
  mpz_class m(0);
  for (const auto& c : a) {
    mpz_class v = abs(c);
    if (v > m) m = v;
  }
  return m;
}

// ---------- modular layer ----------

namespace {
// gmpxx has no long long overloads; long is 64-bit on every target we build.
static_assert(sizeof(long) == sizeof(long long), "64-bit long required");
mpz_class zll(long long v) { return mpz_class(static_cast<long>(v)); }

P ptrim(P a, long long p) {
  for (auto& c : a) c = ((c % p) + p) % p;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
}  // namespace

P z_mod(const Z& a, long long p) {
  P r(a.size());
  mpz_class q = zll(p);
  for (size_t i = 0; i < a.size(); ++i) {
    mpz_class m = a[i] % q;
    if (m < 0) m += q;
    r[i] = m.get_si();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

long long pinv(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  require(r == 1, errc::internal, "modular inverse does not exist");
  return ((t % p) + p) % p;
}

P pmul(const P& a, const P& b, long long p) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

P psub(const P& a, const P& b, long long p) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
  return ptrim(std::move(r), p);
}

std::pair<P, P> pdivmod(const P& a, const P& b, long long p) {
  require(!b.empty(), errc::internal, "modular division by zero");
  P rem = a, quo;
  if (a.size() >= b.size()) {
    quo.assign(a.size() - b.size() + 1, 0);
    long long inv = pinv(b.back(), p);
    for (size_t sh = quo.size(); sh-- > 0;) {
      long long c = rem[sh + b.size() - 1] % p * inv % p;
      if (c == 0) continue;
      quo[sh] = c;
      for (size_t i = 0; i < b.size(); ++i)
        rem[sh + i] = ((rem[sh + i] - c * b[i]) % p + p) % p;
    }
  }
  return {ptrim(std::move(quo), p), ptrim(std::move(rem), p)};
}

P pmonic(P a, long long p) {
  a = ptrim(std::move(a), p);
  if (a.empty()) return a;
  long long inv = pinv(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

P pgcd_monic(P a, P b, long long p) {
  a = ptrim(std::move(a), p);
  b = ptrim(std::move(b), p);
  while (!b.empty()) {
    P r = pdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a), p);
}

P ppowmod(P base, mpz_class e, const P& mod, long long p) {
  P r = {1};
  base = pdivmod(base, mod, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      r = pdivmod(pmul(r, base, p), mod, p).second;
    e >>= 1;
    if (e > 0) base = pdivmod(pmul(base, base, p), mod, p).second;
  }
  return r;
}

namespace {

P pderiv(const P& a, long long p) {
  if (a.size() <= 1) return {};
  P r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = static_cast<long long>(i) % p * (a[i] % p) % p;
  return ptrim(std::move(r), p);
}

// deterministic pseudo-random coefficients for equal-degree splitting
struct SplitRng {
  unsigned long long s = 0x9e3779b97f4a7c15ull;
  long long next(long long p) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return static_cast<long long>(s % static_cast<unsigned long long>(p));
  }
};

// equal-degree splitting of a monic product of degree-d irreducibles
void equal_degree(const P& f, int d, long long p, SplitRng& rng,
                  std::vector<P>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  check_deadline();
  // random r, then gcd(r^((p^d-1)/2) - 1, f) splits with probability ~1/2
  for (;;) {
    P r(n, 0);
    for (auto& c : r) c = rng.next(p);
    r = ptrim(std::move(r), p);
    if (r.empty()) continue;
    mpz_class e = 1;
    for (int i = 0; i < d; ++i) e *= zll(p);
    e = (e - 1) / 2;
    P t = ppowmod(r, e, f, p);
    if (t.empty()) continue;
    t[0] = (t[0] - 1 + p) % p;
    t = ptrim(std::move(t), p);
    if (t.empty()) continue;
    P g = pgcd_monic(t, f, p);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(pdivmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<P> pfactor(const P& f0, long long p) {
  std::vector<P> out;
  P f = pmonic(f0, p);
  require(!f.empty(), errc::internal, "modular factorization of zero");
  SplitRng rng;
  // distinct-degree decomposition
  P x = {0, 1};
  P h = x;
  int d = 0;
  while (static_cast<int>(f.size()) - 1 >= 2 * (d + 1)) {
    ++d;
    h = ppowmod(h, zll(p), f, p);
    P g = pgcd_monic(psub(h, x, p), f, p);
    if (static_cast<int>(g.size()) - 1 > 0) {
      equal_degree(g, d, p, rng, out);
      f = pdivmod(f, g, p).first;
      h = pdivmod(h, f, p).second;
    }
  }
  if (static_cast<int>(f.size()) - 1 > 0) out.push_back(f);
  return out;
}

long long nth_prime(int n) {
  // deterministic odd primes starting above one million
  long long c = 1000003;
  int seen = 0;
  for (;; c += 2) {
    bool prime = true;
    for (long long d = 3; d * d <= c; d += 2)
      if (c % d == 0) {
        prime = false;
        break;
      }
    if (prime) {
      if (seen == n) return c;
      ++seen;
    }
  }
}

// ---------- Zassenhaus ----------

namespace {

Z z_scale_mod(const Z& a, const mpz_class& m) {
  // symmetric remainder in (-m/2, m/2]
  Z r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    mpz_class v = a[i] % m;
    if (v < 0) v += m;
    if (2 * v > m) v -= m;
    r[i] = v;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Z p_to_z(const P& a) {
  Z r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = zll(a[i]);
  return r;
}

Z z_primitive(Z a) {
  mpz_class content(0);
  for (const auto& c : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (auto& c : a) c /= content;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

Z zmul(const Z& a, const Z& b) {
  if (a.empty() || b.empty()) return {};
  Z r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

bool z_try_divide(const Z& a, const Z& b, Z* quo) {
  // exact division test in Z[x]
  if (b.empty()) return false;
  Z rem = a, q;
  if (a.size() < b.size()) return a.empty();
  q.assign(a.size() - b.size() + 1, mpz_class(0));
  for (size_t sh = q.size(); sh-- > 0;) {
    mpz_class num = rem[sh + b.size() - 1];
    if (num % b.back() != 0) return false;
    mpz_class c = num / b.back();
    q[sh] = c;
    if (c != 0)
      for (size_t i = 0; i < b.size(); ++i) rem[sh + i] -= c * b[i];
  }
  for (const auto& c : rem)
    if (c != 0) return false;
  if (quo) {
    while (!q.empty() && q.back() == 0) q.pop_back();
    *quo = std::move(q);
  }
  return true;
}

// multifactor linear Hensel lifting of f = b * prod(monic g_i) from mod p to
// mod p^k, with the g_i pairwise coprime mod p
std::vector<Z> hensel(const Z& f, const std::vector<P>& g0, long long p, int k) {
  size_t r = g0.size();
  // Bezout data: u_i = inverse of prod_{j != i} g_j modulo g_i, mod p
  std::vector<P> u(r);
  for (size_t i = 0; i < r; ++i) {
    P prod = {1};
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = pdivmod(pmul(prod, g0[j], p), g0[i], p).second;
    // invert prod modulo g0[i] via extended Euclid in F_p[x]
    P a = g0[i], b = prod, t0 = {}, t1 = {1};
    while (!b.empty()) {
      auto [q, rr] = pdivmod(a, b, p);
      P nt = psub(t0, pmul(q, t1, p), p);
      a = std::move(b);
      b = std::move(rr);
      t0 = std::move(t1);
      t1 = std::move(nt);
    }
    require(a.size() == 1, errc::internal, "lifting inputs are not coprime");
    long long inv = pinv(a[0], p);
    for (auto& c : t0) c = c * inv % p;
    u[i] = pdivmod(t0, g0[i], p).second;
  }

  std::vector<Z> g(r);
  for (size_t i = 0; i < r; ++i) g[i] = p_to_z(g0[i]);
  mpz_class lc = f.back();
  const mpz_class zp = zll(p);
  mpz_class pj = zp;  // current modulus
  mpz_class lcres = lc % zp;
  if (lcres < 0) lcres += zp;
  long long binv_ll = pinv(lcres.get_si(), p);

  for (int step = 1; step < k; ++step) {
    check_deadline();
    // e = (f - b*prod g_i) / p^step  (exact), reduced mod p
    Z prod = {lc};
    for (size_t i = 0; i < r; ++i) prod = zmul(prod, g[i]);
    Z e(std::max(f.size(), prod.size()), mpz_class(0));
    for (size_t i = 0; i < f.size(); ++i) e[i] = f[i];
    for (size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& c : e) {
      require(c % pj == 0, errc::internal, "lifting drifted off the target");
      c /= pj;
    }
    P ebar = z_mod(e, p);
    for (auto& c : ebar) c = c * binv_ll % p;
    // distribute the correction: c_i = ebar * u_i mod g_i
    for (size_t i = 0; i < r; ++i) {
      P ci = pdivmod(pmul(ebar, u[i], p), g0[i], p).second;
      Z zc = p_to_z(ci);
      if (g[i].size() < zc.size()) g[i].resize(zc.size(), mpz_class(0));
      for (size_t t = 0; t < zc.size(); ++t) g[i][t] += pj * zc[t];
    }
    pj *= zp;
  }
  return g;
}

}  // namespace

std::vector<Z> zfactor_squarefree(const Z& f) {
  int n = static_cast<int>(f.size()) - 1;
  require(n >= 1, errc::internal, "factorization needs positive degree");
  if (n == 1) return {f};

  // choose a prime keeping f squarefree with unchanged degree
  long long p = 0;
  P fp;
  for (int i = 0; i < 64; ++i) {
    long long cand = nth_prime(i);
    if (mpz_divisible_ui_p(f.back().get_mpz_t(),
                           static_cast<unsigned long>(cand)))
      continue;
    P g = z_mod(f, cand);
    P gp = pderiv(g, cand);
    if (gp.empty()) continue;
    P d = pgcd_monic(g, gp, cand);
    if (d.size() == 1) {
      p = cand;
      fp = std::move(g);
      break;
    }
  }
  require(p != 0, errc::factorization_failure,
          "no suitable prime for modular factorization");

  std::vector<P> mods = pfactor(fp, p);
  std::sort(mods.begin(), mods.end());
  if (mods.size() == 1) return {f};

  // Mignotte-style bound: factors of f have coefficients bounded by
  // 2^n * sqrt(n+1) * maxabs(f) * |lc(f)|
  mpz_class bound = z_maxabs(f) * abs(f.back());
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  bound *= two_n;
  mpz_class sq;
  mpz_sqrt(sq.get_mpz_t(), mpz_class(n + 1).get_mpz_t());
  bound *= (sq + 1);
  int k = 1;
  mpz_class pk = zll(p);
  while (pk <= 2 * bound) {
    pk *= zll(p);
    ++k;
  }

  std::vector<Z> lifted = hensel(f, mods, p, k);

  // subset recombination
  std::vector<Z> out;
  Z rest = f;
  std::vector<int> pool(lifted.size());
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);

  auto try_subsets = [&](auto&& self, int card) -> bool {
    if (card > static_cast<int>(pool.size())) return false;
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    for (;;) {
      check_deadline();
      Z cand = {rest.back()};
      for (int i : idx) cand = zmul(cand, lifted[pool[i]]);
      cand = z_primitive(z_scale_mod(cand, pk));
      Z quo;
      if (static_cast<int>(cand.size()) - 1 >= 1 && z_try_divide(rest, cand, &quo)) {
        out.push_back(cand);
        rest = z_primitive(std::move(quo));
        std::vector<int> np;
        for (size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end())
            np.push_back(pool[i]);
        pool = std::move(np);
        return true;
      }
      // next combination
      int i = card - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - card + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    (void)self;
  };

  for (int card = 1; card <= static_cast<int>(pool.size()) / 2;) {
    if (static_cast<int>(pool.size()) == 0) break;
    if (try_subsets(try_subsets, card)) continue;  // retry same cardinality
    ++card;
  }
  if (static_cast<int>(rest.size()) - 1 >= 1) out.push_back(rest);
  return out;
}

// ---------- number-field layer ----------

S strim(S a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

int sdeg(const S& a) { return static_cast<int>(a.size()) - 1; }

S smul(const S& a, const S& b) {
  if (a.empty() || b.empty()) return {};
  S r(a.size() + b.size() - 1, Scalar());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return strim(std::move(r));
}

S ssub(const S& a, const S& b) {
  S r(std::max(a.size(), b.size()), Scalar());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return strim(std::move(r));
}

std::pair<S, S> sdivmod(const S& a, const S& b) {
  require(!b.empty(), errc::internal, "univariate division by zero");
  S rem = a, quo;
  if (a.size() >= b.size()) {
    quo.assign(a.size() - b.size() + 1, Scalar());
    Scalar inv = b.back().inverse();
    for (size_t sh = quo.size(); sh-- > 0;) {
      Scalar c = rem[sh + b.size() - 1] * inv;
      if (c.is_zero()) continue;
      quo[sh] = c;
      for (size_t i = 0; i < b.size(); ++i) rem[sh + i] -= c * b[i];
    }
  }
  return {strim(std::move(quo)), strim(std::move(rem))};
}

S smonic(S a) {
  a = strim(std::move(a));
  if (a.empty()) return a;
  Scalar inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

S sgcd_monic(S a, S b) {
  a = strim(std::move(a));
  b = strim(std::move(b));
  while (!b.empty()) {
    S r = sdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return smonic(std::move(a));
}

S sderiv(const S& a) {
  if (a.size() <= 1) return {};
  S r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * Scalar(static_cast<long>(i));
  return strim(std::move(r));
}

}  // namespace mmp3::up
