#include "factor_bivar.hpp"

#include <algorithm>

#include "mmp3/budget.hpp"
#include "mmp3/error.hpp"

namespace mmp3::bivar {

using up::qadd;
using up::qdeg;
using up::qderiv;
using up::qdivmod;
using up::qgcd_monic;
using up::qmonic;
using up::qmul;
using up::qscale;
using up::qsub;
using up::qtrim;

B btrim(B a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
  return a;
}

int bdeg(const B& a) { return static_cast<int>(a.size()) - 1; }

int bxdeg(const B& a) {
  int d = -1;
  for (const auto& c : a) d = std::max(d, qdeg(c));
  return d;
}

B badd(const B& a, const B& b) {
  B r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = a[i];
    if (i < b.size()) r[i] = qadd(r[i], b[i]);
  }
  return btrim(std::move(r));
}

B bsub(const B& a, const B& b) {
  B r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = a[i];
    if (i < b.size()) r[i] = qsub(r[i], b[i]);
  }
  return btrim(std::move(r));
}

B bmul(const B& a, const B& b) {
  if (a.empty() || b.empty()) return {};
  B r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].empty()) continue;
      r[i + j] = qadd(r[i + j], qmul(a[i], b[j]));
    }
  }
  return btrim(std::move(r));
}

B bscale(const B& a, const Q& c) {
  B r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = qmul(a[i], c);
  return btrim(std::move(r));
}

B bderiv(const B& a) {
  if (a.size() <= 1) return {};
  B r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = qscale(a[i], Rat(static_cast<long>(i)));
  return btrim(std::move(r));
}

bool btry_divide(const B& a, const B& b, B* quot) {
  B rem = btrim(a);
  B bb = btrim(b);
  require(!bb.empty(), errc::internal, "bivariate division by zero");
  B q(rem.size() >= bb.size() ? rem.size() - bb.size() + 1 : 0);
  while (rem.size() >= bb.size()) {
    check_deadline();
    // The leading coefficient of the quotient term must divide exactly in
    // the coefficient ring Q[x].
    auto [qc, qr] = qdivmod(rem.back(), bb.back());
    if (!qr.empty()) return false;
    size_t sh = rem.size() - bb.size();
    for (size_t i = 0; i < bb.size(); ++i)
      rem[sh + i] = qsub(rem[sh + i], qmul(qc, bb[i]));
    if (!rem.back().empty()) return false;  // top term failed to cancel
    rem.pop_back();
    q[sh] = std::move(qc);
    rem = btrim(std::move(rem));
    if (rem.empty()) break;
  }
  if (!rem.empty()) return false;
  if (quot) *quot = btrim(std::move(q));
  return true;
}

Q bcontent(const B& a) {
  Q g;
  for (const auto& c : a) g = qgcd_monic(g, c);
  return g;
}

B bprimitive(const B& a) {
  Q g = bcontent(a);
  if (qdeg(g) <= 0) return a;
  B r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    auto [q, rem] = qdivmod(a[i], g);
    require(rem.empty(), errc::internal, "content failed to divide");
    r[i] = std::move(q);
  }
  return r;
}

namespace {

// One pseudo-remainder step: returns a*lc(b)^k - (terms of b), with degree in
// the main variable strictly below deg b.
B pseudo_rem(B a, const B& b) {
  int db = bdeg(b);
  while (bdeg(a) >= db) {
    check_deadline();
    size_t sh = a.size() - b.size();
    Q lead = a.back();
    // a = a*lc(b) - lead*y^sh*b cancels the top term.
    B next(a.size() - 1);
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      next[i] = qmul(a[i], b.back());
      if (i >= sh) next[i] = qsub(next[i], qmul(lead, b[i - sh]));
    }
    a = btrim(std::move(next));
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

B bgcd(B a, B b) {
  a = btrim(std::move(a));
  b = btrim(std::move(b));
  if (a.empty()) return bprimitive(b);
  if (b.empty()) return bprimitive(a);
  if (bdeg(a) < bdeg(b)) std::swap(a, b);
  a = bprimitive(std::move(a));
  b = bprimitive(std::move(b));
  while (!b.empty()) {
    check_deadline();
    if (bdeg(b) == 0) {
      // A nonzero coefficient gcd in Q[x] only: the main-variable gcd is it.
      Q g = qgcd_monic(bcontent(a), b[0]);
      return {qmonic(std::move(g))};
    }
    B r = bprimitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  // Scale so the top coefficient's leading entry is 1: the primitive part
  // alone is only determined up to a rational factor of the inputs.
  B p = bprimitive(std::move(a));
  Rat lc = p.back().back();
  return bscale(std::move(p), {Rat(1) / lc});
}

namespace {

// Taylor shift q(x) -> q(x + a), by Horner on the reversed coefficients.
Q qshift(const Q& q, const Rat& a) {
  Q r;
  for (size_t i = q.size(); i-- > 0;) {
    // r = r*(x + a) + q[i]
    Q shifted(r.size() + 1, Rat(0));
    for (size_t j = 0; j < r.size(); ++j) {
      shifted[j + 1] += r[j];
      shifted[j] += r[j] * a;
    }
    shifted[0] += q[i];
    r = qtrim(std::move(shifted));
  }
  return r;
}

B bshift(const B& f, const Rat& a) {
  B r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = qshift(f[i], a);
  return btrim(std::move(r));
}

// Extended Euclid over Q[y]: g = u*a + v*b with g monic.
void qxgcd(const Q& a, const Q& b, Q* g, Q* u, Q* v) {
  Q r0 = qtrim(a), r1 = qtrim(b);
  Q u0 = {Rat(1)}, u1 = {};
  Q v0 = {}, v1 = {Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = qdivmod(r0, r1);
    Q nu = qsub(u0, qmul(q, u1));
    Q nv = qsub(v0, qmul(q, v1));
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(nu);
    v0 = std::move(v1);
    v1 = std::move(nv);
  }
  require(!r0.empty(), errc::internal, "extended gcd of two zero polynomials");
  Rat lc = r0.back();
  *g = qscale(r0, Rat(1) / lc);
  *u = qscale(u0, Rat(1) / lc);
  *v = qscale(v0, Rat(1) / lc);
}

B btrunc(B a, int K) {
  for (auto& c : a)
    if (static_cast<int>(c.size()) > K) c = qtrim(Q(c.begin(), c.begin() + K));
  return btrim(std::move(a));
}

// Lift the coprime monic factorization f(0,y) = f(0,y).lc * prod g0[i] to a
// congruence f == lc_y(f) * prod G[i] mod x^K, with every G[i] monic in y.
std::vector<B> bhensel(const B& f, const std::vector<Q>& g0, int K) {
  size_t r = g0.size();
  const Q& L = f.back();  // leading y-coefficient, L(0) != 0
  require(!L.empty() && L[0] != 0, errc::internal,
          "evaluation point hit the leading coefficient");
  Rat binv = Rat(1) / L[0];

  // Bezout inverses: u[i] = (prod_{j != i} g0[j])^-1 mod g0[i].
  std::vector<Q> u(r);
  for (size_t i = 0; i < r; ++i) {
    Q prod = {Rat(1)};
    for (size_t j = 0; j < r; ++j)
      if (j != i) prod = qdivmod(qmul(prod, g0[j]), g0[i]).second;
    Q g, a, b;
    qxgcd(prod, g0[i], &g, &a, &b);
    require(qdeg(g) == 0, errc::internal, "lifted factors are not coprime");
    u[i] = std::move(a);
  }

  std::vector<B> G(r);
  for (size_t i = 0; i < r; ++i) {
    G[i].resize(g0[i].size());
    for (size_t j = 0; j < g0[i].size(); ++j)
      if (g0[i][j] != 0) G[i][j] = {g0[i][j]};
  }

  for (int step = 1; step < K; ++step) {
    check_deadline();
    B prod = {Q{Rat(1)}};
    for (size_t i = 0; i < r; ++i) prod = btrunc(bmul(prod, G[i]), K);
    B diff = btrunc(bsub(f, bscale(prod, L)), K);
    // diff must vanish below x^step; extract the x^step layer as a y-poly.
    Q ebar(diff.size(), Rat(0));
    bool any = false;
    for (size_t j = 0; j < diff.size(); ++j) {
      for (int t = 0; t < step && t < static_cast<int>(diff[j].size()); ++t)
        require(diff[j][t] == 0, errc::internal,
                "lifting drifted off the target");
      if (step < static_cast<int>(diff[j].size()) && diff[j][step] != 0) {
        ebar[j] = diff[j][step] * binv;
        any = true;
      }
    }
    if (!any) continue;
    ebar = qtrim(std::move(ebar));
    for (size_t i = 0; i < r; ++i) {
      Q ci = qdivmod(qmul(ebar, u[i]), g0[i]).second;
      for (size_t j = 0; j < ci.size(); ++j) {
        if (ci[j] == 0) continue;
        if (G[i][j].size() <= static_cast<size_t>(step))
          G[i][j].resize(step + 1, Rat(0));
        G[i][j][step] += ci[j];
      }
    }
  }
  return G;
}

// Normalize a primitive factor so repeated runs agree: scale by a rational to
// make the lexicographically leading coefficient's leading entry 1.
B bnormalize(B f) {
  f = bprimitive(btrim(std::move(f)));
  if (f.empty()) return f;
  Rat lc = f.back().back();
  return bscale(std::move(f), {Rat(1) / lc});
}

}  // namespace

std::vector<B> bfactor_squarefree(const B& f_in) {
  B f = btrim(f_in);
  int n = bdeg(f);
  require(n >= 1 && bxdeg(f) >= 1, errc::internal,
          "bivariate factorization needs both variables present");

  // Pick an evaluation point a for the secondary variable: the leading
  // coefficient must survive and the fiber must stay squarefree.
  Rat a;
  up::Z fiber;
  bool found = false;
  for (int k = 0; k < 200 && !found; ++k) {
    check_deadline();
    Rat cand(k % 2 == 0 ? k / 2 : -(k / 2 + 1));
    if (up::qeval(f.back(), cand) == 0) continue;
    Q f0(f.size());
    for (size_t i = 0; i < f.size(); ++i) f0[i] = up::qeval(f[i], cand);
    f0 = qtrim(std::move(f0));
    if (qdeg(qgcd_monic(f0, qderiv(f0))) != 0) continue;
    a = cand;
    fiber = up::q_to_primitive_z(f0);
    found = true;
  }
  require(found, errc::internal, "no good evaluation point for a squarefree "
                                 "bivariate polynomial");

  B g = bshift(f, a);  // evaluation point moved to x = 0

  std::vector<up::Z> zparts = up::zfactor_squarefree(fiber);
  if (zparts.size() == 1) return {bnormalize(f)};  // irreducible

  std::vector<Q> g0(zparts.size());
  for (size_t i = 0; i < zparts.size(); ++i)
    g0[i] = qmonic(up::z_to_q(zparts[i]));

  int K = 2 * bxdeg(g) + 1;
  std::vector<B> lifted = bhensel(g, g0, K);

  // Subset recombination, ascending cardinality.
  std::vector<B> pool = std::move(lifted);
  std::vector<B> out;
  B rest = g;

  auto try_card = [&](int card) -> bool {
    if (card > static_cast<int>(pool.size())) return false;
    std::vector<int> idx(card);
    for (int i = 0; i < card; ++i) idx[i] = i;
    while (true) {
      check_deadline();
      B cand = {rest.back()};  // leading coefficient of the current cofactor
      for (int i : idx) cand = btrunc(bmul(cand, pool[i]), K);
      cand = bprimitive(btrim(std::move(cand)));
      B quot;
      if (!cand.empty() && btry_divide(rest, cand, &quot)) {
        out.push_back(bnormalize(cand));
        rest = btrim(std::move(quot));
        std::vector<B> keep;
        for (int i = 0; i < static_cast<int>(pool.size()); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end())
            keep.push_back(std::move(pool[i]));
        pool = std::move(keep);
        return true;
      }
      // next combination
      int i = card - 1;
      while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - card + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  for (int card = 1; card <= static_cast<int>(pool.size()); ++card) {
    if (2 * card > static_cast<int>(pool.size()) + 1) break;
    while (try_card(card)) {
    }
  }
  if (bdeg(rest) >= 1) out.push_back(bnormalize(rest));

  // Undo the shift.
  for (auto& h : out) h = bnormalize(bshift(h, -a));
  return out;
}

}  // namespace mmp3::bivar
