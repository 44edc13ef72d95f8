#include "mmp3/groebner.hpp"

#include <algorithm>
#include <map>

#include "mmp3/budget.hpp"
#include "mmp3/error.hpp"

namespace mmp3 {

int MOrder::cmp(const Ring& R, const MTerm& a, const MTerm& b) const {
  bool pa = a.comp < primary, pb = b.comp < primary;
  if (pa != pb) return pa ? 1 : -1;
  if (pa && !pot) {
    int c = mono.cmp(R, a.m, b.m);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
  }
  // position-first (also for the marker block): lower component dominates
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return mono.cmp(R, a.m, b.m);
}

std::string MOrder::key() const {
  return mono.key() + (pot ? "/pot" : "/top") + "/" +
         (primary == INT_MAX ? std::string("all") : std::to_string(primary));
}

MVec Engine::make(std::vector<std::pair<MTerm, Scalar>> terms) const {
  MVec v;
  v.t = std::move(terms);
  std::sort(v.t.begin(), v.t.end(), [&](const auto& a, const auto& b) {
    return ord_.cmp(*R_, a.first, b.first) > 0;
  });
  std::vector<std::pair<MTerm, Scalar>> out;
  out.reserve(v.t.size());
  for (auto& tc : v.t) {
    if (!out.empty() && out.back().first == tc.first)
      out.back().second += tc.second;
    else
      out.push_back(std::move(tc));
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  }
  v.t = std::move(out);
  return v;
}

MVec Engine::from_poly(const Poly& p, int comp) const {
  std::vector<std::pair<MTerm, Scalar>> terms;
  terms.reserve(p.nterms());
  for (const auto& tc : p.terms()) terms.push_back({{comp, tc.first}, tc.second});
  return make(std::move(terms));
}

Poly Engine::comp_poly(const MVec& v, int comp) const {
  std::vector<std::pair<Mono, Scalar>> terms;
  for (const auto& tc : v.t)
    if (tc.first.comp == comp) terms.push_back({tc.first.m, tc.second});
  return Poly::from_terms(R_, std::move(terms));
}

MVec Engine::add(const MVec& a, const MVec& b) const {
  MVec r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = ord_.cmp(*R_, a.t[i].first, b.t[j].first);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      r.t.push_back(b.t[j++]);
    } else {
      Scalar s = a.t[i].second + b.t[j].second;
      if (!s.is_zero()) r.t.push_back({a.t[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

MVec Engine::scale(const MVec& a, const Scalar& c) const {
  if (c.is_zero()) return MVec{};
  MVec r = a;
  for (auto& tc : r.t) tc.second = tc.second * c;
  return r;
}

MVec Engine::sub(const MVec& a, const MVec& b) const {
  return add(a, scale(b, Scalar(-1)));
}

MVec Engine::mono_mult(const MVec& a, const Mono& m, const Scalar& c) const {
  if (c.is_zero()) return MVec{};
  MVec r = a;
  for (auto& tc : r.t) {
    tc.first.m = tc.first.m * m;
    tc.second = tc.second * c;
  }
  return r;  // multiplicative orders keep the sorting intact
}

MVec Engine::poly_mult(const MVec& a, const Poly& p) const {
  MVec acc;
  for (const auto& tc : p.terms()) acc = add(acc, mono_mult(a, tc.first, tc.second));
  return acc;
}

MVec Engine::nf(MVec v, const std::vector<MVec>& gb, int lead_comp_limit) const {
  // bucket reducers by lead component
  std::map<int, std::vector<const MVec*>> bucket;
  for (const auto& g : gb)
    if (!g.is_zero() && g.lead().comp < lead_comp_limit)
      bucket[g.lead().comp].push_back(&g);

  MVec out;
  while (!v.is_zero()) {
    check_deadline();
    const MTerm& t = v.lead();
    const Scalar& c = v.lc();
    const MVec* red = nullptr;
    auto it = bucket.find(t.comp);
    if (it != bucket.end())
      for (const MVec* g : it->second)
        if (g->lead().m.divides(t.m)) {
          red = g;
          break;
        }
    if (red) {
      Scalar f = c / red->lc();
      v = sub(v, mono_mult(*red, t.m.quotient(red->lead().m), f));
    } else {
      out.t.push_back(v.t.front());
      v.t.erase(v.t.begin());
    }
  }
  return out;  // appended in strictly decreasing order
}

bool Engine::reduces_to_zero(const MVec& v, const std::vector<MVec>& gb) const {
  return nf(v, gb).is_zero();
}

namespace {

// deterministic monomial tiebreak for pair selection
int exp_lex(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

struct Buchberger {
  const Engine& E;
  const Ring& R;

  struct Pair {
    int i, j;
    MTerm l;
    long long d;
  };

  std::vector<MVec> g;
  std::vector<char> pure;  // all terms in the lead component
  std::vector<Pair> pairs;

  explicit Buchberger(const Engine& e) : E(e), R(*e.ring()) {}

  long long sel_deg(const Mono& m) const {
    long long s = 0;
    for (size_t i = 0; i < m.e.size(); ++i)
      s += std::max(R.scalar_weight(static_cast<int>(i)), 1LL) * m.e[i];
    return s;
  }

  static bool is_pure(const MVec& v) {
    for (const auto& tc : v.t)
      if (tc.first.comp != v.lead().comp) return false;
    return true;
  }

  void push_elem(const MVec& v) {
    MVec n = E.scale(v, v.lc().inverse());
    g.push_back(std::move(n));
    pure.push_back(is_pure(g.back()) ? 1 : 0);
    update_pairs(static_cast<int>(g.size()) - 1);
  }

  // Gebauer–Moeller pair update on arrival of g[t]
  void update_pairs(int t) {
    const MTerm& lt = g[t].lead();

    // drop old pairs superseded by the new lead (chain criterion)
    std::vector<Pair> kept_old;
    kept_old.reserve(pairs.size());
    for (const Pair& p : pairs) {
      if (lt.comp == p.l.comp && lt.m.divides(p.l.m)) {
        Mono li = Mono::lcm(g[p.i].lead().m, lt.m);
        Mono lj = Mono::lcm(g[p.j].lead().m, lt.m);
        if (!(li == p.l.m) && !(lj == p.l.m)) continue;  // strictly interior
      }
      kept_old.push_back(p);
    }
    pairs = std::move(kept_old);

    // candidate new pairs, one per lcm class, coprime classes discarded
    std::vector<Pair> cand;
    for (int i = 0; i < t; ++i) {
      if (g[i].lead().comp != lt.comp) continue;
      Mono l = Mono::lcm(g[i].lead().m, lt.m);
      cand.push_back({i, t, MTerm{lt.comp, l}, sel_deg(l)});
    }
    std::sort(cand.begin(), cand.end(), [&](const Pair& a, const Pair& b) {
      if (a.d != b.d) return a.d < b.d;
      int c = exp_lex(a.l.m, b.l.m);
      if (c != 0) return c < 0;
      return a.i < b.i;
    });
    std::vector<Mono> blockers;  // lcms already kept or coprime-skipped
    for (const Pair& p : cand) {
      bool dominated = false;
      for (const Mono& b : blockers)
        if (b.divides(p.l.m)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      blockers.push_back(p.l.m);
      bool coprime = g[p.i].lead().m.coprime(lt.m);
      if (coprime && pure[p.i] && pure[t]) continue;  // product criterion
      pairs.push_back(p);
    }
  }

  MVec spair(const Pair& p) const {
    const MVec& a = g[p.i];
    const MVec& b = g[p.j];
    MVec sa = E.mono_mult(a, p.l.m.quotient(a.lead().m), Scalar(1));
    MVec sb = E.mono_mult(b, p.l.m.quotient(b.lead().m), Scalar(1));
    return E.sub(sa, sb);  // both leads are monic
  }

  void run(std::vector<MVec> gens) {
    for (MVec& v : gens) {
      if (v.is_zero()) continue;
      MVec r = E.nf(std::move(v), g);
      if (!r.is_zero()) push_elem(r);
    }
    while (!pairs.empty()) {
      check_deadline();
      size_t best = 0;
      for (size_t k = 1; k < pairs.size(); ++k) {
        const Pair &a = pairs[k], &b = pairs[best];
        if (a.d < b.d ||
            (a.d == b.d && (exp_lex(a.l.m, b.l.m) < 0 ||
                            (a.l.m == b.l.m && a.i < b.i))))
          best = k;
      }
      Pair p = pairs[best];
      pairs.erase(pairs.begin() + static_cast<long>(best));
      MVec r = E.nf(spair(p), g);
      if (!r.is_zero()) push_elem(r);
    }
  }
};

}  // namespace

std::vector<MVec> Engine::reduced_gb(std::vector<MVec> gens) const {
  Buchberger b(*this);
  b.run(std::move(gens));

  // minimalize leads
  std::vector<MVec>& g = b.g;
  std::vector<char> drop(g.size(), 0);
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (g[j].lead().divides(g[i].lead())) {
        // on equal leads keep the later candidate still under scan
        if (g[j].lead() == g[i].lead() && j > i) continue;
        drop[i] = 1;
        break;
      }
    }
  }
  std::vector<MVec> min;
  for (size_t i = 0; i < g.size(); ++i)
    if (!drop[i]) min.push_back(std::move(g[i]));

  // full tail reduction of each element against the others
  std::vector<MVec> red;
  red.reserve(min.size());
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<MVec> others;
    others.reserve(min.size() - 1);
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    MVec r = nf(min[i], others);
    require(!r.is_zero(), errc::internal, "minimal basis element vanished");
    red.push_back(scale(r, r.lc().inverse()));
  }
  std::sort(red.begin(), red.end(), [&](const MVec& a, const MVec& b) {
    return ord_.cmp(*R_, a.lead(), b.lead()) > 0;
  });
  return red;
}

TrackedGB tracked_gb(const Engine& eng, const std::vector<MVec>& gens) {
  require(eng.order().primary == INT_MAX, errc::internal,
          "tracked basis does not nest marker blocks");
  const int k = eng.ncomps();
  const int m = static_cast<int>(gens.size());
  MOrder aug_ord{eng.order().mono, eng.order().pot, k};
  Engine aug(eng.ring(), k + m, aug_ord);

  std::vector<MVec> aug_gens;
  aug_gens.reserve(gens.size());
  for (int i = 0; i < m; ++i) {
    MVec v = gens[i];
    v.t.push_back({{k + i, Mono::one(eng.ring()->nvars())}, Scalar(1)});
    aug_gens.push_back(aug.make(std::move(v.t)));
  }

  std::vector<MVec> rows = aug.reduced_gb(std::move(aug_gens));
  TrackedGB out;
  for (const MVec& row : rows) {
    if (row.lead().comp >= k) {
      // marker-only row: a syzygy of the generators
      std::vector<Poly> syz;
      syz.reserve(m);
      for (int j = 0; j < m; ++j) syz.push_back(aug.comp_poly(row, k + j));
      out.syzygies.push_back(std::move(syz));
    } else {
      MVec f;
      for (const auto& tc : row.t)
        if (tc.first.comp < k) f.t.push_back(tc);
      std::vector<Poly> coord;
      coord.reserve(m);
      for (int j = 0; j < m; ++j) coord.push_back(aug.comp_poly(row, k + j));
      out.gb.push_back(std::move(f));
      out.coords.push_back(std::move(coord));
    }
  }
  return out;
}

}  // namespace mmp3
