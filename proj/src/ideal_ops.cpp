#include <algorithm>

#include "mmp3/error.hpp"
#include "mmp3/ideal.hpp"

namespace mmp3 {

namespace {

void check_same_ring(const Ideal& I, const Ideal& J) {
  require(I.ring() == J.ring() || I.ring()->same_structure(*J.ring()),
          errc::internal, "ideal operation across different rings");
}

Deg unit_weight(int rank) { return rank == 1 ? Deg::of(1) : Deg::of2(1, 0); }

}  // namespace

Ideal sum(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  auto gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal product(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  std::vector<Poly> gens;
  gens.reserve(I.gens().size() * J.gens().size());
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal power(const Ideal& I, int n) {
  require(n >= 0, errc::internal, "negative ideal power");
  Ideal r(I.ring(), {Poly(I.ring(), Scalar::one(I.ring()->field()))});
  Ideal base = I;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) r = product(r, base);
    if (k > 1) base = product(base, base);
  }
  return r;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  const RingPtr& R = I.ring();
  std::string tname = R->fresh_name("t");
  RingPtr T = R->extended({tname}, {unit_weight(R->rank())});
  int ti = T->var_index(tname);
  Poly t = Poly::var(T, ti);
  Poly one_minus_t = Poly(T, Scalar::one(T->field())) - t;
  std::vector<Poly> gens;
  for (const auto& f : I.gens()) gens.push_back(f.transported(T) * t);
  for (const auto& g : J.gens()) gens.push_back(g.transported(T) * one_minus_t);
  Ideal big(T, std::move(gens));
  Ideal el = eliminate(big, {ti});
  std::vector<Poly> out;
  for (const auto& f : el.gens()) out.push_back(f.transported(R));
  return Ideal(R, std::move(out));
}

Poly exact_divide(const Poly& p, const Poly& f) {
  require(!f.is_zero(), errc::internal, "division by the zero polynomial");
  Poly rem = p;
  Poly q(p.ring());
  Scalar lc = f.lead_coeff();
  Mono lm = f.lead_mono();
  while (!rem.is_zero()) {
    require(lm.divides(rem.lead_mono()), errc::internal,
            "exact division left a remainder");
    Poly step = Poly::term(p.ring(), rem.lead_mono().quotient(lm),
                           rem.lead_coeff() / lc);
    q += step;
    rem -= step * f;
  }
  return q;
}

Ideal quotient(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return Ideal(I.ring(), {Poly(I.ring(), Scalar::one(I.ring()->field()))});
  Ideal meet = intersect(I, Ideal(I.ring(), {f}));
  std::vector<Poly> gens;
  gens.reserve(meet.gens().size());
  for (const auto& g : meet.gens()) gens.push_back(exact_divide(g, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
  check_same_ring(I, J);
  if (J.gens().empty())
    return Ideal(I.ring(), {Poly(I.ring(), Scalar::one(I.ring()->field()))});
  bool first = true;
  Ideal acc;
  for (const auto& f : J.gens()) {
    Ideal q = quotient(I, f);
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Poly& f) {
  // (I : f^inf) = (I*R[y] + <1 - y*f>) meet R, one elimination
  const RingPtr& R = I.ring();
  if (f.is_zero())
    return Ideal(R, {Poly(R, Scalar::one(R->field()))});
  std::string yname = R->fresh_name("y");
  RingPtr T = R->extended({yname}, {unit_weight(R->rank())});
  int yi = T->var_index(yname);
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.transported(T));
  gens.push_back(Poly(T, Scalar::one(T->field())) -
                 Poly::var(T, yi) * f.transported(T));
  Ideal big(T, std::move(gens));
  Ideal el = eliminate(big, {yi});
  std::vector<Poly> out;
  for (const auto& g : el.gens()) out.push_back(g.transported(R));
  return Ideal(R, std::move(out));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  // (I : J^inf) is the intersection of the saturations at each generator;
  // composing them instead would compute (I : (f*g)^inf), a larger ideal
  check_same_ring(I, J);
  if (J.gens().empty())
    return Ideal(I.ring(), {Poly(I.ring(), Scalar::one(I.ring()->field()))});
  bool first = true;
  Ideal acc;
  for (const auto& f : J.gens()) {
    Ideal s = saturate(I, f);
    acc = first ? s : intersect(acc, s);
    first = false;
  }
  return acc;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  Order o = Order::elim(vars, I.ring()->nvars());
  std::vector<char> gone(I.ring()->nvars(), 0);
  for (int v : vars) gone[v] = 1;
  std::vector<Poly> keep;
  for (const auto& g : I.groebner(o)) {
    bool clean = true;
    for (const auto& tc : g.terms()) {
      for (int i = 0; clean && i < I.ring()->nvars(); ++i)
        if (gone[i] && tc.first.e[i] != 0) clean = false;
      if (!clean) break;
    }
    if (clean) keep.push_back(g);
  }
  return Ideal(I.ring(), std::move(keep));
}

bool radical_contains(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return true;
  const RingPtr& R = I.ring();
  std::string yname = R->fresh_name("y");
  RingPtr T = R->extended({yname}, {unit_weight(R->rank())});
  int yi = T->var_index(yname);
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(g.transported(T));
  gens.push_back(Poly(T, Scalar::one(T->field())) -
                 Poly::var(T, yi) * f.transported(T));
  return Ideal(T, std::move(gens)).is_unit();
}

Ideal transport(const Ideal& I, const RingPtr& target) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) gens.push_back(g.transported(target));
  return Ideal(target, std::move(gens));
}

Ideal ring_map_kernel(const RingPtr& source, const std::vector<Poly>& images,
                      const Ideal& target_mod) {
  const RingPtr& S = target_mod.ring();
  require(static_cast<int>(images.size()) == source->nvars(), errc::internal,
          "one image per source variable required");
  for (const auto& im : images)
    require(im.is_zero() || im.ring() == S || im.ring()->same_structure(*S),
            errc::internal, "map image lies in the wrong ring");

  // graph ring: target variables first, then fresh stand-ins for the source
  std::vector<std::string> names = S->names();
  std::vector<Deg> weights = S->weights();
  std::vector<int> tilde(source->nvars());
  auto taken = [&names](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  for (int i = 0; i < source->nvars(); ++i) {
    std::string base = source->name(i);
    std::string nm = base;
    for (int k = 0; taken(nm); ++k) nm = base + "_g" + std::to_string(k);
    tilde[i] = static_cast<int>(names.size());
    names.push_back(nm);
    long long w = std::max(source->scalar_weight(i), 1LL);
    weights.push_back(S->rank() == 1 ? Deg::of(w) : Deg::of2(w, 0));
  }
  RingPtr T = Ring::make(std::move(names), std::move(weights), S->field());

  std::vector<Poly> gens;
  for (const auto& g : target_mod.gens()) gens.push_back(g.transported(T));
  for (int i = 0; i < source->nvars(); ++i)
    gens.push_back(Poly::var(T, tilde[i]) - images[i].transported(T));

  std::vector<int> elim_vars;
  for (int j = 0; j < S->nvars(); ++j) elim_vars.push_back(j);
  Ideal el = eliminate(Ideal(T, std::move(gens)), elim_vars);

  std::vector<Poly> back_images(T->nvars(), Poly(source));
  for (int i = 0; i < source->nvars(); ++i)
    back_images[tilde[i]] = Poly::var(source, i);
  std::vector<Poly> out;
  for (const auto& g : el.gens())
    out.push_back(g.substituted(source, back_images));
  return Ideal(source, std::move(out));
}

}  // namespace mmp3
