#include "mmp3/ideal.hpp"

#include <algorithm>

#include "mmp3/error.hpp"

namespace mmp3 {

Ideal::Ideal(RingPtr R, std::vector<Poly> gens)
    : R_(std::move(R)),
      gens_(std::move(gens)),
      cache_(std::make_shared<std::map<std::string, std::vector<Poly>>>()) {
  std::vector<Poly> cleaned;
  cleaned.reserve(gens_.size());
  for (auto& g : gens_) {
    require(g.ring() == R_ || g.is_zero() || g.ring()->same_structure(*R_),
            errc::internal, "ideal generator from a different ring");
    if (!g.is_zero()) cleaned.push_back(std::move(g));
  }
  gens_ = std::move(cleaned);
}

bool Ideal::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

const std::vector<Poly>& Ideal::groebner(const Order& o) const {
  auto it = cache_->find(o.key());
  if (it != cache_->end()) return it->second;
  Engine eng(R_, 1, MOrder{o, true, INT_MAX});
  std::vector<MVec> in;
  in.reserve(gens_.size());
  for (const auto& g : gens_) in.push_back(eng.from_poly(g));
  std::vector<MVec> gb = eng.reduced_gb(std::move(in));
  std::vector<Poly> out;
  out.reserve(gb.size());
  for (const auto& v : gb) out.push_back(eng.comp_poly(v, 0));
  return (*cache_)[o.key()] = std::move(out);
}

std::vector<Mono> Ideal::lead_monos(const Order& o) const {
  std::vector<Mono> out;
  for (const auto& g : groebner(o)) out.push_back(g.mono(g.lead_index(o)));
  return out;
}

Poly Ideal::nf(const Poly& p, const Order& o) const {
  if (p.is_zero()) return p;
  const auto& gb = groebner(o);
  Engine eng(R_, 1, MOrder{o, true, INT_MAX});
  std::vector<MVec> g;
  g.reserve(gb.size());
  for (const auto& q : gb) g.push_back(eng.from_poly(q));
  return eng.comp_poly(eng.nf(eng.from_poly(p), g), 0);
}

bool Ideal::contains(const Poly& p) const { return nf(p).is_zero(); }

bool Ideal::contains(const Ideal& J) const {
  for (const auto& g : J.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::same_ideal(const Ideal& J) const {
  const auto& a = groebner();
  const auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool Ideal::is_zero_ideal() const { return groebner().empty(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].nterms() == 1 && gb[0].mono(0).is_one();
}

}  // namespace mmp3
