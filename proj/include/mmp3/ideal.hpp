#pragma once
#include <map>
#include <string>
#include <vector>

#include "mmp3/groebner.hpp"
#include "mmp3/ring.hpp"

namespace mmp3 {

// finitely generated ideal with reduced-Groebner-basis caching per term
// order.  copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr R, std::vector<Poly> gens);
  static Ideal zero(RingPtr R) { return Ideal(std::move(R), {}); }

  const RingPtr& ring() const { return R_; }
  const std::vector<Poly>& gens() const { return gens_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  bool is_homogeneous() const;

  const std::vector<Poly>& groebner(const Order& o = Order::wdrl()) const;
  std::vector<Mono> lead_monos(const Order& o = Order::wdrl()) const;
  Poly nf(const Poly& p, const Order& o = Order::wdrl()) const;
  bool contains(const Poly& p) const;
  bool contains(const Ideal& J) const;
  bool same_ideal(const Ideal& J) const;
  bool is_zero_ideal() const;
  bool is_unit() const;  // contains 1

 private:
  RingPtr R_;
  std::vector<Poly> gens_;
  mutable std::shared_ptr<std::map<std::string, std::vector<Poly>>> cache_;
};

// arithmetic on ideals of one ring
Ideal sum(const Ideal& I, const Ideal& J);
Ideal product(const Ideal& I, const Ideal& J);
Ideal power(const Ideal& I, int n);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal quotient(const Ideal& I, const Poly& f);
Ideal quotient(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Poly& f);
Ideal saturate(const Ideal& I, const Ideal& J);

// generators of I free of the listed variables (a generating set of the
// elimination ideal), expressed in the same ring
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// membership in the radical, decided without computing the radical
bool radical_contains(const Ideal& I, const Poly& f);

// quotient-exact division: p = q*f with zero remainder, else an internal error
Poly exact_divide(const Poly& p, const Poly& f);

// move an ideal along matching variable names into another ring
Ideal transport(const Ideal& I, const RingPtr& target);

// kernel of the ring map source -> target/target_mod sending the i-th source
// variable to images[i]
Ideal ring_map_kernel(const RingPtr& source, const std::vector<Poly>& images,
                      const Ideal& target_mod);

}  // namespace mmp3
