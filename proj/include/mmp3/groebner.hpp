#pragma once
#include <climits>
#include <vector>

#include "mmp3/ring.hpp"

namespace mmp3 {

// term of a free-module element: component index plus monomial.
struct MTerm {
  int comp = 0;
  Mono m;
  bool operator==(const MTerm& o) const { return comp == o.comp && m == o.m; }
  bool divides(const MTerm& o) const { return comp == o.comp && m.divides(o.m); }
};

// element of R^k, terms kept sorted descending under the active module order.
struct MVec {
  std::vector<std::pair<MTerm, Scalar>> t;
  bool is_zero() const { return t.empty(); }
  const MTerm& lead() const { return t.front().first; }
  const Scalar& lc() const { return t.front().second; }
};

// module term order.  components below `primary` form the main block and
// always dominate the marker block at `primary` and above; within the marker
// block comparison is position-first with lower index greater.  inside the
// main block, `pot` selects position-first (lower index greater) versus
// term-first with the base monomial order.
struct MOrder {
  Order mono;
  bool pot = true;
  int primary = INT_MAX;

  int cmp(const Ring& R, const MTerm& a, const MTerm& b) const;
  std::string key() const;
};

// Groebner machinery for submodules of R^k.  polynomials are the k = 1 case.
class Engine {
 public:
  Engine(RingPtr R, int ncomps, MOrder order)
      : R_(std::move(R)), ncomps_(ncomps), ord_(std::move(order)) {}

  const RingPtr& ring() const { return R_; }
  const MOrder& order() const { return ord_; }
  int ncomps() const { return ncomps_; }

  // element construction and arithmetic under this engine's order
  MVec make(std::vector<std::pair<MTerm, Scalar>> terms) const;
  MVec from_poly(const Poly& p, int comp = 0) const;
  Poly comp_poly(const MVec& v, int comp) const;  // slice one component out
  MVec add(const MVec& a, const MVec& b) const;
  MVec sub(const MVec& a, const MVec& b) const;
  MVec scale(const MVec& a, const Scalar& c) const;
  MVec mono_mult(const MVec& a, const Mono& m, const Scalar& c) const;
  MVec poly_mult(const MVec& a, const Poly& p) const;

  // reduced Groebner basis: minimal leads, fully tail-reduced, unit leading
  // coefficients, sorted descending by lead; canonical per (module, order).
  std::vector<MVec> reduced_gb(std::vector<MVec> gens) const;

  // normal form against a Groebner basis; only reducers whose lead component
  // is below `lead_comp_limit` are used.
  MVec nf(MVec v, const std::vector<MVec>& gb,
          int lead_comp_limit = INT_MAX) const;

  bool reduces_to_zero(const MVec& v, const std::vector<MVec>& gb) const;

 private:
  RingPtr R_;
  int ncomps_;
  MOrder ord_;

  friend struct Buchberger;
};

// Groebner basis of the generators together with expression data: each basis
// row satisfies gb[i] = sum_j coords[i][j] * gens[j], and the syzygy rows
// generate all relations sum_j row[j] * gens[j] = 0.
struct TrackedGB {
  std::vector<MVec> gb;
  std::vector<std::vector<Poly>> coords;
  std::vector<std::vector<Poly>> syzygies;
};

// tracked basis via the marker-component construction: generators are
// augmented by unit markers in components k..k+m-1, the Groebner run keeps
// the main block dominant, and marker-only rows are exactly the syzygies.
TrackedGB tracked_gb(const Engine& eng, const std::vector<MVec>& gens);

}  // namespace mmp3
