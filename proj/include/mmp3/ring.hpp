#pragma once
#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mmp3/scalar.hpp"

namespace mmp3 {

// element of Z^rank (rank 1 or 2); rank-1 degrees use a[0] only.
struct Deg {
  int rank = 1;
  std::array<long long, 2> a{0, 0};

  static Deg of(long long x) { return Deg{1, {x, 0}}; }
  static Deg of2(long long x, long long y) { return Deg{2, {x, y}}; }
  static Deg zero(int rank) { return Deg{rank, {0, 0}}; }

  long long total() const { return a[0] + a[1]; }
  bool is_zero() const { return a[0] == 0 && a[1] == 0; }

  Deg operator+(const Deg& o) const;
  Deg operator-(const Deg& o) const;
  Deg operator*(long long k) const { return Deg{rank, {a[0] * k, a[1] * k}}; }
  bool operator==(const Deg& o) const { return rank == o.rank && a == o.a; }
  bool operator!=(const Deg& o) const { return !(*this == o); }
  bool le(const Deg& o) const;  // componentwise <=
  static Deg max(const Deg& x, const Deg& y);
  int lex_cmp(const Deg& o) const;  // deterministic total order
  std::string str() const;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// exponent vector; operations that need weights take the ring.
struct Mono {
  std::vector<int> e;

  static Mono one(int nvars) { return Mono{std::vector<int>(nvars, 0)}; }
  static Mono var(int i, int nvars, int exp = 1) {
    Mono m = one(nvars);
    m.e[i] = exp;
    return m;
  }
  bool is_one() const;
  bool divides(const Mono& m) const;
  bool coprime(const Mono& m) const;
  Mono operator*(const Mono& m) const;
  Mono quotient(const Mono& m) const;  // *this / m, requires divisibility
  static Mono lcm(const Mono& x, const Mono& y);
  bool operator==(const Mono& m) const { return e == m.e; }
  long long total_exp() const;
};

// graded polynomial ring over Q or Q(gen).  weights carry the (multi)grading;
// auxiliary elimination variables may use any placeholder weight since
// Groebner computations never consult the grading.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(std::vector<std::string> names, std::vector<Deg> weights,
                      FieldPtr field = nullptr);

  int nvars() const { return static_cast<int>(names_.size()); }
  int rank() const { return rank_; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const Deg& weight(int i) const { return weights_[i]; }
  const std::vector<Deg>& weights() const { return weights_; }
  long long scalar_weight(int i) const { return weights_[i].total(); }
  int var_index(const std::string& n) const;  // -1 if absent
  const FieldPtr& field() const { return field_; }

  Deg mono_deg(const Mono& m) const;

  RingPtr extended(const std::vector<std::string>& extra_names,
                   const std::vector<Deg>& extra_weights) const;
  RingPtr subring(const std::vector<int>& keep) const;
  std::string fresh_name(const std::string& base) const;

  bool same_structure(const Ring& o) const;  // names, weights, field agree

 private:
  std::vector<std::string> names_;
  std::vector<Deg> weights_;
  int rank_ = 1;
  FieldPtr field_;
  std::map<std::string, int> index_;
};

// monomial term order.  block orders compare block by block, each block by
// weighted-degree-then-revlex in the listed variable sequence; lex compares
// exponents in variable sequence.  all orders are total.
struct Order {
  enum class Kind { wdegrevlex, lex, block };
  Kind kind = Kind::wdegrevlex;
  std::vector<std::vector<int>> blocks;

  static Order wdrl() { return Order{}; }
  static Order lexi() { return Order{Kind::lex, {}}; }
  static Order elim(std::vector<int> first, int nvars);
  static Order block_of(std::vector<std::vector<int>> blocks) {
    return Order{Kind::block, std::move(blocks)};
  }

  int cmp(const Ring& R, const Mono& x, const Mono& y) const;  // sign of x<=>y
  std::string key() const;
};

// polynomial with terms kept sorted descending under the ring's canonical
// order (weighted degrevlex); the canonical form makes equality and printing
// deterministic.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr R) : R_(std::move(R)) {}
  Poly(RingPtr R, const Scalar& c);  // constant
  static Poly var(RingPtr R, int i, int exp = 1);
  static Poly term(RingPtr R, const Mono& m, const Scalar& c);

  const RingPtr& ring() const { return R_; }
  bool is_zero() const { return t_.empty(); }
  int nterms() const { return static_cast<int>(t_.size()); }
  const Mono& mono(int i) const { return t_[i].first; }
  const Scalar& coeff(int i) const { return t_[i].second; }
  const std::vector<std::pair<Mono, Scalar>>& terms() const { return t_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Scalar& c) const;
  Poly mono_mult(const Mono& m, const Scalar& c) const;
  Poly pow(int n) const;
  bool operator==(const Poly& o) const { return R_ == o.R_ ? t_ == o.t_ : eq_slow(o); }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // homogeneity w.r.t. the ring grading; deg() requires homogeneous nonzero
  bool is_homogeneous() const;
  Deg deg() const;
  Deg max_deg() const;  // componentwise max over terms (cheap bound)

  // substitution of images[i] for variable i into the target ring; every
  // entry must be supplied.  also used to transport between rings.
  Poly substituted(RingPtr target, const std::vector<Poly>& images) const;
  // cheap transport when target contains the same-named variables
  Poly transported(RingPtr target) const;

  Scalar lead_coeff() const;  // canonical order
  Mono lead_mono() const;
  Poly normalized() const;  // divided by canonical leading coefficient
  int lead_index(const Order& o) const;  // index of the o-largest term

  mpz_class height() const;
  std::string str() const;

  // raw access for kernels that build polynomials termwise
  static Poly from_terms(RingPtr R, std::vector<std::pair<Mono, Scalar>> terms);

 private:
  RingPtr R_;
  std::vector<std::pair<Mono, Scalar>> t_;
  bool eq_slow(const Poly& o) const;
  void sort_terms();
};

// canonical text form: parse and print round-trip exactly.
Poly parse_poly(const RingPtr& R, const std::string& text);
std::string poly_str(const Poly& p);

}  // namespace mmp3
