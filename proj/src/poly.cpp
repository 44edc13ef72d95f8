#include <algorithm>

#include "mmp3/error.hpp"
#include "mmp3/ring.hpp"

namespace mmp3 {

namespace {

// canonical storage order: weighted degrevlex over the full variable list.
int canon_cmp(const Ring& R, const Mono& x, const Mono& y) {
  static thread_local Order o = Order::wdrl();
  return o.cmp(R, x, y);
}

}  // namespace

Poly::Poly(RingPtr R, const Scalar& c) : R_(std::move(R)) {
  if (!c.is_zero()) t_.push_back({Mono::one(R_->nvars()), c});
}

Poly Poly::var(RingPtr R, int i, int exp) {
  Poly p(R);
  if (exp == 0) return Poly(R, Scalar::one(R->field()));
  p.t_.push_back({Mono::var(i, R->nvars(), exp), Scalar::one(R->field())});
  return p;
}

Poly Poly::term(RingPtr R, const Mono& m, const Scalar& c) {
  Poly p(R);
  if (!c.is_zero()) p.t_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingPtr R, std::vector<std::pair<Mono, Scalar>> terms) {
  Poly p(std::move(R));
  p.t_ = std::move(terms);
  p.sort_terms();
  return p;
}

void Poly::sort_terms() {
  std::sort(t_.begin(), t_.end(), [&](const auto& a, const auto& b) {
    return canon_cmp(*R_, a.first, b.first) > 0;
  });
  std::vector<std::pair<Mono, Scalar>> out;
  out.reserve(t_.size());
  for (auto& tc : t_) {
    if (!out.empty() && out.back().first == tc.first)
      out.back().second += tc.second;
    else
      out.push_back(std::move(tc));
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  }
  t_ = std::move(out);
}

Poly Poly::operator+(const Poly& o) const {
  require(R_ && o.R_ && (R_ == o.R_ || R_->same_structure(*o.R_)), errc::internal,
          "polynomial ring mismatch in addition");
  Poly r(R_);
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = canon_cmp(*R_, t_[i].first, o.t_[j].first);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Scalar s = t_[i].second + o.t_[j].second;
      if (!s.is_zero()) r.t_.push_back({t_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& tc : r.t_) tc.second = -tc.second;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(R_);
  Poly r = *this;
  for (auto& tc : r.t_) tc.second = tc.second * c;
  return r;
}

Poly Poly::mono_mult(const Mono& m, const Scalar& c) const {
  if (c.is_zero()) return Poly(R_);
  Poly r = *this;
  for (auto& tc : r.t_) {
    tc.first = tc.first * m;
    tc.second = tc.second * c;
  }
  return r;  // multiplying by a monomial preserves the term order
}

Poly Poly::operator*(const Poly& o) const {
  require(R_ && o.R_ && (R_ == o.R_ || R_->same_structure(*o.R_)), errc::internal,
          "polynomial ring mismatch in multiplication");
  if (is_zero() || o.is_zero()) return Poly(R_);
  if (o.nterms() == 1) return mono_mult(o.t_[0].first, o.t_[0].second);
  if (nterms() == 1) return o.mono_mult(t_[0].first, t_[0].second);
  Poly acc(R_);
  for (const auto& tc : o.t_) acc += mono_mult(tc.first, tc.second);
  return acc;
}

Poly Poly::pow(int n) const {
  require(n >= 0, errc::internal, "negative polynomial power");
  Poly r(R_, Scalar::one(R_->field()));
  Poly base = *this;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) r *= base;
    if (k > 1) base *= base;
  }
  return r;
}

bool Poly::eq_slow(const Poly& o) const {
  if (!R_ || !o.R_) return is_zero() && o.is_zero();
  if (!R_->same_structure(*o.R_)) return false;
  return t_ == o.t_;
}

bool Poly::is_homogeneous() const {
  if (t_.empty()) return true;
  Deg d = R_->mono_deg(t_[0].first);
  for (const auto& tc : t_)
    if (R_->mono_deg(tc.first) != d) return false;
  return true;
}

Deg Poly::deg() const {
  require(!t_.empty(), errc::internal, "degree of zero polynomial");
  require(is_homogeneous(), errc::not_homogeneous, "polynomial is not homogeneous");
  return R_->mono_deg(t_[0].first);
}

Deg Poly::max_deg() const {
  require(!t_.empty(), errc::internal, "degree bound of zero polynomial");
  Deg d = R_->mono_deg(t_[0].first);
  for (const auto& tc : t_) d = Deg::max(d, R_->mono_deg(tc.first));
  return d;
}

Poly Poly::substituted(RingPtr target, const std::vector<Poly>& images) const {
  require(static_cast<int>(images.size()) == R_->nvars(), errc::internal,
          "substitution needs one image per variable");
  // cache powers of each image that actually occur
  std::vector<std::vector<Poly>> pows(images.size());
  Poly acc(target);
  for (const auto& tc : t_) {
    Poly term(target, Scalar(tc.second));
    for (int i = 0; i < R_->nvars(); ++i) {
      int e = tc.first.e[i];
      if (e == 0) continue;
      auto& pw = pows[i];
      if (pw.empty()) pw.push_back(images[i]);
      while (static_cast<int>(pw.size()) < e) pw.push_back(pw.back() * images[i]);
      term *= pw[e - 1];
    }
    acc += term;
  }
  return acc;
}

Poly Poly::transported(RingPtr target) const {
  std::vector<int> map(R_->nvars());
  for (int i = 0; i < R_->nvars(); ++i) {
    map[i] = target->var_index(R_->name(i));
    if (map[i] >= 0) continue;
    for (const auto& tc : t_)
      require(tc.first.e[i] == 0, errc::internal,
              "variable '" + R_->name(i) + "' absent from target ring");
  }
  Poly r(target);
  r.t_.reserve(t_.size());
  for (const auto& tc : t_) {
    Mono m = Mono::one(target->nvars());
    for (int i = 0; i < R_->nvars(); ++i)
      if (tc.first.e[i] != 0) m.e[map[i]] = tc.first.e[i];
    r.t_.push_back({std::move(m), tc.second});
  }
  r.sort_terms();
  return r;
}

Scalar Poly::lead_coeff() const {
  require(!t_.empty(), errc::internal, "leading coefficient of zero");
  return t_[0].second;
}

Mono Poly::lead_mono() const {
  require(!t_.empty(), errc::internal, "leading monomial of zero");
  return t_[0].first;
}

Poly Poly::normalized() const {
  if (t_.empty()) return *this;
  return scaled(t_[0].second.inverse());
}

int Poly::lead_index(const Order& o) const {
  require(!t_.empty(), errc::internal, "leading term of zero");
  int best = 0;
  for (int i = 1; i < nterms(); ++i)
    if (o.cmp(*R_, t_[i].first, t_[best].first) > 0) best = i;
  return best;
}

mpz_class Poly::height() const {
  mpz_class h = 0;
  for (const auto& tc : t_) {
    mpz_class c = tc.second.height();
    if (c > h) h = c;
  }
  return h;
}

std::string Poly::str() const { return poly_str(*this); }

}  // namespace mmp3
