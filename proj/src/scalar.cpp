#include "mmp3/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace mmp3 {

namespace {

// dense univariate helpers over Q used for residue arithmetic; vectors are
// low-degree-first and may carry trailing zeros between calls.
void strip(std::vector<Rat>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  strip(r);
  return r;
}

// remainder of a modulo the monic polynomial m (given by its low coeffs, so
// m = t^d + m[d-1] t^{d-1} + ... + m[0])
std::vector<Rat> poly_mod_monic(std::vector<Rat> a, const std::vector<Rat>& m) {
  size_t d = m.size();
  while (a.size() > d) {
    Rat lead = a.back();
    size_t sh = a.size() - 1 - d;
    if (lead != 0)
      for (size_t i = 0; i < d; ++i) a[sh + i] -= lead * m[i];
    a.pop_back();
    strip(a);
    if (a.size() <= d) break;
  }
  if (a.size() == d + 1) {  // exact top degree
    Rat lead = a.back();
    for (size_t i = 0; i < d; ++i) a[i] -= lead * m[i];
    a.pop_back();
  }
  strip(a);
  return a;
}

// extended gcd over Q[t]: returns (g, u, v) with u*a + v*b = g, g monic or 0
struct XGcd {
  std::vector<Rat> g, u, v;
};

std::pair<std::vector<Rat>, std::vector<Rat>> poly_divmod(std::vector<Rat> a,
                                                          const std::vector<Rat>& b) {
  std::vector<Rat> q;
  if (b.empty()) fail(errc::internal, "polynomial division by zero");
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rat(0));
  Rat inv_lead = 1 / b.back();
  for (size_t sh = q.size(); sh-- > 0;) {
    Rat c = a[sh + b.size() - 1] * inv_lead;
    if (c != 0) {
      q[sh] = c;
      for (size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
    }
  }
  strip(a);
  return {q, a};
}

XGcd poly_xgcd(std::vector<Rat> a, std::vector<Rat> b) {
  std::vector<Rat> u0{Rat(1)}, v0, u1, v1{Rat(1)};
  strip(a);
  strip(b);
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    a = b;
    b = r;
    auto nu = u0, nv = v0;
    // (u0,v0) - q*(u1,v1)
    auto qu = poly_mul(q, u1), qv = poly_mul(q, v1);
    nu.resize(std::max(nu.size(), qu.size()), Rat(0));
    for (size_t i = 0; i < qu.size(); ++i) nu[i] -= qu[i];
    nv.resize(std::max(nv.size(), qv.size()), Rat(0));
    for (size_t i = 0; i < qv.size(); ++i) nv[i] -= qv[i];
    strip(nu);
    strip(nv);
    u0 = u1;
    v0 = v1;
    u1 = nu;
    v1 = nv;
  }
  if (!a.empty()) {  // normalize monic
    Rat inv = 1 / a.back();
    for (auto& c : a) c *= inv;
    for (auto& c : u0) c *= inv;
    for (auto& c : v0) c *= inv;
  }
  return {a, u0, v0};
}

}  // namespace

Scalar::Scalar(const Rat& r, FieldPtr f) : fld_(std::move(f)) {
  if (!fld_) {
    c_.assign(1, r);
  } else {
    c_.assign(fld_->degree(), Rat(0));
    c_[0] = r;
  }
}

Scalar Scalar::zero(FieldPtr f) { return Scalar(Rat(0), std::move(f)); }
Scalar Scalar::one(FieldPtr f) { return Scalar(Rat(1), std::move(f)); }

Scalar Scalar::generator(FieldPtr f) {
  require(f != nullptr, errc::bad_input, "generator of the prime field requested");
  require(f->degree() >= 2, errc::bad_input, "number field of degree < 2");
  Scalar s(Rat(0), f);
  s.c_[1] = 1;
  return s;
}

bool Scalar::is_zero() const {
  for (auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Scalar::rational_part() const {
  require(is_rational(), errc::internal, "rational_part of a non-rational scalar");
  return c_[0];
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.fld_ == b.fld_) return;
  if (a.fld_ && b.fld_) {
    // distinct declared fields: same minimal polynomial and generator name
    // are accepted (sessions may reload the field), anything else refused.
    if (a.fld_->gen == b.fld_->gen && a.fld_->minpoly == b.fld_->minpoly) return;
    fail(errc::field_mismatch,
         "scalars from distinct number fields Q(" + a.fld_->gen + ") and Q(" +
             b.fld_->gen + "); dynamic field extension is not supported");
  }
  Scalar& rat = a.fld_ ? b : a;
  const Scalar& ext = a.fld_ ? a : b;
  Rat v = rat.c_[0];
  rat.fld_ = ext.fld_;
  rat.c_.assign(ext.fld_->degree(), Rat(0));
  rat.c_[0] = v;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  if (!a.fld_) {
    a.c_[0] *= b.c_[0];
    return a;
  }
  auto prod = poly_mul(a.c_, b.c_);
  prod = poly_mod_monic(prod, a.fld_->minpoly);
  prod.resize(a.fld_->degree(), Rat(0));
  a.c_ = prod;
  return a;
}

Scalar Scalar::inverse() const {
  require(!is_zero(), errc::bad_input, "inverse of zero");
  if (!fld_) {
    Scalar r = *this;
    r.c_[0] = 1 / r.c_[0];
    return r;
  }
  // xgcd against the (irreducible) minimal polynomial: u*c + v*m = 1
  std::vector<Rat> m = fld_->minpoly;
  m.push_back(Rat(1));  // full monic polynomial
  std::vector<Rat> c = c_;
  auto [g, u, v] = poly_xgcd(c, m);
  require(g.size() == 1 && g[0] == 1, errc::internal,
          "minimal polynomial not irreducible: nontrivial gcd with a residue");
  auto inv = poly_mod_monic(u, fld_->minpoly);
  inv.resize(fld_->degree(), Rat(0));
  Scalar r = *this;
  r.c_ = inv;
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

int Scalar::cmp(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  for (size_t i = a.c_.size(); i-- > 0;) {
    int c = ::cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

mpz_class Scalar::height() const {
  mpz_class h = 0;
  for (auto& c : c_) {
    mpz_class n = abs(c.get_num()), d = c.get_den();
    if (n > h) h = n;
    if (d > h) h = d;
  }
  return h;
}

std::string Scalar::str(bool* atomic) const {
  auto rat_str = [](const Rat& r) { return r.get_str(); };
  if (!fld_ || is_rational()) {
    if (atomic) *atomic = c_[0] >= 0;  // "-3" and "3/2" need no parens in products
    return rat_str(c_[0]);
  }
  std::ostringstream os;
  int written = 0;
  bool leading_minus = false;
  for (size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (written) {
      os << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      os << "-";
      leading_minus = true;
    }
    if (i == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << fld_->gen;
      if (i > 1) os << "^" << i;
    }
    ++written;
  }
  if (atomic) *atomic = (written == 1 && !leading_minus);
  return os.str();
}

}  // namespace mmp3
