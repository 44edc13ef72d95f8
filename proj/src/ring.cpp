#include "mmp3/ring.hpp"

#include <algorithm>
#include <sstream>

#include "mmp3/error.hpp"

namespace mmp3 {

Deg Deg::operator+(const Deg& o) const {
  require(rank == o.rank, errc::internal, "degree rank mismatch");
  return Deg{rank, {a[0] + o.a[0], a[1] + o.a[1]}};
}

Deg Deg::operator-(const Deg& o) const {
  require(rank == o.rank, errc::internal, "degree rank mismatch");
  return Deg{rank, {a[0] - o.a[0], a[1] - o.a[1]}};
}

bool Deg::le(const Deg& o) const {
  require(rank == o.rank, errc::internal, "degree rank mismatch");
  return a[0] <= o.a[0] && a[1] <= o.a[1];
}

Deg Deg::max(const Deg& x, const Deg& y) {
  require(x.rank == y.rank, errc::internal, "degree rank mismatch");
  return Deg{x.rank, {std::max(x.a[0], y.a[0]), std::max(x.a[1], y.a[1])}};
}

int Deg::lex_cmp(const Deg& o) const {
  if (rank != o.rank) return rank < o.rank ? -1 : 1;
  for (int i = 0; i < rank; ++i)
    if (a[i] != o.a[i]) return a[i] < o.a[i] ? -1 : 1;
  return 0;
}

std::string Deg::str() const {
  if (rank == 1) return std::to_string(a[0]);
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")";
}

bool Mono::is_one() const {
  for (int x : e)
    if (x != 0) return false;
  return true;
}

bool Mono::divides(const Mono& m) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

bool Mono::coprime(const Mono& m) const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0 && m.e[i] > 0) return false;
  return true;
}

Mono Mono::operator*(const Mono& m) const {
  Mono r = *this;
  for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
  return r;
}

Mono Mono::quotient(const Mono& m) const {
  Mono r = *this;
  for (size_t i = 0; i < e.size(); ++i) {
    r.e[i] -= m.e[i];
    require(r.e[i] >= 0, errc::internal, "monomial quotient not integral");
  }
  return r;
}

Mono Mono::lcm(const Mono& x, const Mono& y) {
  Mono r = x;
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(x.e[i], y.e[i]);
  return r;
}

long long Mono::total_exp() const {
  long long s = 0;
  for (int x : e) s += x;
  return s;
}

RingPtr Ring::make(std::vector<std::string> names, std::vector<Deg> weights,
                   FieldPtr field) {
  require(names.size() == weights.size(), errc::bad_input,
          "variable and weight counts differ");
  require(!names.empty(), errc::bad_input, "ring needs at least one variable");
  auto R = std::make_shared<Ring>();
  R->rank_ = weights[0].rank;
  for (const auto& w : weights)
    require(w.rank == R->rank_, errc::bad_input, "mixed grading ranks");
  R->names_ = std::move(names);
  R->weights_ = std::move(weights);
  R->field_ = std::move(field);
  for (int i = 0; i < R->nvars(); ++i) {
    auto [it, fresh] = R->index_.emplace(R->names_[i], i);
    (void)it;
    require(fresh, errc::bad_input, "duplicate variable name '" + R->names_[i] + "'");
  }
  return R;
}

int Ring::var_index(const std::string& n) const {
  auto it = index_.find(n);
  return it == index_.end() ? -1 : it->second;
}

Deg Ring::mono_deg(const Mono& m) const {
  Deg d = Deg::zero(rank_);
  for (int i = 0; i < nvars(); ++i)
    if (m.e[i] != 0) d = d + weights_[i] * m.e[i];
  return d;
}

RingPtr Ring::extended(const std::vector<std::string>& extra_names,
                       const std::vector<Deg>& extra_weights) const {
  auto names = names_;
  auto weights = weights_;
  names.insert(names.end(), extra_names.begin(), extra_names.end());
  weights.insert(weights.end(), extra_weights.begin(), extra_weights.end());
  return make(std::move(names), std::move(weights), field_);
}

RingPtr Ring::subring(const std::vector<int>& keep) const {
  std::vector<std::string> names;
  std::vector<Deg> weights;
  for (int i : keep) {
    names.push_back(names_[i]);
    weights.push_back(weights_[i]);
  }
  return make(std::move(names), std::move(weights), field_);
}

std::string Ring::fresh_name(const std::string& base) const {
  if (var_index(base) < 0) return base;
  for (int k = 0;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (var_index(cand) < 0) return cand;
  }
}

bool Ring::same_structure(const Ring& o) const {
  if (names_ != o.names_ || weights_.size() != o.weights_.size()) return false;
  for (size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] != o.weights_[i]) return false;
  if (!field_ && !o.field_) return true;
  if (!field_ || !o.field_) return false;
  return field_->gen == o.field_->gen && field_->minpoly == o.field_->minpoly;
}

Order Order::elim(std::vector<int> first, int nvars) {
  std::vector<int> in(nvars, 0);
  for (int i : first) in[i] = 1;
  std::vector<int> rest;
  for (int i = 0; i < nvars; ++i)
    if (!in[i]) rest.push_back(i);
  return block_of({std::move(first), std::move(rest)});
}

namespace {

// weighted degree then reverse lexicographic within one variable block.
// order weights are clamped to >= 1 so the comparison stays a well-order even
// when auxiliary variables carry zero or negative grading degrees; positively
// graded rings see plain weighted degrevlex.
int block_cmp(const Ring& R, const Mono& x, const Mono& y,
              const std::vector<int>& vars) {
  long long dx = 0, dy = 0;
  for (int i : vars) {
    long long w = std::max(R.scalar_weight(i), 1LL);
    dx += w * x.e[i];
    dy += w * y.e[i];
  }
  if (dx != dy) return dx < dy ? -1 : 1;
  for (size_t k = vars.size(); k-- > 0;) {
    int i = vars[k];
    if (x.e[i] != y.e[i]) return x.e[i] > y.e[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int Order::cmp(const Ring& R, const Mono& x, const Mono& y) const {
  switch (kind) {
    case Kind::lex:
      for (int i = 0; i < R.nvars(); ++i)
        if (x.e[i] != y.e[i]) return x.e[i] < y.e[i] ? -1 : 1;
      return 0;
    case Kind::wdegrevlex: {
      std::vector<int> all(R.nvars());
      for (int i = 0; i < R.nvars(); ++i) all[i] = i;
      return block_cmp(R, x, y, all);
    }
    case Kind::block:
      for (const auto& b : blocks) {
        int c = block_cmp(R, x, y, b);
        if (c != 0) return c;
      }
      return 0;
  }
  return 0;
}

std::string Order::key() const {
  switch (kind) {
    case Kind::wdegrevlex:
      return "wdrl";
    case Kind::lex:
      return "lex";
    case Kind::block: {
      std::ostringstream os;
      os << "block";
      for (const auto& b : blocks) {
        os << "[";
        for (int i : b) os << i << ",";
        os << "]";
      }
      return os.str();
    }
  }
  return "?";
}

}  // namespace mmp3
