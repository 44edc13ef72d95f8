#pragma once
// independent cross-check for ideal membership: a homogeneous polynomial of
// degree d lies in a homogeneous ideal iff it is a rational linear
// combination of {mono * gen} of degree d.  pure linear algebra over Q, no
// basis computation involved.
#include <map>
#include <vector>

#include "mmp3/ideal.hpp"

namespace testaux {

using namespace mmp3;

inline void monos_of_weight(const Ring& R, long long d, int from, Mono cur,
                            std::vector<Mono>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < R.nvars(); ++i) {
    long long w = R.scalar_weight(i);
    if (w <= 0 || w > d) continue;
    Mono next = cur;
    next.e[i] += 1;
    monos_of_weight(R, d - w, i, next, out);
  }
}

inline std::vector<Mono> monos_of_weight(const Ring& R, long long d) {
  std::vector<Mono> out;
  monos_of_weight(R, d, 0, Mono::one(R.nvars()), out);
  return out;
}

// row-reduce rows in place (rational Gauss), returning the rank
inline int row_reduce(std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols; ++c) {
    int pivot = -1;
    for (size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rat inv = 1 / rows[rank][c];
    for (size_t k = c; k < cols; ++k) rows[rank][k] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      Rat f = rows[r][c];
      for (size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

// membership of homogeneous p (degree d) in the homogeneous ideal I, decided
// by comparing the rank of the degree-d slice with and without p
inline bool member_by_linalg(const Ideal& I, const Poly& p) {
  const Ring& R = *I.ring();
  long long d = R.mono_deg(p.lead_mono()).total();
  std::vector<Mono> basis = monos_of_weight(R, d);
  std::map<std::vector<int>, int> col;
  for (size_t i = 0; i < basis.size(); ++i) col[basis[i].e] = static_cast<int>(i);

  auto to_row = [&](const Poly& q) {
    std::vector<Rat> row(basis.size(), Rat(0));
    for (const auto& tc : q.terms()) row[col.at(tc.first.e)] = tc.second.rational_part();
    return row;
  };

  std::vector<std::vector<Rat>> rows;
  for (const auto& g : I.gens()) {
    long long gd = R.mono_deg(g.lead_mono()).total();
    if (gd > d) continue;
    for (const auto& m : monos_of_weight(R, d - gd))
      rows.push_back(to_row(g.mono_mult(m, Scalar(1))));
  }
  int rank_without = row_reduce(rows);
  rows.push_back(to_row(p));
  int rank_with = row_reduce(rows);
  return rank_with == rank_without;
}

}  // namespace testaux
