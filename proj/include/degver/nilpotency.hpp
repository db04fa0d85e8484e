// Descending series and nilpotency verdicts.
#pragma once

#include <vector>

#include "degver/algebra.hpp"
#include "degver/matrix.hpp"

namespace degver {

struct NilpotencySeries {
  std::vector<size_t> dims;  // dims[i] = dim of the (i+1)-th term of the series
  bool nilpotent = false;
  int terminated_at = 0;  // smallest m with zero term, when nilpotent
};

namespace detail {
inline bool vec_is_zero(const std::vector<RationalFunction>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
}  // namespace detail

/// Computes the descending series: term n is spanned by all bracket values
/// [S_i, S_j] with i+j = n plus, for Lie-Yamaguti and Bol algebras, all
/// [S_i, S_j, S_k] with i+j+k = n+1. Compatible Lie algebras use both
/// bilinear brackets instead of a trilinear one. Dimensions use generic rank
/// over the parameter field.
inline NilpotencySeries nilpotency_series(const AlgebraPresentation& a, int bound) {
  if (bound < 2) throw std::invalid_argument("nilpotency bound must be at least 2");
  using Vec = std::vector<RationalFunction>;
  int n = a.dim;
  NilpotencySeries out;
  std::vector<std::vector<Vec>> bases(bound + 1);
  bases[1] = a.basis_vectors();
  out.dims.push_back(bases[1].size());

  std::vector<const MultilinearTensor*> bilinear;
  const MultilinearTensor* trilinear = nullptr;
  if (a.kind == Kind::CompatibleLie) {
    bilinear = {&a.ops[0], &a.ops[1]};
  } else {
    bilinear = {&a.ops[0]};
    trilinear = &a.ops[1];
  }

  for (int level = 2; level <= bound; ++level) {
    std::vector<Vec> span;
    for (int i = 1; i < level; ++i) {
      int j = level - i;
      for (const auto& u : bases[i])
        for (const auto& v : bases[j])
          for (const auto* op : bilinear) {
            Vec w = op->apply({u, v});
            if (!detail::vec_is_zero(w)) span.push_back(std::move(w));
          }
    }
    if (trilinear) {
      for (int i = 1; i <= level - 1; ++i)
        for (int j = 1; j <= level - i; ++j) {
          int k = level + 1 - i - j;
          if (k < 1) continue;
          for (const auto& u : bases[i])
            for (const auto& v : bases[j])
              for (const auto& w : bases[k]) {
                Vec r = trilinear->apply({u, v, w});
                if (!detail::vec_is_zero(r)) span.push_back(std::move(r));
              }
        }
    }
    if (span.empty()) {
      out.dims.push_back(0);
      out.nilpotent = true;
      out.terminated_at = level;
      return out;
    }
    Matrix<RationalFunction> m(span.size(), n);
    for (size_t r = 0; r < span.size(); ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = span[r][c];
    RrefResult<RationalFunction> red = rref(std::move(m));
    bases[level].clear();
    for (size_t r = 0; r < red.rank; ++r) bases[level].push_back(red.reduced.row(r));
    out.dims.push_back(red.rank);
    if (red.rank == 0) {
      out.nilpotent = true;
      out.terminated_at = level;
      return out;
    }
  }
  return out;
}

}  // namespace degver
