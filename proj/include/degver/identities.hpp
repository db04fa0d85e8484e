// Defining-identity checks for Lie-Yamaguti, Bol, and compatible Lie algebras.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "degver/algebra.hpp"

namespace degver {

namespace detail {

using Vec = std::vector<RationalFunction>;

inline Vec vadd(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

inline Vec vsub(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

inline bool vzero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Basis-product tables for one algebra: B[i][j] = [e_i, e_j] and, when a
/// trilinear bracket is present, T[i][j][k] = [e_i, e_j, e_k].
struct BasisProducts {
  std::vector<Vec> basis;
  std::vector<std::vector<Vec>> B;
  std::vector<std::vector<std::vector<Vec>>> T;
};

inline BasisProducts basis_products(const AlgebraPresentation& a, const MultilinearTensor& bil,
                                    const MultilinearTensor* tril) {
  BasisProducts p;
  int n = a.dim;
  p.basis = a.basis_vectors();
  p.B.assign(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.B[i][j] = bil.apply({p.basis[i], p.basis[j]});
  if (tril) {
    p.T.assign(n, std::vector<std::vector<Vec>>(n, std::vector<Vec>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          p.T[i][j][k] = tril->apply({p.basis[i], p.basis[j], p.basis[k]});
  }
  return p;
}

}  // namespace detail

/// One identity's outcome; failed checks carry the first violating basis
/// tuple, the coordinate, and the nonzero residual.
struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::vector<int> witness;  // 1-based basis indices
  int coordinate = 0;        // 1-based
  RationalFunction residual;
};

struct IdentityReport {
  std::string algebra_id;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const IdentityCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

/// Expands a multilinear identity over all basis tuples; records the first
/// violation, if any.
inline IdentityCheck expand_identity(const std::string& name, int slots, int dim,
                                     const std::function<Vec(const std::vector<int>&)>& residual) {
  IdentityCheck out;
  out.name = name;
  std::vector<int> tuple(slots, 0);
  for (;;) {
    Vec r = residual(tuple);
    for (int c = 0; c < dim; ++c) {
      if (!r[c].is_zero()) {
        out.passed = false;
        out.witness.assign(tuple.begin(), tuple.end());
        for (auto& w : out.witness) ++w;
        out.coordinate = c + 1;
        out.residual = r[c];
        return out;
      }
    }
    int s = slots - 1;
    while (s >= 0 && tuple[s] == dim - 1) tuple[s--] = 0;
    if (s < 0) break;
    ++tuple[s];
  }
  return out;
}

}  // namespace detail

/// Checks the defining identities of the algebra's variety with parameters
/// symbolic: LY1-LY6, B1-B5, or the two Jacobi identities plus the mixed
/// compatibility identity.
inline IdentityReport check_identities(const AlgebraPresentation& a) {
  using detail::Vec;
  IdentityReport rep;
  rep.algebra_id = a.id;
  int n = a.dim;

  if (a.kind == Kind::CompatibleLie) {
    const MultilinearTensor& b1 = a.ops[0];
    const MultilinearTensor& b2 = a.ops[1];
    auto p1 = detail::basis_products(a, b1, nullptr);
    auto p2 = detail::basis_products(a, b2, nullptr);
    auto jacobi = [&](const MultilinearTensor& br, detail::BasisProducts& p,
                      const std::vector<int>& t) {
      return detail::vadd(detail::vadd(br.apply({p.B[t[0]][t[1]], p.basis[t[2]]}),
                                       br.apply({p.B[t[1]][t[2]], p.basis[t[0]]})),
                          br.apply({p.B[t[2]][t[0]], p.basis[t[1]]}));
    };
    rep.checks.push_back(detail::expand_identity(
        "Jacobi-bracket1", 3, n, [&](const std::vector<int>& t) { return jacobi(b1, p1, t); }));
    rep.checks.push_back(detail::expand_identity(
        "Jacobi-bracket2", 3, n, [&](const std::vector<int>& t) { return jacobi(b2, p2, t); }));
    rep.checks.push_back(detail::expand_identity(
        "Compatibility", 3, n, [&](const std::vector<int>& t) {
          Vec r = b2.apply({p1.B[t[0]][t[1]], p1.basis[t[2]]});
          r = detail::vadd(r, b2.apply({p1.B[t[1]][t[2]], p1.basis[t[0]]}));
          r = detail::vadd(r, b2.apply({p1.B[t[2]][t[0]], p1.basis[t[1]]}));
          r = detail::vadd(r, b1.apply({p2.B[t[0]][t[1]], p2.basis[t[2]]}));
          r = detail::vadd(r, b1.apply({p2.B[t[1]][t[2]], p2.basis[t[0]]}));
          r = detail::vadd(r, b1.apply({p2.B[t[2]][t[0]], p2.basis[t[1]]}));
          return r;
        }));
    return rep;
  }

  const MultilinearTensor& bil = a.ops[0];
  const MultilinearTensor& tril = a.ops[1];
  auto p = detail::basis_products(a, bil, &tril);
  const auto& B = p.B;
  const auto& T = p.T;
  const auto& e = p.basis;

  auto antisym2 = [&](const std::vector<int>& t) {
    return detail::vadd(B[t[0]][t[1]], B[t[1]][t[0]]);
  };
  auto antisym3 = [&](const std::vector<int>& t) {
    return detail::vadd(T[t[0]][t[1]][t[2]], T[t[1]][t[0]][t[2]]);
  };
  auto cyclic3 = [&](const std::vector<int>& t) {
    return detail::vadd(detail::vadd(T[t[0]][t[1]][t[2]], T[t[1]][t[2]][t[0]]),
                        T[t[2]][t[0]][t[1]]);
  };
  auto leibniz_tt = [&](const std::vector<int>& t) {
    // slots (u, v, x, y, z)
    int u = t[0], v = t[1], x = t[2], y = t[3], z = t[4];
    Vec r = tril.apply({e[u], e[v], T[x][y][z]});
    r = detail::vsub(r, tril.apply({T[u][v][x], e[y], e[z]}));
    r = detail::vsub(r, tril.apply({e[x], T[u][v][y], e[z]}));
    r = detail::vsub(r, tril.apply({e[x], e[y], T[u][v][z]}));
    return r;
  };

  if (a.kind == Kind::LieYamaguti) {
    rep.checks.push_back(detail::expand_identity("LY1", 2, n, antisym2));
    rep.checks.push_back(detail::expand_identity("LY2", 3, n, antisym3));
    rep.checks.push_back(detail::expand_identity("LY3", 3, n, [&](const std::vector<int>& t) {
      Vec r = cyclic3(t);
      r = detail::vadd(r, bil.apply({B[t[0]][t[1]], e[t[2]]}));
      r = detail::vadd(r, bil.apply({B[t[1]][t[2]], e[t[0]]}));
      r = detail::vadd(r, bil.apply({B[t[2]][t[0]], e[t[1]]}));
      return r;
    }));
    rep.checks.push_back(detail::expand_identity("LY4", 4, n, [&](const std::vector<int>& t) {
      Vec r = tril.apply({B[t[0]][t[1]], e[t[2]], e[t[3]]});
      r = detail::vadd(r, tril.apply({B[t[1]][t[2]], e[t[0]], e[t[3]]}));
      r = detail::vadd(r, tril.apply({B[t[2]][t[0]], e[t[1]], e[t[3]]}));
      return r;
    }));
    rep.checks.push_back(detail::expand_identity("LY5", 4, n, [&](const std::vector<int>& t) {
      // slots (x, y, u, v)
      Vec r = tril.apply({e[t[0]], e[t[1]], B[t[2]][t[3]]});
      r = detail::vsub(r, bil.apply({T[t[0]][t[1]][t[2]], e[t[3]]}));
      r = detail::vsub(r, bil.apply({e[t[2]], T[t[0]][t[1]][t[3]]}));
      return r;
    }));
    rep.checks.push_back(detail::expand_identity("LY6", 5, n, leibniz_tt));
  } else {  // Bol
    rep.checks.push_back(detail::expand_identity("B1", 2, n, antisym2));
    rep.checks.push_back(detail::expand_identity("B2", 3, n, antisym3));
    rep.checks.push_back(detail::expand_identity("B3", 3, n, cyclic3));
    rep.checks.push_back(detail::expand_identity("B4", 5, n, leibniz_tt));
    rep.checks.push_back(detail::expand_identity("B5", 4, n, [&](const std::vector<int>& t) {
      // slots (x, y, z, w)
      int x = t[0], y = t[1], z = t[2], w = t[3];
      Vec r = bil.apply({T[x][y][z], e[w]});
      r = detail::vsub(r, bil.apply({T[x][y][w], e[z]}));
      r = detail::vadd(r, tril.apply({e[z], e[w], B[x][y]}));
      r = detail::vsub(r, tril.apply({e[x], e[y], B[z][w]}));
      r = detail::vadd(r, bil.apply({B[x][y], B[z][w]}));
      return r;
    }));
  }
  return rep;
}

/// Flags from the structure of the two brackets: a pure-bilinear entry that
/// satisfies Jacobi is a Lie algebra; a pure-trilinear entry satisfying
/// B2-B4 is a Lie triple system.
struct SpecialFlags {
  bool is_lie = false;
  bool is_lie_triple_system = false;
};

inline SpecialFlags classify_special(const AlgebraPresentation& a) {
  if (a.kind == Kind::CompatibleLie)
    throw std::invalid_argument("classify_special expects a Lie-Yamaguti or Bol presentation");
  using detail::Vec;
  SpecialFlags f;
  int n = a.dim;
  const MultilinearTensor& bil = a.ops[0];
  const MultilinearTensor& tril = a.ops[1];
  auto p = detail::basis_products(a, bil, &tril);
  if (tril.is_zero()) {
    auto jac = detail::expand_identity("Jacobi", 3, n, [&](const std::vector<int>& t) {
      Vec r = bil.apply({p.B[t[0]][t[1]], p.basis[t[2]]});
      r = detail::vadd(r, bil.apply({p.B[t[1]][t[2]], p.basis[t[0]]}));
      r = detail::vadd(r, bil.apply({p.B[t[2]][t[0]], p.basis[t[1]]}));
      return r;
    });
    f.is_lie = jac.passed;
  }
  if (bil.is_zero()) {
    auto b2 = detail::expand_identity("B2", 3, n, [&](const std::vector<int>& t) {
      return detail::vadd(p.T[t[0]][t[1]][t[2]], p.T[t[1]][t[0]][t[2]]);
    });
    auto b3 = detail::expand_identity("B3", 3, n, [&](const std::vector<int>& t) {
      return detail::vadd(detail::vadd(p.T[t[0]][t[1]][t[2]], p.T[t[1]][t[2]][t[0]]),
                          p.T[t[2]][t[0]][t[1]]);
    });
    auto b4 = detail::expand_identity("B4", 5, n, [&](const std::vector<int>& t) {
      int u = t[0], v = t[1], x = t[2], y = t[3], z = t[4];
      Vec r = tril.apply({p.basis[u], p.basis[v], p.T[x][y][z]});
      r = detail::vsub(r, tril.apply({p.T[u][v][x], p.basis[y], p.basis[z]}));
      r = detail::vsub(r, tril.apply({p.basis[x], p.T[u][v][y], p.basis[z]}));
      r = detail::vsub(r, tril.apply({p.basis[x], p.basis[y], p.T[u][v][z]}));
      return r;
    });
    f.is_lie_triple_system = b2.passed && b3.passed && b4.passed;
  }
  return f;
}

}  // namespace degver
