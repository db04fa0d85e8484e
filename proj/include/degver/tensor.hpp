// Structure-constant tensors, antisymmetric in the first two arguments.
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <vector>

#include "degver/rational_function.hpp"

namespace degver {

/// Index tuple of a structure constant: (i, j, k) for a bilinear product
/// ([e_i, e_j] -> e_k component), (i, j, k, l) for a trilinear one. 1-based.
using TensorIndex = std::array<int, 4>;  // unused trailing slots are 0

/// Multilinear structure-constant tensor of arity 2 or 3, antisymmetric in
/// its first two arguments. Only canonical tuples (first index < second) are
/// stored; lookups resolve the rest by the sign rule, diagonal pairs are 0.
class MultilinearTensor {
 public:
  MultilinearTensor() = default;
  MultilinearTensor(int arity, int dim) : arity_(arity), dim_(dim) {
    if (arity != 2 && arity != 3) throw std::invalid_argument("tensor arity must be 2 or 3");
  }

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  bool is_zero() const { return c_.empty(); }

  /// Accumulates a constant; non-canonical first pairs are folded in with a
  /// sign flip, diagonal first pairs must carry a zero coefficient.
  void add_constant(const TensorIndex& idx, const RationalFunction& coeff) {
    check_range(idx);
    if (coeff.is_zero()) return;
    TensorIndex k = idx;
    RationalFunction c = coeff;
    if (k[0] == k[1]) throw std::invalid_argument("nonzero constant on a diagonal first pair");
    if (k[0] > k[1]) {
      std::swap(k[0], k[1]);
      c = -c;
    }
    auto [it, inserted] = c_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  /// Lookup with the antisymmetry rule applied.
  RationalFunction constant(const TensorIndex& idx) const {
    check_range(idx);
    TensorIndex k = idx;
    bool flip = false;
    if (k[0] == k[1]) return RationalFunction();
    if (k[0] > k[1]) {
      std::swap(k[0], k[1]);
      flip = true;
    }
    auto it = c_.find(k);
    if (it == c_.end()) return RationalFunction();
    return flip ? -it->second : it->second;
  }

  /// Canonical stored entries (first index < second).
  const std::map<TensorIndex, RationalFunction>& canonical() const { return c_; }

  /// Multilinear product of coefficient vectors (length = dim each).
  std::vector<RationalFunction> apply(const std::vector<std::vector<RationalFunction>>& args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw std::invalid_argument("tensor apply: argument count != arity");
    for (const auto& a : args)
      if (static_cast<int>(a.size()) != dim_)
        throw std::invalid_argument("tensor apply: vector length != dim");
    std::vector<RationalFunction> out(dim_, RationalFunction());
    const auto& x = args[0];
    const auto& y = args[1];
    for (const auto& [k, c] : c_) {
      int i = k[0] - 1, j = k[1] - 1;
      RationalFunction pair = x[i] * y[j] - x[j] * y[i];
      if (pair.is_zero()) continue;
      if (arity_ == 2) {
        out[k[2] - 1] += pair * c;
      } else {
        const RationalFunction& z = args[2][k[2] - 1];
        if (z.is_zero()) continue;
        out[k[3] - 1] += pair * z * c;
      }
    }
    return out;
  }

  MultilinearTensor substitute(const std::map<std::string, RationalFunction>& at) const {
    MultilinearTensor t(arity_, dim_);
    for (const auto& [k, c] : c_) t.add_constant(k, c.substitute(at));
    return t;
  }

  friend bool operator==(const MultilinearTensor& a, const MultilinearTensor& b) {
    return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  friend bool operator!=(const MultilinearTensor& a, const MultilinearTensor& b) {
    return !(a == b);
  }

  /// Canonical tuples where the two tensors differ, with both values.
  std::vector<std::tuple<TensorIndex, RationalFunction, RationalFunction>> diff(
      const MultilinearTensor& other) const {
    std::vector<std::tuple<TensorIndex, RationalFunction, RationalFunction>> out;
    auto record = [&](const TensorIndex& k) {
      RationalFunction a = constant(k), b = other.constant(k);
      if (a != b) out.emplace_back(k, a, b);
    };
    for (const auto& [k, c] : c_) record(k);
    for (const auto& [k, c] : other.c_)
      if (c_.find(k) == c_.end()) record(k);
    return out;
  }

 private:
  void check_range(const TensorIndex& idx) const {
    int used = arity_ + 1;
    for (int s = 0; s < 4; ++s) {
      if (s < used) {
        if (idx[s] < 1 || idx[s] > dim_) throw std::out_of_range("tensor index out of range");
      } else if (idx[s] != 0) {
        throw std::out_of_range("unused tensor index slot must be 0");
      }
    }
  }

  int arity_ = 2;
  int dim_ = 0;
  std::map<TensorIndex, RationalFunction> c_;
};

}  // namespace degver
