#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "depthlab/error.hpp"

namespace depthlab {

// Exponent vector; the number of entries always equals the ambient variable
// count of the ring the monomial belongs to.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }
  bool is_one() const {
    for (int e : exps)
      if (e != 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return exps != o.exps; }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.exps[i] += o.exps[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
      if (exps[i] > o.exps[i]) return false;
    return true;
  }

  // Quotient this/other; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.exps[i] -= o.exps[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars(); ++i)
      if (b.exps[i] > r.exps[i]) r.exps[i] = b.exps[i];
    return r;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < a.nvars(); ++i)
      if (b.exps[i] < r.exps[i]) r.exps[i] = b.exps[i];
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
      if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
  }
};

// Base orders are degree-refined reverse lexicographic and pure
// lexicographic. A positive block_split makes variables [0, split) an
// elimination block: slices are compared block by block, each by the base
// order. Both variants are total multiplicative well-orders.
struct MonoOrder {
  enum class Base { grevlex, lex };
  Base base = Base::grevlex;
  int block_split = 0;  // 0 = single block

  // -1 / 0 / +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (block_split > 0) {
      int c = compare_slice(a, b, 0, block_split);
      if (c != 0) return c;
      return compare_slice(a, b, block_split, a.nvars());
    }
    return compare_slice(a, b, 0, a.nvars());
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  bool operator==(const MonoOrder& o) const {
    return base == o.base && block_split == o.block_split;
  }

 private:
  int compare_slice(const Monomial& a, const Monomial& b, int lo, int hi) const {
    if (base == Base::grevlex) {
      int da = 0, db = 0;
      for (int i = lo; i < hi; ++i) {
        da += a.exps[i];
        db += b.exps[i];
      }
      if (da != db) return da < db ? -1 : 1;
      for (int i = hi - 1; i >= lo; --i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
      }
      return 0;
    }
    for (int i = lo; i < hi; ++i) {
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
    }
    return 0;
  }
};

}  // namespace depthlab
