#pragma once

#include <gmpxx.h>

#include <string>

#include "depthlab/error.hpp"

namespace depthlab {

// Scalars are GMP rationals throughout. Over a prime field the value is an
// integer representative in [0, p); every arithmetic helper renormalizes.
using Scalar = mpq_class;

enum class FieldKind { rationals, prime_field };

struct FieldSpec {
  FieldKind kind = FieldKind::rationals;
  unsigned long characteristic = 0;  // 0 for the rationals, p otherwise

  static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }

  static FieldSpec prime_field(unsigned long p);

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && characteristic == o.characteristic;
  }

  bool is_rationals() const { return kind == FieldKind::rationals; }

  // Canonical representative: reduced fraction over QQ, integer in [0,p)
  // over GF(p).
  Scalar normalize(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string() const;
};

}  // namespace depthlab
