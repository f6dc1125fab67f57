#include "depthlab/field.hpp"

namespace depthlab {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(unsigned long p) {
  if (!is_prime(p)) fail("InvalidField", "characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::prime_field, p};
}

Scalar FieldSpec::normalize(const Scalar& a) const {
  Scalar r = a;
  r.canonicalize();
  if (kind == FieldKind::prime_field) {
    mpz_class p(static_cast<unsigned long>(characteristic));
    // r = num/den with den invertible mod p
    mpz_class den = r.get_den();
    mpz_class num = r.get_num();
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      fail("InvalidField", "denominator not invertible mod " + std::to_string(characteristic));
    mpz_class v = (num % p) * dinv % p;
    if (v < 0) v += p;
    r = Scalar(v);
  }
  return r;
}

Scalar FieldSpec::inv(const Scalar& a) const {
  Scalar n = normalize(a);
  if (n == 0) fail("DivisionByZero", "inverse of zero");
  if (kind == FieldKind::prime_field) {
    mpz_class p(static_cast<unsigned long>(characteristic));
    mpz_class v = n.get_num();
    mpz_class vinv;
    mpz_invert(vinv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    if (vinv < 0) vinv += p;
    return Scalar(vinv);
  }
  return Scalar(1) / n;
}

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::rationals) return "QQ";
  return "GF(" + std::to_string(characteristic) + ")";
}

}  // namespace depthlab
