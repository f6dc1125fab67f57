#pragma once

#include <gmpxx.h>

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "depthlab/groebner.hpp"

namespace depthlab {

inline constexpr int kDimZeroModule = std::numeric_limits<int>::min();  // dim of the zero module

// Hilbert series as numerator/(1-t)^nvars with a Laurent-polynomial
// numerator (generator twists can push support into negative degrees).
struct HilbertSeries {
  std::map<int, mpz_class> num;
  int nvars = 0;

  bool is_zero() const { return num.empty(); }

  // Krull dimension of the module (pole order at t = 1); kDimZeroModule for
  // the zero module.
  int dim() const;

  // Normalized leading coefficient e with HF(d) ~ e d^(dim-1)/(dim-1)!.
  mpz_class multiplicity() const;

  // Coefficient of t^d in the expansion.
  mpz_class hf(int d) const;

  // Sum of all coefficients; only valid when dim <= 0.
  mpz_class length() const;

  // Degrees outside of which hf vanishes (valid when dim <= 0).
  std::pair<int, int> finite_support() const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  HilbertSeries shifted(int by) const;

  bool operator==(const HilbertSeries& o) const { return nvars == o.nvars && num == o.num; }

  std::string to_string() const;
};

mpz_class binomial(long n, long k);

// Numerator of the Hilbert series of a free module (with component twists)
// modulo a monomial submodule given by the lead terms of a Groebner basis.
HilbertSeries hilbert_from_leads(int nvars, const std::vector<LeadTerm>& leads, int rank,
                                 const std::vector<int>& comp_degrees);

// Convenience: series of coker(relations) over ambient/(ideal_basis).
HilbertSeries hilbert_of_quotient_module(const PolyRingPtr& ring,
                                         const std::vector<FreeElement>& relations, int rank,
                                         const std::vector<int>& comp_degrees,
                                         const std::vector<Polynomial>& ideal_basis);

}  // namespace depthlab
