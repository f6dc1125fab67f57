#pragma once

#include <string>
#include <vector>

#include "depthlab/homological.hpp"

namespace depthlab {

// Subring of k[x_1..x_d] generated by the degree-n monomials, presented on
// one variable per monomial via toric elimination. The dictionary maps each
// presentation variable to its exponent vector.
struct VeroneseRing {
  int d = 0;
  int n = 0;
  RingPtr ring;
  std::vector<Monomial> dictionary;  // exponent vectors in the d model variables

  int nvars() const { return static_cast<int>(dictionary.size()); }
};

VeroneseRing veronese_ring(int d, int n, int max_vars = 15);

struct ClassRep {
  int index = 0;
  ModulePresentation module;
};

// The ideal generated by the variables whose monomial is divisible by
// x_1^i; index 0 is the free module R.
ClassRep class_rep(const VeroneseRing& V, int i);

struct MuFormulaReport {
  int index = 0;
  int computed = 0;
  mpz_class predicted;          // count of degree n-i monomials
  mpz_class displayed_formula;  // the factorial-quotient reading
  bool agree = false;
  bool display_matches = false;
};
MuFormulaReport mu_formula_check(const VeroneseRing& V, int i);

struct ReflexiveProductReport {
  bool reflexive = false;
  bool consistent = false;  // not reflexive, or one factor is free
};
ReflexiveProductReport reflexive_product_test(const VeroneseRing& V, int i, int j);

// Exhaustive integer sweep confirming that the generator-count identity
// mu(L^i) mu(L^j) = mu(L^h) has no solution with 0 < i <= j < n, i + j >= n,
// including the binomial-coincidence reading.
bool binomial_unimodality_check(int d, int n);

struct ScanItem {
  int index = 0;
  bool semidualizing = false;
  bool is_canonical_class = false;
};

struct ClassGroupScan {
  std::vector<ScanItem> items;
  int canonical_index = 0;  // 0 when the canonical module is free
  bool canonical_free = false;
  // pass set equals {0} for Gorenstein, {0, canonical index} otherwise
  bool consistent = false;
};
ClassGroupScan class_group_scan(const VeroneseRing& V, int bound);

}  // namespace depthlab
