#pragma once

#include <string>
#include <vector>

#include "depthlab/module.hpp"

namespace depthlab {

// Minimal graded free resolution: finite over the ambient polynomial ring,
// truncated at a bound over the quotient. maps[i] holds the columns of
// d_{i+1}: F_{i+1} -> F_i; degrees[i] the generator degrees of F_i.
struct FreeResolution {
  enum class Over { ambient, quotient };
  Over over = Over::quotient;
  RingPtr ring;  // coefficients live in ring (already the ambient ring for Over::ambient)
  std::vector<std::vector<int>> degrees;
  std::vector<std::vector<FreeElement>> maps;
  bool terminated = false;
  bool minimal = true;

  // highest homological index with computed generators
  int length() const { return static_cast<int>(degrees.size()) - 1; }
  int betti(int i) const;
  // betti numbers beta_0 .. beta_length
  std::vector<int> betti_row() const;
  // graded table as (homological index, internal degree, count) triples
  std::vector<std::vector<std::pair<int, int>>> graded_betti() const;
};

// Resolve to homological index `bound` (or to termination); results are
// cached on the module and extended on demand.
FreeResolution resolve(const ModulePresentation& M, int bound,
                       FreeResolution::Over over = FreeResolution::Over::quotient);

// Projective dimension over the ambient polynomial ring.
int pd_ambient(const ModulePresentation& M);

// Aligned text of the Betti table (rows = degree slope, columns =
// homological degree).
std::string betti_text(const FreeResolution& res);

struct ComplexityEstimate {
  int window_lo = 0;
  int window_hi = 0;
  enum class Verdict { zero, bounded, polynomial, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  int degree = 0;  // poly growth degree r (verdict == polynomial)
  mpq_class gamma;
  bool periodicity_certified = false;

  std::string to_string() const;
};

// Betti-window complexity estimate; exact (cx in {0,1}) only when the
// resolution terminates or a period-2 repetition of consecutive matrices is
// detected, estimates otherwise.
ComplexityEstimate complexity_estimate(const ModulePresentation& M, int bound);

}  // namespace depthlab
