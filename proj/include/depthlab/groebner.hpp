#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "depthlab/polynomial.hpp"

namespace depthlab {

// Element of a free module R^rank with polynomial coordinates. The zero
// element of rank 0 is legal (rank tracks the ambient free module, not the
// support).
struct FreeElement {
  PolyRingPtr ring;
  int rank = 0;
  std::vector<Polynomial> coords;

  FreeElement() = default;
  FreeElement(PolyRingPtr r, int rk) : ring(std::move(r)), rank(rk) {
    coords.assign(rank, Polynomial(ring));
  }
  FreeElement(PolyRingPtr r, std::vector<Polynomial> c)
      : ring(std::move(r)), rank(static_cast<int>(c.size())), coords(std::move(c)) {}

  bool is_zero() const {
    for (const auto& p : coords)
      if (!p.is_zero()) return false;
    return true;
  }

  // Degree of a homogeneous element given component degrees; -1 if zero.
  int degree(const std::vector<int>& comp_degrees) const;
  bool is_homogeneous(const std::vector<int>& comp_degrees) const;

  FreeElement operator+(const FreeElement& o) const;
  FreeElement operator-(const FreeElement& o) const;
  FreeElement times_monomial(const Monomial& m, const Scalar& c) const;
  FreeElement times(const Polynomial& f) const;
  FreeElement scaled(const Scalar& c) const;
  bool operator==(const FreeElement& o) const { return coords == o.coords; }
  std::string to_string() const;
};

// Order on module terms (component, monomial). Always term-over-position
// with lower components breaking ties upward (e_0 > e_1 > ...). A positive
// component split makes components [0, split) dominate the rest, which is
// the elimination order used for syzygy and lifting computations.
struct ModuleOrder {
  MonoOrder mono;
  int comp_split = 0;

  int compare(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
    if (comp_split > 0) {
      bool lo1 = c1 < comp_split, lo2 = c2 < comp_split;
      if (lo1 != lo2) return lo1 ? 1 : -1;
    }
    int c = mono.compare(m1, m2);
    if (c != 0) return c;
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
  }
};

struct LeadTerm {
  int comp = -1;  // -1 for the zero element
  Monomial mono;
  Scalar coef;
};

LeadTerm lead_term(const FreeElement& v, const ModuleOrder& order);

// Reduced Groebner basis of a submodule of R^rank (rank 1 = ideal case):
// monic, inter-reduced, sorted descending by lead term; unique for a given
// (ring, order, submodule).
struct GroebnerBasis {
  PolyRingPtr ring;
  int rank = 1;
  ModuleOrder order;
  std::vector<FreeElement> elements;
  std::vector<LeadTerm> leads;  // parallel to elements
  bool reduced = true;
};

// `presumed_gb` entries participate as generators but pairs among them are
// skipped; the caller guarantees that set is already a Groebner basis (used
// for the quotient-ideal satellites I*e_j when computing over R = S/I).
GroebnerBasis groebner_basis(const PolyRingPtr& ring, int rank, std::vector<FreeElement> gens,
                             const ModuleOrder& order, std::vector<FreeElement> presumed_gb = {},
                             const std::vector<int>& comp_degrees = {});

// Full normal form: no term of the result is divisible by any lead of G.
FreeElement normal_form(FreeElement v, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

bool in_submodule(const FreeElement& v, const GroebnerBasis& G);

// -------- quotient-aware submodule operations --------
// `ideal_basis` is the reduced Groebner basis of the ring's quotient ideal
// (empty over the ambient polynomial ring). Results have coordinates in
// normal form modulo that ideal.

// Satellite generators ideal_basis * e_j for j < rank.
std::vector<FreeElement> ideal_satellites(const PolyRingPtr& ring, int rank,
                                          const std::vector<Polynomial>& ideal_basis);

// Reduced GB of <gens> + ideal*R^rank, suitable for membership tests over
// the quotient ring.
GroebnerBasis submodule_gb(const PolyRingPtr& ring, int rank, const std::vector<FreeElement>& gens,
                           const std::vector<Polynomial>& ideal_basis,
                           const std::vector<int>& comp_degrees = {});

// Generators of the syzygy module {a in R^m : sum a_i gens_i = 0 over R}.
std::vector<FreeElement> syzygies(const PolyRingPtr& ring, int rank,
                                  const std::vector<FreeElement>& gens,
                                  const std::vector<Polynomial>& ideal_basis,
                                  const std::vector<int>& comp_degrees = {});

// Coefficient vector a with v = sum a_i gens_i over the quotient ring, or
// nullopt when v is not in the submodule.
std::optional<std::vector<Polynomial>> lift(const PolyRingPtr& ring, int rank,
                                            const FreeElement& v,
                                            const std::vector<FreeElement>& gens,
                                            const std::vector<Polynomial>& ideal_basis);

// (I : J) over the quotient ring.
std::vector<Polynomial> ideal_quotient(const PolyRingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J,
                                       const std::vector<Polynomial>& ideal_basis);

std::vector<Polynomial> ideal_intersect(const PolyRingPtr& ring, const std::vector<Polynomial>& I,
                                        const std::vector<Polynomial>& J,
                                        const std::vector<Polynomial>& ideal_basis);

// Generators of N : f^infinity, stabilization detected by reduced-GB
// equality. f must be nonzero.
std::vector<FreeElement> saturate(const PolyRingPtr& ring, int rank,
                                  const std::vector<FreeElement>& N, const Polynomial& f,
                                  const std::vector<Polynomial>& ideal_basis);

// Generators of the elimination ideal I ∩ k[keep] (ambient ring only).
std::vector<Polynomial> eliminate(const PolyRingPtr& ring, const std::vector<Polynomial>& I,
                                  const std::vector<bool>& keep);

}  // namespace depthlab
