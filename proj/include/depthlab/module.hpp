#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "depthlab/ring.hpp"

namespace depthlab {

struct FreeResolution;
class ModulePresentation;
struct MinimalPresentation;
MinimalPresentation minimal_presentation(const ModulePresentation& M);

// Finitely generated graded module over R = S/I, presented by generators
// with degrees and homogeneous relation columns (entries kept in normal
// form modulo the quotient basis). Value type; copies share the underlying
// data and its lazily computed caches.
class ModulePresentation {
 public:
  ModulePresentation() = default;

  static ModulePresentation zero(const RingPtr& R);
  static ModulePresentation free_module(const RingPtr& R, int rank,
                                        std::vector<int> degrees = {});
  static ModulePresentation from_relations(const RingPtr& R, int ngens,
                                           std::vector<int> gen_degrees,
                                           std::vector<FreeElement> relations,
                                           bool known_minimal = false);
  // Submodule of R generated by the given polynomials, as an abstract module.
  static ModulePresentation ideal(const RingPtr& R, const std::vector<Polynomial>& gens);
  // R/m.
  static ModulePresentation residue_field(const RingPtr& R);

  bool valid() const { return static_cast<bool>(d_); }
  const RingPtr& ring() const;
  int ngens() const;
  const std::vector<int>& gen_degrees() const;
  const std::vector<FreeElement>& relations() const;
  bool known_minimal() const;

  const GroebnerBasis& relations_gb() const;
  const HilbertSeries& hilbert() const;
  bool is_zero() const { return hilbert().is_zero(); }

  bool same_presentation(const ModulePresentation& o) const { return d_ == o.d_; }

  std::string describe() const;

  // internal cache access for the resolution engine
  std::shared_ptr<FreeResolution>& resolution_slot(bool ambient) const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;

  friend MinimalPresentation minimal_presentation(const ModulePresentation& M);
};

// Degree-zero homomorphism between presented modules, stored as one image
// column per source generator. Well-definedness (relations map to zero) is
// checkable, not implicit.
struct ModuleMap {
  ModulePresentation source;
  ModulePresentation target;
  std::vector<FreeElement> columns;

  static ModuleMap identity(const ModulePresentation& M);
  static ModuleMap zero_map(const ModulePresentation& src, const ModulePresentation& tgt);
  // Build from explicit columns (entries reduced on construction).
  static ModuleMap from_columns(const ModulePresentation& src, const ModulePresentation& tgt,
                                std::vector<FreeElement> cols);

  FreeElement apply(const FreeElement& x) const;
  ModuleMap compose(const ModuleMap& inner) const;  // this after inner
  bool is_well_defined() const;
  bool is_zero_map() const;
  // Equality as maps (difference lands in target relations).
  bool equals(const ModuleMap& o) const;
};

struct MinimalPresentation {
  ModulePresentation pres;
  ModuleMap to;    // original -> minimal
  ModuleMap from;  // minimal -> original
};

// Unit-free presentation with isomorphism witnesses; the underlying
// computation is cached on the module.
MinimalPresentation minimal_presentation(const ModulePresentation& M);
int mu(const ModulePresentation& M);

ModulePresentation tensor(const ModulePresentation& A, const ModulePresentation& B);

struct HomModule {
  ModulePresentation pres;                // minimal presentation of Hom(M, N)
  std::vector<ModuleMap> generator_maps;  // explicit map M -> N per generator
  // data for expressing arbitrary homomorphisms in the chosen generators
  ModulePresentation hom_f0;            // Hom(F0, N), generators indexed (i, l) = i*q + l
  std::vector<FreeElement> gen_reps;    // representatives of pres generators in hom_f0
};

HomModule hom(const ModulePresentation& M, const ModulePresentation& N);

// Coordinates of a concrete homomorphism in the generators of hom(M, N);
// nullopt when f is not in the module (e.g. ill-defined input).
std::optional<FreeElement> hom_coordinates(const HomModule& H, const ModuleMap& f);

struct KernelModule {
  ModulePresentation pres;
  ModuleMap inclusion;  // into f.source
};
KernelModule kernel(const ModuleMap& f);

struct ImageModule {
  ModulePresentation pres;
  ModuleMap inclusion;  // into f.target
};
ImageModule image(const ModuleMap& f);

struct CokernelModule {
  ModulePresentation pres;
  ModuleMap projection;  // from f.target
};
CokernelModule cokernel(const ModuleMap& f);

std::vector<Polynomial> annihilator(const ModulePresentation& M);

std::vector<mpz_class> hilbert_function(const ModulePresentation& M, int d_lo, int d_hi);
int module_dim(const ModulePresentation& M);  // kDimZeroModule for the zero module
mpz_class module_length(const ModulePresentation& M);
mpz_class module_multiplicity(const ModulePresentation& M);

// Generic rank over a declared domain (multiplicity ratio).
int module_rank(const ModulePresentation& M);

std::vector<Polynomial> fitting_ideal(const ModulePresentation& M, int r);

ModuleMap double_dual_map(const ModulePresentation& M);

struct TorsionModule {
  ModulePresentation pres;
  ModuleMap inclusion;  // into M
};
TorsionModule torsion(const ModulePresentation& M);

bool is_torsionfree(const ModulePresentation& M);
bool is_reflexive(const ModulePresentation& M);
bool is_free(const ModulePresentation& M);
bool is_locally_free_on_punctured(const ModulePresentation& M);

// Presentation of (<gens> + <rels>)/<rels> inside the free module of the
// given rank; generators are kept in input order (zero columns included) so
// callers can attach witnesses.
ModulePresentation subquotient(const RingPtr& R, int free_rank,
                               const std::vector<int>& free_degrees,
                               const std::vector<FreeElement>& gens,
                               const std::vector<FreeElement>& rels);

// Minimal generating set of the submodule generated by `gens` (graded
// greedy prune by ascending degree).
std::vector<FreeElement> minimal_generators(const RingPtr& R, int rank,
                                            const std::vector<int>& comp_degrees,
                                            std::vector<FreeElement> gens);

// dim of R/(ideal gens + quotient ideal); helper shared by the Fitting
// ideal tests.
int dim_of_ideal(const RingPtr& R, const std::vector<Polynomial>& gens);

void check_same_ring(const ModulePresentation& A, const ModulePresentation& B);

}  // namespace depthlab
