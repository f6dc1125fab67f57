#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/groebner.hpp"
#include "depthlab/hilbert.hpp"

namespace depthlab {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Properties that are not decided algorithmically. Domain status in
// particular is declared by the fixture that builds the ring (primality
// testing of ideals is out of scope); operations that need it refuse to run
// otherwise.
struct RingFlags {
  std::optional<bool> domain;
  std::optional<bool> cohen_macaulay;
  std::optional<bool> complete_intersection;
  std::optional<bool> isolated_singularity;
};

// A standard graded quotient R = S/I presented by homogeneous generators,
// with the reduced Groebner basis of I cached at construction. An empty
// quotient list presents the polynomial ring itself.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr create(PolyRingPtr ambient, std::vector<Polynomial> quotient_gens,
                        RingFlags flags = {});

  const PolyRingPtr& ambient() const { return ambient_; }
  const std::vector<Polynomial>& quotient_gens() const { return quotient_gens_; }
  const std::vector<Polynomial>& quotient_basis() const { return quotient_basis_; }
  const GroebnerBasis& quotient_gb() const { return quotient_gb_; }
  int nvars() const { return ambient_->nvars(); }
  bool is_polynomial_ring() const { return quotient_basis_.empty(); }

  bool same_as(const Ring& o) const;

  // Normal form modulo the quotient basis.
  Polynomial reduce(const Polynomial& f) const;
  FreeElement reduce(const FreeElement& v) const;

  const HilbertSeries& hilbert() const;
  int dim() const { return hilbert().dim(); }
  mpz_class multiplicity() const { return hilbert().multiplicity(); }

  // Minimal number of generators of the irrelevant maximal ideal.
  int edim() const;
  int codim() const { return edim() - dim(); }

  // Declared or structurally forced properties; `require_*` throws when the
  // property is not known to hold.
  bool is_domain() const;
  void require_domain(const std::string& who) const;
  bool is_cohen_macaulay() const;
  bool is_complete_intersection() const;
  // Jacobian test (characteristic zero), unless declared.
  bool has_isolated_singularity() const;

  // The ambient polynomial ring wrapped as a Ring (empty quotient).
  RingPtr ambient_ring() const;

  Polynomial parse(const std::string& text) const { return Polynomial::parse(ambient_, text); }

  std::string describe() const;

 private:
  Ring() = default;

  PolyRingPtr ambient_;
  std::vector<Polynomial> quotient_gens_;
  std::vector<Polynomial> quotient_basis_;
  GroebnerBasis quotient_gb_;
  RingFlags flags_;

  mutable std::optional<HilbertSeries> hilbert_;
  mutable std::optional<bool> isolated_;
  mutable std::optional<bool> ci_;
  mutable RingPtr ambient_ring_;
};

// Jacobian-criterion isolated singularity test for a graded quotient over
// the rationals: the ideal plus the codim-sized minors of the Jacobian must
// cut out dimension <= 0.
bool jacobian_isolated_singularity(const Ring& R);

}  // namespace depthlab
