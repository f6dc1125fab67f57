#pragma once

// Shared rings and modules used across the test suites.

#include <string>
#include <vector>

#include "depthlab/module.hpp"
#include "depthlab/ring.hpp"

namespace fixtures {

using namespace depthlab;

inline PolyRingPtr poly_ring(const std::vector<std::string>& names) {
  return PolyRing::make(FieldSpec::rationals(), names);
}

inline RingPtr S2() {
  static RingPtr R = Ring::create(poly_ring({"x", "y"}), {});
  return R;
}

inline RingPtr S3() {
  static RingPtr R = Ring::create(poly_ring({"x", "y", "z"}), {});
  return R;
}

// quadric cone QQ[x,y,z]/(xy - z^2): normal hypersurface domain
inline RingPtr Rq() {
  static RingPtr R = [] {
    PolyRingPtr A = S3()->ambient();
    RingFlags flags;
    flags.domain = true;
    return Ring::create(A, {Polynomial::parse(A, "x*y - z^2")}, flags);
  }();
  return R;
}

// QQ[x,y]/(xy): reduced but not a domain
inline RingPtr Rxy() {
  static RingPtr R = [] {
    PolyRingPtr A = S2()->ambient();
    RingFlags flags;
    flags.domain = false;
    return Ring::create(A, {Polynomial::parse(A, "x*y")}, flags);
  }();
  return R;
}

inline Polynomial P(const RingPtr& R, const std::string& text) {
  return Polynomial::parse(R->ambient(), text);
}

// ideal (x, y) of Rq: depth-1 torsion-free, not reflexive
inline ModulePresentation Iq() {
  static ModulePresentation M = ModulePresentation::ideal(Rq(), {P(Rq(), "x"), P(Rq(), "y")});
  return M;
}

// ideal (x, z) of Rq: rank-1 nonfree maximal Cohen-Macaulay
inline ModulePresentation Lq() {
  static ModulePresentation M = ModulePresentation::ideal(Rq(), {P(Rq(), "x"), P(Rq(), "z")});
  return M;
}

inline ModulePresentation ideal_of(const RingPtr& R, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(R, g));
  return ModulePresentation::ideal(R, ps);
}

}  // namespace fixtures
