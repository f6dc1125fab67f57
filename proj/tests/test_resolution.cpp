#include "depthlab/resolution.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace depthlab;
using fixtures::P;

TEST_SUITE_BEGIN("resolution");

namespace {

// d_i o d_{i+1} = 0 and interior exactness via mutual membership
void check_complex_and_exactness(const FreeResolution& res) {
  const RingPtr& R = res.ring;
  const PolyRingPtr& A = R->ambient();
  for (size_t i = 0; i + 1 < res.maps.size(); ++i) {
    int rank = static_cast<int>(res.degrees[i].size());
    // composition vanishes over the ring
    GroebnerBasis sat_gb = submodule_gb(A, rank, {}, R->quotient_basis());
    for (const FreeElement& col : res.maps[i + 1]) {
      FreeElement img(A, rank);
      for (size_t c = 0; c < res.maps[i].size(); ++c)
        img = img + res.maps[i][c].times(col.coords[c]);
      CHECK(normal_form(img, sat_gb).is_zero());
    }
    // exactness: ker(d_{i+1}) = im(d_{i+2}) as submodules
    std::vector<FreeElement> ker = syzygies(A, rank, res.maps[i], R->quotient_basis(),
                                            res.degrees[i]);
    GroebnerBasis im_gb = submodule_gb(A, static_cast<int>(res.maps[i].size()),
                                       res.maps[i + 1], R->quotient_basis());
    for (const FreeElement& s : ker) CHECK(in_submodule(s, im_gb));
    GroebnerBasis ker_gb = submodule_gb(A, static_cast<int>(res.maps[i].size()), ker,
                                        R->quotient_basis());
    for (const FreeElement& c : res.maps[i + 1]) CHECK(in_submodule(c, ker_gb));
  }
}

void check_minimality(const FreeResolution& res) {
  for (const auto& mp : res.maps)
    for (const FreeElement& col : mp)
      for (const Polynomial& e : col.coords) CHECK((e.is_zero() || e.degree() >= 1));
}

}  // namespace

TEST_CASE("ambient resolution of the quadric cone ring") {
  ModulePresentation R1 = ModulePresentation::free_module(fixtures::Rq(), 1);
  FreeResolution res = resolve(R1, 5, FreeResolution::Over::ambient);
  CHECK(res.terminated);
  CHECK(res.betti_row() == std::vector<int>{1, 1});
  REQUIRE(res.maps.size() == 1);
  CHECK(res.maps[0][0].coords[0].monic() == P(fixtures::S3(), "x*y - z^2"));
}

TEST_CASE("koszul resolution of the residue field over the plane") {
  ModulePresentation k = ModulePresentation::residue_field(fixtures::S2());
  FreeResolution res = resolve(k, 5, FreeResolution::Over::ambient);
  CHECK(res.terminated);
  CHECK(res.betti_row() == std::vector<int>{1, 2, 1});
  check_complex_and_exactness(res);
  check_minimality(res);
}

TEST_CASE("periodic resolution of the cone class module") {
  FreeResolution res = resolve(fixtures::Lq(), 6);
  REQUIRE(res.length() >= 6);
  for (int i = 0; i <= 6; ++i) CHECK(res.betti(i) == 2);
  check_complex_and_exactness(res);
  check_minimality(res);
  // alternating matrix factorization pattern: d_{i+2} equals d_i up to
  // permutation from degree 2 on
  for (size_t i = 1; i + 2 < res.maps.size(); ++i) {
    CHECK(res.maps[i].size() == res.maps[i + 2].size());
  }
}

TEST_CASE("pd over the ambient ring") {
  ModulePresentation R1 = ModulePresentation::free_module(fixtures::Rq(), 1);
  CHECK(pd_ambient(R1) == 1);
  CHECK(pd_ambient(fixtures::Iq()) == 2);
  CHECK(pd_ambient(ModulePresentation::free_module(fixtures::S3(), 2)) == 0);
}

TEST_CASE("resolution of the residue field over the cone") {
  ModulePresentation k = ModulePresentation::residue_field(fixtures::Rq());
  FreeResolution res = resolve(k, 6);
  check_complex_and_exactness(res);
  check_minimality(res);
  // betti numbers stabilize at 4 for the quadric hypersurface
  CHECK(res.betti(0) == 1);
  CHECK(res.betti(1) == 3);
  CHECK(res.betti(2) == 4);
  CHECK(res.betti(3) == 4);
  CHECK(res.betti(4) == 4);
}

TEST_CASE("complexity estimates") {
  // free module: finite projective dimension
  ComplexityEstimate e0 =
      complexity_estimate(ModulePresentation::free_module(fixtures::Rq(), 2), 8);
  CHECK(e0.verdict == ComplexityEstimate::Verdict::zero);

  // the class module: period-2, certified
  ComplexityEstimate e1 = complexity_estimate(fixtures::Lq(), 8);
  CHECK(e1.verdict == ComplexityEstimate::Verdict::bounded);
  CHECK(e1.periodicity_certified);
  CHECK(e1.degree == 1);

  // residue field over the cone: eventually periodic tail
  ComplexityEstimate e2 =
      complexity_estimate(ModulePresentation::residue_field(fixtures::Rq()), 8);
  CHECK(e2.verdict == ComplexityEstimate::Verdict::bounded);
  CHECK(e2.periodicity_certified);
}

TEST_CASE("betti table text") {
  ModulePresentation k = ModulePresentation::residue_field(fixtures::S2());
  FreeResolution res = resolve(k, 4, FreeResolution::Over::ambient);
  std::string table = betti_text(res);
  CHECK(table.find("1") != std::string::npos);
  CHECK(table.find("2") != std::string::npos);
}

TEST_SUITE_END();
