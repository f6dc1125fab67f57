#include <random>

#include "depthlab/module.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace depthlab;
using fixtures::P;

TEST_SUITE_BEGIN("modules");

namespace {

ModulePresentation coker_matrix(const RingPtr& R, int rows,
                                const std::vector<std::vector<std::string>>& cols,
                                std::vector<int> gdeg = {}) {
  std::vector<FreeElement> rels;
  for (const auto& col : cols) {
    std::vector<Polynomial> coords;
    for (const auto& e : col) coords.push_back(P(R, e));
    rels.push_back(FreeElement(R->ambient(), std::move(coords)));
  }
  (void)rows;
  return ModulePresentation::from_relations(R, rows, std::move(gdeg), std::move(rels));
}

}  // namespace

TEST_CASE("minimal presentation prunes units") {
  auto S2 = fixtures::S2();
  // coker [[1, x], [0, y]]: columns (1,0) and (x,y); first column has a unit
  ModulePresentation M = coker_matrix(S2, 2, {{"1", "0"}, {"x", "y"}}, {0, 0});
  MinimalPresentation mp = minimal_presentation(M);
  CHECK(mp.pres.ngens() == 1);
  REQUIRE(mp.pres.relations().size() == 1);
  CHECK(mp.pres.relations()[0].coords[0].monic() == P(S2, "y"));
  // witnesses compose to the identity modulo relations
  CHECK(mp.to.compose(mp.from).equals(ModuleMap::identity(mp.pres)));
  CHECK(mp.from.compose(mp.to).equals(ModuleMap::identity(M)));

  // already-minimal input is returned unchanged
  MinimalPresentation again = minimal_presentation(mp.pres);
  CHECK(again.pres.same_presentation(mp.pres));

  // free module: zero relation matrix
  ModulePresentation F = ModulePresentation::free_module(S2, 3);
  CHECK(minimal_presentation(F).pres.relations().empty());
}

TEST_CASE("mu") {
  CHECK(mu(fixtures::Iq()) == 2);
  CHECK(mu(ModulePresentation::free_module(fixtures::Rq(), 3)) == 3);
  HomModule H = hom(fixtures::Iq(), ModulePresentation::free_module(fixtures::Rq(), 1));
  CHECK(mu(H.pres) == 1);
}

TEST_CASE("tensor with the unit is the identity") {
  auto Rq = fixtures::Rq();
  ModulePresentation R1 = ModulePresentation::free_module(Rq, 1);
  ModulePresentation T = tensor(R1, fixtures::Iq());
  CHECK(T.hilbert() == fixtures::Iq().hilbert());
  CHECK(mu(T) == mu(fixtures::Iq()));
}

TEST_CASE("tensor of I with its dual has the Hilbert function of I") {
  auto Rq = fixtures::Rq();
  HomModule Istar = hom(fixtures::Iq(), ModulePresentation::free_module(Rq, 1));
  ModulePresentation T = tensor(fixtures::Iq(), Istar.pres);
  // I tensor I^* is isomorphic to I up to a twist; compare shifted series
  int shift = fixtures::Iq().gen_degrees()[0] - T.gen_degrees()[0];
  CHECK(T.hilbert().shifted(shift).hf(5) == fixtures::Iq().hilbert().hf(5));
  for (int d = 0; d <= 6; ++d)
    CHECK(T.hilbert().shifted(shift).hf(d) == fixtures::Iq().hilbert().hf(d));
}

TEST_CASE("tensor of cyclic modules over the broken ring") {
  auto Rxy = fixtures::Rxy();
  ModulePresentation A = coker_matrix(Rxy, 1, {{"x"}});
  ModulePresentation B = coker_matrix(Rxy, 1, {{"y"}});
  ModulePresentation T = tensor(A, B);
  // R/(x) tensor R/(y) = R/(x,y) = k
  CHECK(module_dim(T) == 0);
  CHECK(module_length(T) == 1);
}

TEST_CASE("hom into the ring") {
  auto Rq = fixtures::Rq();
  ModulePresentation R1 = ModulePresentation::free_module(Rq, 1);
  HomModule H = hom(fixtures::Iq(), R1);
  CHECK(mu(H.pres) == 1);
  CHECK(is_free(H.pres));
  // hom(R, N) = N
  HomModule H2 = hom(R1, fixtures::Iq());
  CHECK(H2.pres.hilbert() == fixtures::Iq().hilbert());
  // witnesses are well-defined maps
  for (const ModuleMap& w : H.generator_maps) CHECK(w.is_well_defined());
}

TEST_CASE("hom over the non-domain fixture") {
  auto Rxy = fixtures::Rxy();
  ModulePresentation A = coker_matrix(Rxy, 1, {{"x"}});
  ModulePresentation R1 = ModulePresentation::free_module(Rxy, 1);
  HomModule H = hom(A, R1);
  // Hom(R/(x), R) = (0 : x) = (y) = R/(x) shifted; Hilbert function matches
  for (int d = 0; d <= 5; ++d) {
    int shift = H.pres.gen_degrees().empty() ? 0 : H.pres.gen_degrees()[0];
    CHECK(H.pres.hilbert().shifted(-shift).hf(d) == A.hilbert().hf(d));
  }
}

TEST_CASE("annihilator") {
  auto S2 = fixtures::S2();
  ModulePresentation A = coker_matrix(S2, 1, {{"x"}});
  auto ann = annihilator(A);
  REQUIRE(ann.size() == 1);
  CHECK(ann[0] == P(S2, "x"));

  CHECK(annihilator(ModulePresentation::free_module(S2, 1)).empty());

  auto Rxy = fixtures::Rxy();
  ModulePresentation T = tensor(coker_matrix(Rxy, 1, {{"x"}}), coker_matrix(Rxy, 1, {{"y"}}));
  auto annT = annihilator(T);
  GroebnerBasis g = submodule_gb(Rxy->ambient(), 1,
                                 [&] {
                                   std::vector<FreeElement> fe;
                                   for (auto& f : annT) fe.push_back(FreeElement(Rxy->ambient(), {f}));
                                   return fe;
                                 }(),
                                 Rxy->quotient_basis());
  CHECK(in_submodule(FreeElement(Rxy->ambient(), {P(Rxy, "x")}), g));
  CHECK(in_submodule(FreeElement(Rxy->ambient(), {P(Rxy, "y")}), g));
}

TEST_CASE("kernel, image, cokernel") {
  auto S2 = fixtures::S2();
  ModulePresentation R1 = ModulePresentation::free_module(S2, 1);

  // kernel of identity is zero
  KernelModule K0 = kernel(ModuleMap::identity(fixtures::Iq()));
  CHECK(K0.pres.is_zero());

  // kernel of multiplication by x, as the degree-zero map R(-1) -> R over Rxy
  auto Rxy = fixtures::Rxy();
  ModulePresentation Rsrc = ModulePresentation::free_module(Rxy, 1, {1});
  ModulePresentation Rtgt = ModulePresentation::free_module(Rxy, 1, {0});
  ModuleMap mx = ModuleMap::from_columns(Rsrc, Rtgt, {FreeElement(Rxy->ambient(), {P(Rxy, "x")})});
  KernelModule K = kernel(mx);
  CHECK(!K.pres.is_zero());
  CHECK(mu(K.pres) == 1);
  // the inclusion lands on (a multiple of) y
  CHECK(K.inclusion.columns[0].coords[0].monic() == P(Rxy, "y"));

  // cokernel of multiplication by x on S2
  ModuleMap mx2 = ModuleMap::from_columns(ModulePresentation::free_module(S2, 1, {1}), R1,
                                          {FreeElement(S2->ambient(), {P(S2, "x")})});
  CokernelModule C = cokernel(mx2);
  REQUIRE(C.pres.relations().size() == 1);
  CHECK(C.pres.relations()[0].coords[0].monic() == P(S2, "x"));

  // exactness bookkeeping: hilbert(source) = hilbert(kernel) + hilbert(image)
  ImageModule I = image(mx);
  for (int d = 0; d <= 6; ++d)
    CHECK(Rsrc.hilbert().hf(d) == K.pres.hilbert().hf(d) + I.pres.hilbert().hf(d));
}

TEST_CASE("hilbert data") {
  auto Rq = fixtures::Rq();
  ModulePresentation R1 = ModulePresentation::free_module(Rq, 1);
  CHECK(module_dim(R1) == 2);
  CHECK(module_multiplicity(R1) == 2);

  auto S2 = fixtures::S2();
  ModulePresentation k = ModulePresentation::residue_field(S2);
  CHECK(module_length(k) == 1);

  ModulePresentation m2 = coker_matrix(S2, 1, {{"x^2"}, {"x*y"}, {"y^2"}});
  CHECK(module_length(m2) == 3);
  CHECK_THROWS_WITH_AS(module_length(R1), doctest::Contains("LengthOfPositiveDimensional"),
                       Error);

  CHECK(module_dim(ModulePresentation::zero(Rq)) == kDimZeroModule);
}

TEST_CASE("rank") {
  CHECK(module_rank(fixtures::Iq()) == 1);
  CHECK(module_rank(ModulePresentation::free_module(fixtures::Rq(), 2)) == 2);
  CHECK(module_rank(ModulePresentation::residue_field(fixtures::Rq())) == 0);
  CHECK_THROWS_WITH_AS(module_rank(ModulePresentation::free_module(fixtures::Rxy(), 1)),
                       doctest::Contains("NotDomain"), Error);
}

TEST_CASE("fitting ideals") {
  auto S2 = fixtures::S2();
  // coker of the single column (x, y): 2 gens, 1 relation
  ModulePresentation M = coker_matrix(S2, 2, {{"x", "y"}}, {1, 1});
  auto f1 = fitting_ideal(M, 1);
  REQUIRE(f1.size() == 2);
  auto f2 = fitting_ideal(M, 2);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0].is_constant());
  auto f0m = fitting_ideal(coker_matrix(S2, 1, {{"x"}}), 0);
  REQUIRE(f0m.size() == 1);
  CHECK(f0m[0] == P(S2, "x"));
}

TEST_CASE("fitting ideals are presentation independent") {
  auto S2 = fixtures::S2();
  ModulePresentation minimal = coker_matrix(S2, 1, {{"x^2"}});
  // non-minimal presentation of the same module: a redundant generator
  // e1 = x e0 glued in by the column (x, -1)
  ModulePresentation padded = coker_matrix(S2, 2, {{"x", "-1"}, {"x^2", "0"}}, {0, 1});
  for (int r = 0; r <= 2; ++r) {
    auto a = fitting_ideal(minimal, r);
    auto b = fitting_ideal(padded, r);
    auto gb_of = [&](const std::vector<Polynomial>& gens) {
      std::vector<FreeElement> fe;
      for (auto& f : gens) fe.push_back(FreeElement(S2->ambient(), {f}));
      return submodule_gb(S2->ambient(), 1, fe, {});
    };
    GroebnerBasis ga = gb_of(a), gbb = gb_of(b);
    for (auto& f : a) CHECK(in_submodule(FreeElement(S2->ambient(), {f}), gbb));
    for (auto& f : b) CHECK(in_submodule(FreeElement(S2->ambient(), {f}), ga));
  }
}

TEST_CASE("double dual and reflexivity") {
  auto Rq = fixtures::Rq();
  // free module: isomorphism
  ModulePresentation F = ModulePresentation::free_module(Rq, 2);
  ModuleMap dd = double_dual_map(F);
  CHECK(kernel(dd).pres.is_zero());
  CHECK(cokernel(dd).pres.is_zero());

  // I = (x,y): injective with nonzero cokernel
  ModuleMap ddI = double_dual_map(fixtures::Iq());
  CHECK(kernel(ddI).pres.is_zero());
  CHECK(!cokernel(ddI).pres.is_zero());

  // residue field: zero double dual
  ModulePresentation k = ModulePresentation::residue_field(Rq);
  ModuleMap ddk = double_dual_map(k);
  CHECK(ddk.target.ngens() == 0);
}

TEST_CASE("torsion") {
  auto Rq = fixtures::Rq();
  CHECK(torsion(ModulePresentation::free_module(Rq, 2)).pres.is_zero());

  // k + R: torsion part is k
  ModulePresentation ksum = [&] {
    // presentation of k ⊕ R: 2 gens; relations m * e_0
    std::vector<FreeElement> rels;
    for (const char* v : {"x", "y", "z"}) {
      FreeElement e(Rq->ambient(), 2);
      e.coords[0] = P(Rq, v);
      rels.push_back(std::move(e));
    }
    return ModulePresentation::from_relations(Rq, 2, {0, 0}, rels);
  }();
  TorsionModule T = torsion(ksum);
  CHECK(module_length(T.pres) == 1);

  // torsion equals the kernel of the double-dual map on samples
  for (const ModulePresentation& M : {fixtures::Iq(), fixtures::Lq(), ksum}) {
    TorsionModule tm = torsion(M);
    KernelModule km = kernel(double_dual_map(M));
    CHECK(tm.pres.hilbert() == km.pres.hilbert());
  }
}

TEST_CASE("predicates on the running fixtures") {
  CHECK(is_torsionfree(fixtures::Iq()));
  CHECK(!is_reflexive(fixtures::Iq()));

  ModulePresentation F = ModulePresentation::free_module(fixtures::Rq(), 2);
  CHECK(is_torsionfree(F));
  CHECK(is_reflexive(F));
  CHECK(is_free(F));

  CHECK(is_torsionfree(fixtures::Lq()));
  CHECK(is_reflexive(fixtures::Lq()));
  CHECK(!is_free(fixtures::Lq()));
}

TEST_CASE("locally free on the punctured spectrum") {
  CHECK(is_locally_free_on_punctured(fixtures::Iq()));
  CHECK(is_locally_free_on_punctured(ModulePresentation::free_module(fixtures::Rq(), 2)));
  // torsion branch: R + k has finite-length torsion
  auto Rq = fixtures::Rq();
  std::vector<FreeElement> rels;
  for (const char* v : {"x", "y", "z"}) {
    FreeElement e(Rq->ambient(), 2);
    e.coords[0] = P(Rq, v);
    rels.push_back(std::move(e));
  }
  ModulePresentation ksum = ModulePresentation::from_relations(Rq, 2, {0, 0}, rels);
  CHECK(is_locally_free_on_punctured(ksum));
}

TEST_CASE("hilbert function of kernels plus images is additive across maps") {
  auto Rq = fixtures::Rq();
  // degree-zero map given by the quadric-cone matrix on a twisted free source
  ModulePresentation src = ModulePresentation::free_module(Rq, 2, {1, 1});
  ModulePresentation tgt = ModulePresentation::free_module(Rq, 2, {0, 0});
  std::vector<FreeElement> cols = {FreeElement(Rq->ambient(), {P(Rq, "x"), P(Rq, "z")}),
                                   FreeElement(Rq->ambient(), {P(Rq, "z"), P(Rq, "y")})};
  ModuleMap f = ModuleMap::from_columns(src, tgt, cols);
  KernelModule K = kernel(f);
  ImageModule I = image(f);
  for (int d = 0; d <= 6; ++d)
    CHECK(src.hilbert().hf(d) == K.pres.hilbert().hf(d) + I.pres.hilbert().hf(d));
}

TEST_SUITE_END();
