#include "depthlab/veronese.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace depthlab;

TEST_SUITE_BEGIN("veronese");

TEST_CASE("quadric cone presentation") {
  VeroneseRing V = veronese_ring(2, 2);
  CHECK(V.nvars() == 3);
  REQUIRE(V.ring->quotient_basis().size() == 1);
  // b^2 - ac up to sign conventions of the reduced basis
  Polynomial f = V.ring->quotient_basis()[0];
  Polynomial expect = Polynomial::parse(V.ring->ambient(), "b^2 - a*c");
  CHECK((f == expect.monic() || f == (-expect).monic()));
  CHECK(V.ring->dim() == 2);
}

TEST_CASE("twisted cubic presentation") {
  VeroneseRing V = veronese_ring(2, 3);
  CHECK(V.nvars() == 4);
  CHECK(V.ring->quotient_basis().size() == 3);
  CHECK(V.ring->dim() == 2);
  // the three quadrics are the 2x2 minors of [[a,b,c],[b,c,d]]
  GroebnerBasis g = V.ring->quotient_gb();
  for (const char* minor : {"a*c - b^2", "a*d - b*c", "b*d - c^2"}) {
    Polynomial m = Polynomial::parse(V.ring->ambient(), minor);
    CHECK(normal_form(m, g).is_zero());
  }
}

TEST_CASE("one model variable gives a polynomial ring") {
  VeroneseRing V = veronese_ring(1, 4);
  CHECK(V.nvars() == 1);
  CHECK(V.ring->quotient_basis().empty());
}

TEST_CASE("size cap") {
  CHECK_THROWS_WITH_AS(veronese_ring(5, 4), doctest::Contains("SizeCap"), Error);
}

TEST_CASE("second veronese of the plane") {
  VeroneseRing V = veronese_ring(3, 2);
  CHECK(V.nvars() == 6);
  CHECK(V.ring->dim() == 3);
  CHECK(V.ring->has_isolated_singularity());
}

TEST_CASE("class representatives") {
  VeroneseRing V22 = veronese_ring(2, 2);
  ClassRep c1 = class_rep(V22, 1);
  CHECK(mu(c1.module) == 2);
  CHECK(module_rank(c1.module) == 1);
  CHECK(is_mcm(c1.module));
  CHECK(is_locally_free_on_punctured(c1.module));

  ClassRep c0 = class_rep(V22, 0);
  CHECK(is_free(c0.module));

  VeroneseRing V23 = veronese_ring(2, 3);
  ClassRep c2 = class_rep(V23, 2);
  CHECK(mu(c2.module) == 2);
  CHECK(module_rank(c2.module) == 1);
  CHECK(is_mcm(c2.module));

  CHECK_THROWS_AS(class_rep(V23, 3), Error);
}

TEST_CASE("generator-count tables") {
  // (d, n, i) -> expected count of degree n-i monomials
  struct Row {
    int d, n, i, expect;
  };
  for (const Row& r : {Row{2, 2, 1, 2}, Row{2, 3, 1, 3}, Row{2, 3, 2, 2}, Row{3, 2, 1, 3},
                       Row{3, 3, 1, 6}, Row{3, 3, 2, 3}}) {
    VeroneseRing V = veronese_ring(r.d, r.n);
    MuFormulaReport rep = mu_formula_check(V, r.i);
    CHECK(rep.agree);
    CHECK(rep.computed == r.expect);
    CHECK(rep.predicted == r.expect);
    // brute-force monomial count oracle
    long count = 0;
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == r.d - 1) {
        ++count;
        return;
      }
      for (int e = 0; e <= left; ++e) rec(pos + 1, left - e);
    };
    rec(0, r.n - r.i);
    CHECK(rep.predicted == count);
  }
}

TEST_CASE("displayed formula is flagged when it disagrees") {
  // the factorial-quotient reading differs from the monomial count except
  // in one variable; the report must carry both values
  VeroneseRing V = veronese_ring(2, 3);
  MuFormulaReport rep = mu_formula_check(V, 1);
  CHECK(rep.agree);
  CHECK(!rep.display_matches);
  CHECK(rep.displayed_formula == 24);  // (3+2-1-1)!/(2-1)! = 4!
  CHECK(rep.predicted == 3);
}

TEST_CASE("reflexive products") {
  VeroneseRing V23 = veronese_ring(2, 3);
  ReflexiveProductReport r1 = reflexive_product_test(V23, 1, 1);
  CHECK(!r1.reflexive);
  CHECK(r1.consistent);

  VeroneseRing V22 = veronese_ring(2, 2);
  ReflexiveProductReport r2 = reflexive_product_test(V22, 1, 0);
  CHECK(r2.reflexive);
  CHECK(r2.consistent);

  VeroneseRing V32 = veronese_ring(3, 2);
  ReflexiveProductReport r3 = reflexive_product_test(V32, 1, 1);
  CHECK(!r3.reflexive);
  CHECK(r3.consistent);
}

TEST_CASE("binomial sweep") {
  CHECK(binomial_unimodality_check(2, 3));
  CHECK(binomial_unimodality_check(3, 2));
  CHECK(binomial_unimodality_check(5, 5));
  CHECK(binomial_unimodality_check(2, 2));
  CHECK(binomial_unimodality_check(4, 3));
}

TEST_CASE("hilbert decomposition of the model ring") {
  // the model polynomial ring decomposes into the class representatives:
  // summing their Hilbert functions reproduces the monomial counts
  for (auto [d, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    VeroneseRing V = veronese_ring(d, n);
    for (int internal = 1; internal <= 6; ++internal) {
      // piece i contributes the count of model monomials of degree
      // internal*n - i (generators sit in internal degree 1)
      for (int i = 0; i < n; ++i) {
        ClassRep rep = class_rep(V, i);
        mpz_class hf = rep.module.hilbert().hf(internal);
        long target_degree = static_cast<long>(internal) * n - i;
        mpz_class expect = binomial(target_degree + d - 1, d - 1);
        CHECK(hf == expect);
      }
    }
  }
}

TEST_CASE("class group law on samples") {
  VeroneseRing V = veronese_ring(2, 3);
  // hom(L^i, L^j) should be the class j - i mod n
  for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 1}}) {
    HomModule h = hom(class_rep(V, i).module, class_rep(V, j).module);
    int expected = ((j - i) % V.n + V.n) % V.n;
    CHECK(module_rank(h.pres) == 1);
    CHECK(is_reflexive(h.pres));
    CHECK(iso_witnessed(h.pres, class_rep(V, expected).module));
  }
}

TEST_CASE("scan of the quadric cone") {
  VeroneseRing V = veronese_ring(2, 2);
  ClassGroupScan scan = class_group_scan(V, 6);
  CHECK(scan.consistent);
  CHECK(scan.canonical_free);
  REQUIRE(scan.items.size() == 2);
  CHECK(scan.items[0].semidualizing);
  CHECK(!scan.items[1].semidualizing);
}

TEST_CASE("scan of the second veronese of the plane") {
  VeroneseRing V = veronese_ring(3, 2);
  ClassGroupScan scan = class_group_scan(V, 6);
  CHECK(scan.consistent);
  CHECK(!scan.canonical_free);
  CHECK(scan.canonical_index == 1);
  CHECK(scan.items[0].semidualizing);
  CHECK(scan.items[1].semidualizing);
}

TEST_CASE("scan of the twisted cubic") {
  VeroneseRing V = veronese_ring(2, 3);
  ClassGroupScan scan = class_group_scan(V, 6);
  CHECK(scan.consistent);
  CHECK(!scan.canonical_free);
  CHECK(scan.canonical_index == 2);  // one-dimensional model: class of d mod n
  CHECK(scan.items[0].semidualizing);
  CHECK(!scan.items[1].semidualizing);
  CHECK(scan.items[2].semidualizing);
}

TEST_CASE("high depth pair construction") {
  VeroneseRing V = veronese_ring(3, 2);
  ClassRep N = class_rep(V, 1);
  HighDepthPairResult r = high_depth_pair(N.module);
  CHECK(r.meets_bound);
  CHECK(r.m_nonfree);
  CHECK(r.depth_achieved >= 1);

  CHECK_THROWS_WITH_AS(high_depth_pair(ModulePresentation::free_module(V.ring, 1)),
                       doctest::Contains("HypothesisViolated"), Error);
}

TEST_SUITE_END();
