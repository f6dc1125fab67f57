#include "depthlab/veronese.hpp"

#include <algorithm>

namespace depthlab {

namespace {

// degree-n exponent vectors in d variables, ordered lexicographically with
// the first variable dominant (x1^n first)
std::vector<Monomial> degree_n_monomials(int d, int n) {
  std::vector<Monomial> out;
  std::vector<int> exps(d, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      exps[pos] = left;
      out.push_back(Monomial(exps));
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  rec(0, n);
  return out;
}

std::string nth_letter(int i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

VeroneseRing veronese_ring(int d, int n, int max_vars) {
  if (d < 1 || n < 2) fail("IndexRange", "need d >= 1 and n >= 2");
  std::vector<Monomial> dict = degree_n_monomials(d, n);
  int N = static_cast<int>(dict.size());
  if (N > max_vars)
    fail("SizeCap", "presentation needs " + std::to_string(N) + " variables, cap is " +
                        std::to_string(max_vars));

  // auxiliary ring with the model variables followed by the presentation
  // variables; the kernel of the monomial map is the elimination ideal
  std::vector<std::string> aux_names;
  for (int v = 0; v < d; ++v) aux_names.push_back("x" + std::to_string(v + 1));
  for (int i = 0; i < N; ++i) aux_names.push_back(nth_letter(i));
  PolyRingPtr aux = PolyRing::make(FieldSpec::rationals(), aux_names);

  std::vector<Polynomial> gens;
  for (int i = 0; i < N; ++i) {
    Monomial m = Monomial::one(d + N);
    for (int v = 0; v < d; ++v) m.exps[v] = dict[i].exps[v];
    Polynomial target = Polynomial::variable(aux, d + i);
    gens.push_back(target - Polynomial::monomial(aux, m, Scalar(1)));
  }
  std::vector<bool> keep(d + N, false);
  for (int i = 0; i < N; ++i) keep[d + i] = true;
  std::vector<Polynomial> toric_aux = eliminate(aux, gens, keep);

  std::vector<std::string> names;
  for (int i = 0; i < N; ++i) names.push_back(nth_letter(i));
  PolyRingPtr A = PolyRing::make(FieldSpec::rationals(), names, MonoOrder{}, n);
  std::vector<Polynomial> toric;
  for (const Polynomial& f : toric_aux) {
    Polynomial g(A);
    for (const Term& t : f.terms()) {
      Monomial m = Monomial::one(N);
      for (int i = 0; i < N; ++i) m.exps[i] = t.mono.exps[d + i];
      g = g + Polynomial::monomial(A, m, t.coef);
    }
    toric.push_back(std::move(g));
  }

  RingFlags flags;
  flags.domain = true;           // coordinate ring of an irreducible toric variety
  flags.cohen_macaulay = true;   // direct summand of the polynomial ring
  RingPtr R = Ring::create(A, toric, flags);

  // substitution soundness: every toric generator vanishes on the monomials
  PolyRingPtr model = PolyRing::make(FieldSpec::rationals(), [&] {
    std::vector<std::string> mn;
    for (int v = 0; v < d; ++v) mn.push_back("x" + std::to_string(v + 1));
    return mn;
  }());
  std::vector<Polynomial> images;
  for (int i = 0; i < N; ++i)
    images.push_back(Polynomial::monomial(model, dict[i], Scalar(1)));
  for (const Polynomial& f : R->quotient_basis())
    if (!f.substitute(images).is_zero()) fail("Internal", "toric kernel substitution failed");

  VeroneseRing V;
  V.d = d;
  V.n = n;
  V.ring = R;
  V.dictionary = dict;
  if (V.ring->dim() != d) fail("Internal", "unexpected dimension of the monomial subring");
  return V;
}

ClassRep class_rep(const VeroneseRing& V, int i) {
  if (i < 0 || i >= V.n) fail("IndexRange", "class index must satisfy 0 <= i < n");
  if (i == 0) return ClassRep{0, ModulePresentation::free_module(V.ring, 1)};
  std::vector<Polynomial> gens;
  for (int t = 0; t < V.nvars(); ++t)
    if (V.dictionary[t].exps[0] >= i)
      gens.push_back(Polynomial::variable(V.ring->ambient(), t));
  return ClassRep{i, ModulePresentation::ideal(V.ring, gens)};
}

MuFormulaReport mu_formula_check(const VeroneseRing& V, int i) {
  if (i < 1 || i > V.n - 1) fail("IndexRange", "index must satisfy 1 <= i <= n-1");
  MuFormulaReport rep;
  rep.index = i;
  rep.computed = mu(class_rep(V, i).module);
  rep.predicted = binomial(V.n - i + V.d - 1, V.d - 1);
  // factorial-quotient reading (n+d-i-1)!/(d-1)!
  mpz_class num, den;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(V.n + V.d - i - 1));
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(V.d - 1));
  rep.displayed_formula = num / den;
  rep.agree = mpz_class(rep.computed) == rep.predicted;
  rep.display_matches = rep.displayed_formula == rep.predicted;
  return rep;
}

ReflexiveProductReport reflexive_product_test(const VeroneseRing& V, int i, int j) {
  if (i < 0 || i >= V.n || j < 0 || j >= V.n) fail("IndexRange", "class indices");
  ModulePresentation T = tensor(class_rep(V, i).module, class_rep(V, j).module);
  ReflexiveProductReport rep;
  rep.reflexive = is_reflexive(T);
  rep.consistent = !rep.reflexive || i == 0 || j == 0;
  return rep;
}

bool binomial_unimodality_check(int d, int n) {
  if (d < 2 || n < 2) return true;  // class group is trivial in one variable
  auto mu_count = [&](int i) { return binomial(n - i + d - 1, d - 1); };
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (i + j < n) {
        // strictly decreasing generator counts rule this range out
        if (!(mu_count(i) * mu_count(j) > mu_count(i + j))) return false;
        continue;
      }
      int h = i + j - n;
      // the product identity mu(L^i) mu(L^j) = mu(L^h) must fail
      if (mu_count(i) * mu_count(j) == mu_count(h)) return false;
      // binomial-coincidence reading: with N = n-h+2(d-1) the two binomials
      // binom(N, n-i+d-1) and binom(N, n-h+d-1) must differ
      long N = n - h + 2 * (d - 1);
      long N1 = n - i + d - 1;
      long N2 = n - h + d - 1;
      if (N1 != N2 && binomial(N, N1) == binomial(N, N2)) return false;
    }
  return true;
}

ClassGroupScan class_group_scan(const VeroneseRing& V, int bound) {
  ClassGroupScan scan;
  ModulePresentation w = canonical_module(V.ring);
  scan.canonical_free = is_free(w) && mu(w) == 1;
  scan.canonical_index = 0;
  if (!scan.canonical_free) {
    for (int i = 1; i < V.n; ++i)
      if (iso_witnessed(class_rep(V, i).module, w)) {
        scan.canonical_index = i;
        break;
      }
    if (scan.canonical_index == 0)
      fail("Internal", "canonical class not identified among the representatives");
  }
  for (int i = 0; i < V.n; ++i) {
    ScanItem item;
    item.index = i;
    item.is_canonical_class = (i == scan.canonical_index && !scan.canonical_free) ||
                              (i == 0 && scan.canonical_free);
    item.semidualizing = semidualizing_test(class_rep(V, i).module, bound);
    scan.items.push_back(item);
  }
  scan.consistent = true;
  for (const ScanItem& item : scan.items) {
    bool should_pass = item.index == 0 || (!scan.canonical_free && item.is_canonical_class);
    if (item.semidualizing != should_pass) scan.consistent = false;
  }
  return scan;
}

}  // namespace depthlab
