#include "depthlab/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace depthlab {

int FreeResolution::betti(int i) const {
  if (i < 0) return 0;
  if (i < static_cast<int>(degrees.size())) return static_cast<int>(degrees[i].size());
  if (terminated) return 0;
  fail("BoundTooSmall", "resolution not computed to index " + std::to_string(i));
}

std::vector<int> FreeResolution::betti_row() const {
  std::vector<int> out;
  for (const auto& d : degrees) out.push_back(static_cast<int>(d.size()));
  return out;
}

std::vector<std::vector<std::pair<int, int>>> FreeResolution::graded_betti() const {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& dlist : degrees) {
    std::map<int, int> counts;
    for (int d : dlist) counts[d] += 1;
    out.emplace_back(counts.begin(), counts.end());
  }
  return out;
}

namespace {

// M with the quotient ideal folded into the relations, over the polynomial
// ring, for "viewed over the ambient ring" computations.
ModulePresentation viewed_over_ambient(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  if (R->is_polynomial_ring()) return M;
  RingPtr S = R->ambient_ring();
  std::vector<FreeElement> rels = M.relations();
  for (FreeElement& sat : ideal_satellites(R->ambient(), M.ngens(), R->quotient_basis()))
    rels.push_back(std::move(sat));
  return ModulePresentation::from_relations(S, M.ngens(), M.gen_degrees(), std::move(rels));
}

void extend_resolution(FreeResolution& res, int bound) {
  const RingPtr& R = res.ring;
  const PolyRingPtr& A = R->ambient();
  while (!res.terminated && res.length() < bound) {
    int top = static_cast<int>(res.maps.size());  // next homological index to fill
    const std::vector<FreeElement>& last = res.maps.back();
    std::vector<FreeElement> syz =
        syzygies(A, static_cast<int>(res.degrees[top - 1].size()), last, R->quotient_basis(),
                 res.degrees[top - 1]);
    std::vector<FreeElement> next = minimal_generators(
        R, static_cast<int>(last.size()), res.degrees[top], std::move(syz));
    if (next.empty()) {
      res.terminated = true;
      return;
    }
    std::vector<int> deg;
    deg.reserve(next.size());
    for (const FreeElement& c : next) deg.push_back(c.degree(res.degrees[top]));
    res.degrees.push_back(std::move(deg));
    res.maps.push_back(std::move(next));
  }
}

}  // namespace

FreeResolution resolve(const ModulePresentation& M, int bound, FreeResolution::Over over) {
  if (bound < 0) fail("IndexRange", "negative resolution bound");
  bool ambient = over == FreeResolution::Over::ambient;
  std::shared_ptr<FreeResolution>& slot = M.resolution_slot(ambient);
  if (!slot) {
    auto res = std::make_shared<FreeResolution>();
    res->over = over;
    res->ring = ambient ? M.ring()->ambient_ring() : M.ring();
    ModulePresentation base = ambient ? viewed_over_ambient(M) : M;
    MinimalPresentation mp = minimal_presentation(base);
    res->degrees.push_back(mp.pres.gen_degrees());
    if (mp.pres.ngens() == 0) {
      res->terminated = true;
    } else {
      std::vector<FreeElement> d1 = minimal_generators(
          res->ring, mp.pres.ngens(), mp.pres.gen_degrees(), mp.pres.relations());
      if (d1.empty()) {
        res->terminated = true;
      } else {
        std::vector<int> deg;
        for (const FreeElement& c : d1) deg.push_back(c.degree(mp.pres.gen_degrees()));
        res->degrees.push_back(std::move(deg));
        res->maps.push_back(std::move(d1));
      }
    }
    slot = std::move(res);
  }
  extend_resolution(*slot, bound);
  return *slot;
}

int pd_ambient(const ModulePresentation& M) {
  FreeResolution res = resolve(M, M.ring()->nvars() + 1, FreeResolution::Over::ambient);
  if (!res.terminated) fail("Internal", "ambient resolution did not terminate");
  return res.length();
}

std::string betti_text(const FreeResolution& res) {
  auto graded = res.graded_betti();
  int len = res.length();
  if (len < 0) return "0";
  int slope_lo = 0, slope_hi = 0;
  bool first = true;
  for (int i = 0; i <= len; ++i)
    for (auto& [d, c] : graded[i]) {
      (void)c;
      int slope = d - i;
      if (first) {
        slope_lo = slope_hi = slope;
        first = false;
      } else {
        slope_lo = std::min(slope_lo, slope);
        slope_hi = std::max(slope_hi, slope);
      }
    }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= len; ++i) os << i << "\t";
  os << "\n";
  for (int s = slope_lo; s <= slope_hi; ++s) {
    os << s << ":    ";
    for (int i = 0; i <= len; ++i) {
      int count = 0;
      for (auto& [d, c] : graded[i])
        if (d - i == s) count = c;
      os << (count ? std::to_string(count) : ".") << "\t";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

// equality of matrices up to simultaneous row/column permutation; sizes are
// small on the periodic fixtures, so brute-force column permutations with a
// canonical row sort
bool matrices_permutation_equal(const std::vector<FreeElement>& a,
                                const std::vector<FreeElement>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  int rows = a[0].rank;
  if (rows != b[0].rank) return false;
  auto canonical = [&](const std::vector<FreeElement>& m) {
    // multiset of sorted column-entry strings, then sorted
    std::vector<std::string> cols;
    for (const FreeElement& c : m) {
      std::vector<std::string> entries;
      for (const Polynomial& e : c.coords) entries.push_back(e.to_string());
      std::sort(entries.begin(), entries.end());
      std::string s;
      for (auto& e : entries) s += e + "|";
      cols.push_back(s);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
  };
  // necessary condition first (cheap): entry multisets match
  if (canonical(a) != canonical(b)) return false;
  // exact search over column permutations with row matching
  size_t n = a.size();
  if (n > 6 || rows > 6) {
    // too large to brute force; fall back to the necessary condition plus
    // identical column order
    for (size_t i = 0; i < n; ++i)
      if (!(a[i] == b[i])) return false;
    return true;
  }
  std::vector<int> perm(n);
  for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  std::vector<int> rowperm(rows);
  std::sort(perm.begin(), perm.end());
  do {
    for (int r = 0; r < rows; ++r) rowperm[r] = r;
    std::sort(rowperm.begin(), rowperm.end());
    do {
      bool ok = true;
      for (size_t j = 0; j < n && ok; ++j)
        for (int r = 0; r < rows && ok; ++r)
          if (!(a[perm[j]].coords[rowperm[r]] == b[j].coords[r])) ok = false;
      if (ok) return true;
    } while (std::next_permutation(rowperm.begin(), rowperm.end()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

std::string ComplexityEstimate::to_string() const {
  std::ostringstream os;
  switch (verdict) {
    case Verdict::zero:
      os << "zero (finite projective dimension)";
      break;
    case Verdict::bounded:
      os << "bounded";
      break;
    case Verdict::polynomial:
      os << "polynomial growth of degree " << degree;
      break;
    case Verdict::inconclusive:
      os << "inconclusive";
      break;
  }
  os << " on window [" << window_lo << ", " << window_hi << "]";
  if (periodicity_certified) os << ", periodicity certified";
  return os.str();
}

ComplexityEstimate complexity_estimate(const ModulePresentation& M, int bound) {
  if (bound < 4) fail("IndexRange", "complexity window needs bound >= 4");
  FreeResolution res = resolve(M, bound);
  ComplexityEstimate est;
  est.window_lo = 0;
  est.window_hi = res.length();
  if (res.terminated) {
    est.verdict = ComplexityEstimate::Verdict::zero;
    est.degree = 0;
    est.gamma = 0;
    return est;
  }
  std::vector<int> beta = res.betti_row();
  // period-2 repetition of consecutive matrices certifies bounded behaviour
  for (int s = 0; s + 3 < static_cast<int>(res.maps.size()); ++s) {
    if (matrices_permutation_equal(res.maps[s], res.maps[s + 2]) &&
        matrices_permutation_equal(res.maps[s + 1], res.maps[s + 3])) {
      est.verdict = ComplexityEstimate::Verdict::bounded;
      est.degree = 1;
      est.periodicity_certified = true;
      int bmax = 0;
      for (int b : beta) bmax = std::max(bmax, b);
      est.gamma = bmax;
      return est;
    }
  }
  // estimate the least r with beta_n <= gamma n^(r-1) plausibly stable
  for (int r = 1; r <= 4; ++r) {
    bool fits = true;
    int tail = std::max(2, static_cast<int>(beta.size()) / 2);
    for (int n = tail; n + 1 < static_cast<int>(beta.size()) && fits; ++n) {
      // beta_{n+1}/ (n+1)^{r-1} <= beta_n / n^{r-1}  (non-increasing ratio)
      mpz_class lhs = mpz_class(beta[n + 1]);
      mpz_class rhs = mpz_class(beta[n]);
      for (int e = 0; e < r - 1; ++e) {
        lhs *= n;
        rhs *= (n + 1);
      }
      if (lhs > rhs) fits = false;
    }
    if (fits) {
      est.verdict = r == 1 ? ComplexityEstimate::Verdict::bounded
                           : ComplexityEstimate::Verdict::polynomial;
      est.degree = r;
      mpq_class gamma = 0;
      for (int n = 1; n < static_cast<int>(beta.size()); ++n) {
        mpz_class denom = 1;
        for (int e = 0; e < r - 1; ++e) denom *= n;
        mpq_class ratio(mpz_class(beta[n]), denom);
        ratio.canonicalize();
        if (ratio > gamma) gamma = ratio;
      }
      est.gamma = gamma;
      return est;
    }
  }
  est.verdict = ComplexityEstimate::Verdict::inconclusive;
  return est;
}

}  // namespace depthlab
