#include "depthlab/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace depthlab {

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

void add_term(std::map<int, mpz_class>& m, int d, const mpz_class& c) {
  auto it = m.find(d);
  if (it == m.end()) {
    if (c != 0) m.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Exact division of a Laurent polynomial by (1 - t); the quotient exists
// iff the sum of coefficients is zero.
std::map<int, mpz_class> divide_by_one_minus_t(const std::map<int, mpz_class>& p) {
  // if p = (1-t) q then q_d = sum_{j <= d} p_j
  std::map<int, mpz_class> q;
  mpz_class acc = 0;
  if (p.empty()) return q;
  int lo = p.begin()->first;
  int hi = p.rbegin()->first;
  for (int d = lo; d <= hi; ++d) {
    auto it = p.find(d);
    if (it != p.end()) acc += it->second;
    if (acc != 0) q.emplace(d, acc);
  }
  if (acc != 0) fail("Internal", "inexact division by (1-t)");
  return q;
}

int vanishing_order_at_one(const std::map<int, mpz_class>& p) {
  std::map<int, mpz_class> cur = p;
  int order = 0;
  for (;;) {
    if (cur.empty()) return order;  // zero polynomial: caller handles
    mpz_class sum = 0;
    for (auto& [d, c] : cur) sum += c;
    if (sum != 0) return order;
    cur = divide_by_one_minus_t(cur);
    ++order;
  }
}

}  // namespace

int HilbertSeries::dim() const {
  if (num.empty()) return kDimZeroModule;
  return nvars - vanishing_order_at_one(num);
}

mpz_class HilbertSeries::multiplicity() const {
  if (num.empty()) return 0;
  int v = vanishing_order_at_one(num);
  std::map<int, mpz_class> cur = num;
  for (int i = 0; i < v; ++i) cur = divide_by_one_minus_t(cur);
  mpz_class sum = 0;
  for (auto& [d, c] : cur) sum += c;
  if (sum < 0) sum = -sum;
  return sum;
}

mpz_class HilbertSeries::hf(int d) const {
  mpz_class r = 0;
  for (auto& [j, c] : num) {
    if (j > d) break;
    r += c * binomial(d - j + nvars - 1, nvars - 1);
  }
  return r;
}

mpz_class HilbertSeries::length() const {
  if (num.empty()) return 0;
  if (dim() > 0) fail("LengthOfPositiveDimensional", "module has positive dimension");
  std::map<int, mpz_class> cur = num;
  for (int i = 0; i < nvars; ++i) cur = divide_by_one_minus_t(cur);
  mpz_class sum = 0;
  for (auto& [d, c] : cur) sum += c;
  return sum;
}

std::pair<int, int> HilbertSeries::finite_support() const {
  if (num.empty()) return {0, -1};
  std::map<int, mpz_class> cur = num;
  for (int i = 0; i < nvars; ++i) cur = divide_by_one_minus_t(cur);
  if (cur.empty()) return {0, -1};
  return {cur.begin()->first, cur.rbegin()->first};
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  HilbertSeries r = *this;
  for (auto& [d, c] : o.num) add_term(r.num, d, c);
  return r;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  HilbertSeries r = *this;
  for (auto& [d, c] : o.num) add_term(r.num, d, -c);
  return r;
}

HilbertSeries HilbertSeries::shifted(int by) const {
  HilbertSeries r;
  r.nvars = nvars;
  for (auto& [d, c] : num) r.num.emplace(d + by, c);
  return r;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto& [d, c] : num) {
    if (!first && c > 0) os << "+";
    first = false;
    if (c == -1 && d != 0)
      os << "-";
    else if (!(c == 1 && d != 0))
      os << c.get_str();
    if (d != 0) {
      os << "t";
      if (d != 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  os << ") / (1-t)^" << nvars;
  return os.str();
}

namespace {

struct MonoIdealHN {
  int nvars;

  // Numerator polynomial of k[x]/I for the monomial ideal with the given
  // minimal generators (variable pivot recursion).
  std::map<int, mpz_class> run(std::vector<Monomial> gens) {
    minimalize(gens);
    return compute(gens);
  }

  void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
    std::vector<Monomial> out;
    for (const Monomial& g : gens) {
      bool redundant = false;
      for (const Monomial& h : out)
        if (h.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(g);
    }
    gens = std::move(out);
  }

  std::map<int, mpz_class> compute(const std::vector<Monomial>& gens) {
    std::map<int, mpz_class> r;
    for (const Monomial& g : gens)
      if (g.is_one()) return r;  // unit ideal: numerator 0

    // pairwise coprime generators: product of (1 - t^deg)
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
      for (size_t j = i + 1; j < gens.size() && coprime; ++j)
        if (!Monomial::coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
      r.emplace(0, 1);
      for (const Monomial& g : gens) {
        std::map<int, mpz_class> next;
        for (auto& [d, c] : r) {
          add_term(next, d, c);
          add_term(next, d + g.degree(), -c);
        }
        r = std::move(next);
      }
      return r;
    }

    // pivot on the most frequent variable
    std::vector<int> freq(nvars, 0);
    for (const Monomial& g : gens)
      for (int v = 0; v < nvars; ++v)
        if (g.exps[v] > 0) ++freq[v];
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // I + (x): drop the pivot variable from consideration
    std::vector<Monomial> plus;
    Monomial xv = Monomial::one(nvars);
    xv.exps[pivot] = 1;
    plus.push_back(xv);
    for (const Monomial& g : gens)
      if (g.exps[pivot] == 0) plus.push_back(g);
    minimalize(plus);

    // I : x
    std::vector<Monomial> colon;
    for (const Monomial& g : gens) {
      Monomial h = g;
      if (h.exps[pivot] > 0) h.exps[pivot] -= 1;
      colon.push_back(h);
    }
    minimalize(colon);

    std::map<int, mpz_class> a = compute(plus);
    std::map<int, mpz_class> b = compute(colon);
    for (auto& [d, c] : b) add_term(a, d + 1, c);
    return a;
  }
};

}  // namespace

HilbertSeries hilbert_from_leads(int nvars, const std::vector<LeadTerm>& leads, int rank,
                                 const std::vector<int>& comp_degrees) {
  HilbertSeries hs;
  hs.nvars = nvars;
  MonoIdealHN engine{nvars};
  for (int comp = 0; comp < rank; ++comp) {
    std::vector<Monomial> gens;
    for (const LeadTerm& lt : leads)
      if (lt.comp == comp) gens.push_back(lt.mono);
    std::map<int, mpz_class> numer = engine.run(std::move(gens));
    int shift = comp_degrees.empty() ? 0 : comp_degrees[comp];
    for (auto& [d, c] : numer) add_term(hs.num, d + shift, c);
  }
  return hs;
}

HilbertSeries hilbert_of_quotient_module(const PolyRingPtr& ring,
                                         const std::vector<FreeElement>& relations, int rank,
                                         const std::vector<int>& comp_degrees,
                                         const std::vector<Polynomial>& ideal_basis) {
  GroebnerBasis G = submodule_gb(ring, rank, relations, ideal_basis, comp_degrees);
  return hilbert_from_leads(ring->nvars(), G.leads, rank, comp_degrees);
}

}  // namespace depthlab
