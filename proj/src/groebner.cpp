#include "depthlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace depthlab {

int FreeElement::degree(const std::vector<int>& comp_degrees) const {
  int d = -1;
  for (int i = 0; i < rank; ++i) {
    if (coords[i].is_zero()) continue;
    int shift = comp_degrees.empty() ? 0 : comp_degrees[i];
    d = std::max(d, coords[i].degree() + shift);
  }
  return d;
}

bool FreeElement::is_homogeneous(const std::vector<int>& comp_degrees) const {
  int d = -2;
  for (int i = 0; i < rank; ++i) {
    if (coords[i].is_zero()) continue;
    if (!coords[i].is_homogeneous()) return false;
    int shift = comp_degrees.empty() ? 0 : comp_degrees[i];
    int di = coords[i].degree() + shift;
    if (d == -2)
      d = di;
    else if (d != di)
      return false;
  }
  return true;
}

FreeElement FreeElement::operator+(const FreeElement& o) const {
  FreeElement r(ring, rank);
  for (int i = 0; i < rank; ++i) r.coords[i] = coords[i] + o.coords[i];
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& o) const {
  FreeElement r(ring, rank);
  for (int i = 0; i < rank; ++i) r.coords[i] = coords[i] - o.coords[i];
  return r;
}

FreeElement FreeElement::times_monomial(const Monomial& m, const Scalar& c) const {
  FreeElement r(ring, rank);
  for (int i = 0; i < rank; ++i) r.coords[i] = coords[i].times_monomial(m, c);
  return r;
}

FreeElement FreeElement::times(const Polynomial& f) const {
  FreeElement r(ring, rank);
  for (int i = 0; i < rank; ++i) r.coords[i] = coords[i] * f;
  return r;
}

FreeElement FreeElement::scaled(const Scalar& c) const {
  FreeElement r(ring, rank);
  for (int i = 0; i < rank; ++i) r.coords[i] = coords[i].scaled(c);
  return r;
}

std::string FreeElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank; ++i) {
    if (i) os << ", ";
    os << coords[i].to_string();
  }
  os << ")";
  return os.str();
}

LeadTerm lead_term(const FreeElement& v, const ModuleOrder& order) {
  LeadTerm lt;
  for (int i = 0; i < v.rank; ++i) {
    if (v.coords[i].is_zero()) continue;
    const Term& t = v.coords[i].lead();
    if (lt.comp < 0 || order.compare(i, t.mono, lt.comp, lt.mono) > 0) {
      lt.comp = i;
      lt.mono = t.mono;
      lt.coef = t.coef;
    }
  }
  return lt;
}

namespace {

struct BasisElem {
  FreeElement v;
  LeadTerm lt;
  bool satellite = false;
};

// Subtracts (m, c)-multiple of g from w in place.
void subtract_multiple(FreeElement& w, const FreeElement& g, const Monomial& m, const Scalar& c) {
  for (int i = 0; i < w.rank; ++i) {
    if (g.coords[i].is_zero()) continue;
    w.coords[i] = w.coords[i] - g.coords[i].times_monomial(m, c);
  }
}

// Fully reduces v against basis; returns the normal form. When `cof` is
// non-null it receives, per basis index, the coefficient used (so that
// v = result + sum cof_k * basis_k).
FreeElement reduce_full(FreeElement v, const std::vector<BasisElem>& basis, const ModuleOrder& ord,
                        const FieldSpec& F, std::vector<Polynomial>* cof = nullptr) {
  FreeElement result(v.ring, v.rank);
  for (;;) {
    LeadTerm lt = lead_term(v, ord);
    if (lt.comp < 0) break;
    bool reduced_once = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      const BasisElem& b = basis[k];
      if (b.lt.comp != lt.comp || !b.lt.mono.divides(lt.mono)) continue;
      Monomial q = lt.mono / b.lt.mono;
      Scalar c = F.div(lt.coef, b.lt.coef);
      subtract_multiple(v, b.v, q, c);
      if (cof) (*cof)[k] = (*cof)[k] + Polynomial::monomial(v.ring, q, c);
      reduced_once = true;
      break;
    }
    if (!reduced_once) {
      // move the irreducible lead term over to the result
      Polynomial t = Polynomial::monomial(v.ring, lt.mono, lt.coef);
      result.coords[lt.comp] = result.coords[lt.comp] + t;
      v.coords[lt.comp] = v.coords[lt.comp] - t;
    }
  }
  return result;
}

struct PairKey {
  // selection key: degree, then lcm under the order, then indices
  int degree;
  Monomial lcmm;
  int comp;
  size_t i, j;
};

struct PairCmp {
  const ModuleOrder* ord;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    int c = ord->compare(a.comp, a.lcmm, b.comp, b.lcmm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis groebner_basis(const PolyRingPtr& ring, int rank, std::vector<FreeElement> gens,
                             const ModuleOrder& order, std::vector<FreeElement> presumed_gb,
                             const std::vector<int>& comp_degrees) {
  const FieldSpec& F = ring->field();
  std::vector<BasisElem> basis;
  auto add_elem = [&](FreeElement v, bool satellite) {
    if (v.is_zero()) return;
    LeadTerm lt = lead_term(v, order);
    v = v.scaled(F.inv(lt.coef));
    lt.coef = Scalar(1);
    basis.push_back(BasisElem{std::move(v), std::move(lt), satellite});
  };
  for (auto& g : gens) {
    if (static_cast<int>(g.coords.size()) != rank) fail("RankMismatch", "generator rank");
    add_elem(std::move(g), false);
  }
  for (auto& g : presumed_gb) add_elem(std::move(g), true);

  auto comp_degree = [&](int c) { return comp_degrees.empty() ? 0 : comp_degrees[c]; };

  PairCmp cmp{&order};
  std::set<PairKey, PairCmp> queue(cmp);
  std::set<std::pair<size_t, size_t>> treated;

  auto push_pair = [&](size_t i, size_t j) {
    const BasisElem& a = basis[i];
    const BasisElem& b = basis[j];
    if (a.satellite && b.satellite) return;
    if (a.lt.comp != b.lt.comp) return;
    Monomial L = Monomial::lcm(a.lt.mono, b.lt.mono);
    // product criterion, only valid in the ideal case
    if (rank == 1 && Monomial::coprime(a.lt.mono, b.lt.mono)) {
      treated.insert({i, j});
      return;
    }
    queue.insert(PairKey{L.degree() + comp_degree(a.lt.comp), std::move(L), a.lt.comp, i, j});
  };

  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({pk.i, pk.j});
    const BasisElem& a = basis[pk.i];
    const BasisElem& b = basis[pk.j];

    // chain criterion: an element k dividing the lcm whose pairs with both
    // i and j were already treated makes this pair redundant
    bool skip = false;
    for (size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (basis[k].lt.comp != pk.comp || !basis[k].lt.mono.divides(pk.lcmm)) continue;
      auto key1 = std::minmax(pk.i, k);
      auto key2 = std::minmax(pk.j, k);
      if (treated.count({key1.first, key1.second}) && treated.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Monomial qa = pk.lcmm / a.lt.mono;
    Monomial qb = pk.lcmm / b.lt.mono;
    FreeElement s = a.v.times_monomial(qa, Scalar(1)) - b.v.times_monomial(qb, Scalar(1));
    FreeElement r = reduce_full(std::move(s), basis, order, F);
    if (r.is_zero()) continue;
    add_elem(std::move(r), false);
    size_t n = basis.size() - 1;
    for (size_t i = 0; i < n; ++i) push_pair(i, n);
  }

  // minimalize: drop elements whose lead is divisible by another lead
  // (for identical leads the earliest insertion survives)
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (basis[j].lt.comp != basis[i].lt.comp) continue;
      if (!basis[j].lt.mono.divides(basis[i].lt.mono)) continue;
      if (basis[j].lt.mono == basis[i].lt.mono) {
        if (j < i) keep[i] = 0;
      } else {
        keep[i] = 0;
      }
    }
  }
  std::vector<BasisElem> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // tail-reduce each element against the others
  std::vector<FreeElement> final_elems;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasisElem> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    FreeElement r = reduce_full(minimal[i].v, others, order, F);
    if (r.is_zero()) continue;  // fully redundant element
    LeadTerm lt = lead_term(r, order);
    final_elems.push_back(r.scaled(F.inv(lt.coef)));
  }

  std::sort(final_elems.begin(), final_elems.end(), [&](const FreeElement& x, const FreeElement& y) {
    LeadTerm lx = lead_term(x, order), ly = lead_term(y, order);
    return order.compare(lx.comp, lx.mono, ly.comp, ly.mono) > 0;
  });

  GroebnerBasis G;
  G.ring = ring;
  G.rank = rank;
  G.order = order;
  G.elements = std::move(final_elems);
  for (const auto& e : G.elements) G.leads.push_back(lead_term(e, order));
  return G;
}

FreeElement normal_form(FreeElement v, const GroebnerBasis& G) {
  std::vector<BasisElem> basis;
  basis.reserve(G.elements.size());
  for (size_t i = 0; i < G.elements.size(); ++i)
    basis.push_back(BasisElem{G.elements[i], G.leads[i], false});
  return reduce_full(std::move(v), basis, G.order, G.ring->field());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  FreeElement v(f.ring(), {f});
  return normal_form(std::move(v), G).coords[0];
}

bool in_submodule(const FreeElement& v, const GroebnerBasis& G) {
  return normal_form(v, G).is_zero();
}

std::vector<FreeElement> ideal_satellites(const PolyRingPtr& ring, int rank,
                                          const std::vector<Polynomial>& ideal_basis) {
  std::vector<FreeElement> sats;
  sats.reserve(rank * ideal_basis.size());
  for (int j = 0; j < rank; ++j)
    for (const Polynomial& q : ideal_basis) {
      FreeElement e(ring, rank);
      e.coords[j] = q;
      sats.push_back(std::move(e));
    }
  return sats;
}

GroebnerBasis submodule_gb(const PolyRingPtr& ring, int rank, const std::vector<FreeElement>& gens,
                           const std::vector<Polynomial>& ideal_basis,
                           const std::vector<int>& comp_degrees) {
  ModuleOrder ord{ring->order(), 0};
  return groebner_basis(ring, rank, gens, ord, ideal_satellites(ring, rank, ideal_basis),
                        comp_degrees);
}

namespace {

// Shared engine for syzygies and lifting: Groebner basis of the graph
// module {(f_i, e_i)} + satellites in R^(rank+m) under the order where the
// first block dominates.
struct GraphGB {
  GroebnerBasis G;
  int rank;
  int m;
};

GraphGB graph_gb(const PolyRingPtr& ring, int rank, const std::vector<FreeElement>& gens,
                 const std::vector<Polynomial>& ideal_basis,
                 const std::vector<int>& comp_degrees) {
  int m = static_cast<int>(gens.size());
  std::vector<FreeElement> graph_gens;
  graph_gens.reserve(m);
  std::vector<int> degs(rank + m, 0);
  if (!comp_degrees.empty())
    for (int i = 0; i < rank; ++i) degs[i] = comp_degrees[i];
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(gens[i].coords.size()) != rank) fail("RankMismatch", "syzygy input rank");
    FreeElement g(ring, rank + m);
    for (int j = 0; j < rank; ++j) g.coords[j] = gens[i].coords[j];
    g.coords[rank + i] = Polynomial::constant(ring, Scalar(1));
    degs[rank + i] = gens[i].is_zero() ? 0 : gens[i].degree(comp_degrees);
    graph_gens.push_back(std::move(g));
  }
  std::vector<FreeElement> sats;
  for (int j = 0; j < rank; ++j)
    for (const Polynomial& q : ideal_basis) {
      FreeElement e(ring, rank + m);
      e.coords[j] = q;
      sats.push_back(std::move(e));
    }
  ModuleOrder ord{ring->order(), rank};
  GroebnerBasis G = groebner_basis(ring, rank + m, std::move(graph_gens), ord, std::move(sats), degs);
  return GraphGB{std::move(G), rank, m};
}

}  // namespace

std::vector<FreeElement> syzygies(const PolyRingPtr& ring, int rank,
                                  const std::vector<FreeElement>& gens,
                                  const std::vector<Polynomial>& ideal_basis,
                                  const std::vector<int>& comp_degrees) {
  GraphGB g = graph_gb(ring, rank, gens, ideal_basis, comp_degrees);
  GroebnerBasis ideal_gb;
  bool have_ideal = !ideal_basis.empty();
  if (have_ideal) {
    std::vector<FreeElement> ib;
    for (const auto& q : ideal_basis) ib.push_back(FreeElement(ring, {q}));
    ideal_gb.ring = ring;
    ideal_gb.rank = 1;
    ideal_gb.order = ModuleOrder{ring->order(), 0};
    ideal_gb.elements = ib;
    for (const auto& e : ideal_gb.elements) ideal_gb.leads.push_back(lead_term(e, ideal_gb.order));
  }
  std::vector<FreeElement> result;
  for (const FreeElement& e : g.G.elements) {
    bool f_zero = true;
    for (int j = 0; j < g.rank && f_zero; ++j)
      if (!e.coords[j].is_zero()) f_zero = false;
    if (!f_zero) continue;
    FreeElement s(ring, g.m);
    for (int i = 0; i < g.m; ++i) {
      Polynomial c = e.coords[g.rank + i];
      if (have_ideal && !c.is_zero()) c = normal_form(c, ideal_gb);
      s.coords[i] = std::move(c);
    }
    if (!s.is_zero()) result.push_back(std::move(s));
  }
  return result;
}

std::optional<std::vector<Polynomial>> lift(const PolyRingPtr& ring, int rank,
                                            const FreeElement& v,
                                            const std::vector<FreeElement>& gens,
                                            const std::vector<Polynomial>& ideal_basis) {
  GraphGB g = graph_gb(ring, rank, gens, ideal_basis, {});
  FreeElement w(ring, rank + g.m);
  for (int j = 0; j < rank; ++j) w.coords[j] = v.coords[j];
  FreeElement nf = normal_form(std::move(w), g.G);
  for (int j = 0; j < rank; ++j)
    if (!nf.coords[j].is_zero()) return std::nullopt;
  std::vector<Polynomial> cof;
  cof.reserve(g.m);
  for (int i = 0; i < g.m; ++i) cof.push_back(-nf.coords[rank + i]);
  return cof;
}

std::vector<Polynomial> ideal_intersect(const PolyRingPtr& ring, const std::vector<Polynomial>& I,
                                        const std::vector<Polynomial>& J,
                                        const std::vector<Polynomial>& ideal_basis) {
  // I ∩ J = first coordinates of syzygies of [(1,1)] ++ I⊕0 ++ 0⊕J
  std::vector<FreeElement> gens;
  FreeElement diag(ring, 2);
  diag.coords[0] = Polynomial::constant(ring, Scalar(1));
  diag.coords[1] = Polynomial::constant(ring, Scalar(1));
  gens.push_back(std::move(diag));
  for (const auto& f : I) {
    FreeElement e(ring, 2);
    e.coords[0] = f;
    gens.push_back(std::move(e));
  }
  for (const auto& f : J) {
    FreeElement e(ring, 2);
    e.coords[1] = f;
    gens.push_back(std::move(e));
  }
  std::vector<Polynomial> out;
  for (const FreeElement& s : syzygies(ring, 2, gens, ideal_basis))
    if (!s.coords[0].is_zero()) out.push_back(s.coords[0]);
  return out;
}

std::vector<Polynomial> ideal_quotient(const PolyRingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J,
                                       const std::vector<Polynomial>& ideal_basis) {
  // (I : J) = ∩_g (I : g); (I : g) from syzygies of [g] ++ I
  std::vector<Polynomial> acc;
  bool first = true;
  for (const Polynomial& gpoly : J) {
    if (gpoly.is_zero()) continue;
    std::vector<FreeElement> gens;
    gens.push_back(FreeElement(ring, {gpoly}));
    for (const auto& f : I) gens.push_back(FreeElement(ring, {f}));
    std::vector<Polynomial> colon;
    for (const FreeElement& s : syzygies(ring, 1, gens, ideal_basis))
      if (!s.coords[0].is_zero()) colon.push_back(s.coords[0]);
    if (first) {
      acc = std::move(colon);
      first = false;
    } else {
      acc = ideal_intersect(ring, acc, colon, ideal_basis);
    }
  }
  if (first) return {Polynomial::constant(ring, Scalar(1))};  // (I : 0-ideal) = R
  return acc;
}

namespace {

bool same_submodule(const GroebnerBasis& A, const GroebnerBasis& B) {
  if (A.elements.size() != B.elements.size()) return false;
  for (size_t i = 0; i < A.elements.size(); ++i)
    if (!(A.elements[i] == B.elements[i])) return false;
  return true;
}

}  // namespace

std::vector<FreeElement> saturate(const PolyRingPtr& ring, int rank,
                                  const std::vector<FreeElement>& N, const Polynomial& f,
                                  const std::vector<Polynomial>& ideal_basis) {
  if (f.is_zero()) fail("ZeroDivisorArg", "saturation by zero");
  std::vector<FreeElement> current = N;
  GroebnerBasis gb = submodule_gb(ring, rank, current, ideal_basis);
  for (;;) {
    // (current : f): syzygies of [f*e_1..f*e_rank] ++ current, first block
    std::vector<FreeElement> gens;
    for (int j = 0; j < rank; ++j) {
      FreeElement e(ring, rank);
      e.coords[j] = f;
      gens.push_back(std::move(e));
    }
    for (const auto& v : current) gens.push_back(v);
    std::vector<FreeElement> next;
    for (const FreeElement& s : syzygies(ring, rank, gens, ideal_basis)) {
      FreeElement v(ring, rank);
      for (int j = 0; j < rank; ++j) v.coords[j] = s.coords[j];
      if (!v.is_zero()) next.push_back(std::move(v));
    }
    GroebnerBasis gb_next = submodule_gb(ring, rank, next, ideal_basis);
    if (same_submodule(gb, gb_next)) return current;
    current = std::move(next);
    gb = std::move(gb_next);
  }
}

std::vector<Polynomial> eliminate(const PolyRingPtr& ring, const std::vector<Polynomial>& I,
                                  const std::vector<bool>& keep) {
  int n = ring->nvars();
  if (static_cast<int>(keep.size()) != n) fail("IndexRange", "keep mask size");
  std::vector<int> perm;  // eliminated block first
  for (int i = 0; i < n; ++i)
    if (!keep[i]) perm.push_back(i);
  int split = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i)
    if (keep[i]) perm.push_back(i);

  std::vector<std::string> names;
  names.reserve(n);
  for (int i : perm) names.push_back(ring->var_names()[i]);
  MonoOrder elim_order{MonoOrder::Base::grevlex, split};
  PolyRingPtr elim_ring = PolyRing::make(ring->field(), names, elim_order);

  auto permute = [&](const Polynomial& f, const PolyRingPtr& target,
                     const std::vector<int>& p) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      Monomial m = Monomial::one(n);
      for (int i = 0; i < n; ++i) m.exps[i] = t.mono.exps[p[i]];
      terms.push_back(Term{std::move(m), t.coef});
    }
    Polynomial acc(target);
    for (const Term& t : terms) acc = acc + Polynomial::monomial(target, t.mono, t.coef);
    return acc;
  };

  std::vector<FreeElement> gens;
  for (const auto& f : I) gens.push_back(FreeElement(elim_ring, {permute(f, elim_ring, perm)}));
  GroebnerBasis G = groebner_basis(elim_ring, 1, std::move(gens), ModuleOrder{elim_order, 0});

  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;

  std::vector<Polynomial> out;
  for (const FreeElement& e : G.elements) {
    const Polynomial& f = e.coords[0];
    bool in_keep = true;
    for (const Term& t : f.terms())
      for (int i = 0; i < split && in_keep; ++i)
        if (t.mono.exps[i] != 0) in_keep = false;
    if (in_keep) out.push_back(permute(f, ring, inv));
  }
  return out;
}

}  // namespace depthlab
