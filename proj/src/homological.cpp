#include "depthlab/homological.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace depthlab {

int depth(const ModulePresentation& M) {
  if (M.is_zero()) return kDepthInfinite;
  return M.ring()->nvars() - pd_ambient(M);
}

bool is_mcm(const ModulePresentation& M) {
  if (M.is_zero()) return false;
  return depth(M) == M.ring()->dim();
}

int default_sweep_bound(const RingPtr& R) { return 2 * R->dim() + 2; }

namespace {

// F_j tensor N as a presented module: generators (c, l), c over the free
// basis of F_j, l over the generators of N.
ModulePresentation step_tensor(const RingPtr& R, const std::vector<int>& fdeg,
                               const ModulePresentation& N) {
  const PolyRingPtr& A = R->ambient();
  int b = static_cast<int>(fdeg.size());
  int q = N.ngens();
  std::vector<int> degrees(b * q);
  for (int c = 0; c < b; ++c)
    for (int l = 0; l < q; ++l) degrees[c * q + l] = fdeg[c] + N.gen_degrees()[l];
  std::vector<FreeElement> rels;
  for (int c = 0; c < b; ++c)
    for (const FreeElement& d : N.relations()) {
      FreeElement col(A, b * q);
      for (int l = 0; l < q; ++l) col.coords[c * q + l] = d.coords[l];
      rels.push_back(std::move(col));
    }
  return ModulePresentation::from_relations(R, b * q, std::move(degrees), std::move(rels));
}

// Hom(F_j, N): generators (c, l) of degree ndeg_l - fdeg_c.
ModulePresentation step_hom(const RingPtr& R, const std::vector<int>& fdeg,
                            const ModulePresentation& N) {
  std::vector<int> neg(fdeg.size());
  for (size_t c = 0; c < fdeg.size(); ++c) neg[c] = -fdeg[c];
  return step_tensor(R, neg, N);
}

// induced map F_j tensor N -> F_{j-1} tensor N from the columns of d_j
ModuleMap tensor_step_map(const ModulePresentation& src, const ModulePresentation& tgt,
                          const std::vector<FreeElement>& dj, int q) {
  const PolyRingPtr& A = src.ring()->ambient();
  int bsrc = static_cast<int>(dj.size());
  std::vector<FreeElement> cols;
  cols.reserve(bsrc * q);
  for (int c = 0; c < bsrc; ++c)
    for (int l = 0; l < q; ++l) {
      FreeElement col(A, tgt.ngens());
      int brows = tgt.ngens() / q;
      for (int r = 0; r < brows; ++r) col.coords[r * q + l] = dj[c].coords[r];
      cols.push_back(std::move(col));
    }
  return ModuleMap::from_columns(src, tgt, std::move(cols));
}

// induced map Hom(F_{j-1}, N) -> Hom(F_j, N)
ModuleMap hom_step_map(const ModulePresentation& src, const ModulePresentation& tgt,
                       const std::vector<FreeElement>& dj, int q) {
  const PolyRingPtr& A = src.ring()->ambient();
  int bsrc = src.ngens() / q;   // rank of F_{j-1}
  int btgt = static_cast<int>(dj.size());  // rank of F_j
  std::vector<FreeElement> cols;
  cols.reserve(src.ngens());
  for (int cp = 0; cp < bsrc; ++cp)
    for (int l = 0; l < q; ++l) {
      FreeElement col(A, tgt.ngens());
      for (int c = 0; c < btgt; ++c) col.coords[c * q + l] = dj[c].coords[cp];
      cols.push_back(std::move(col));
    }
  return ModuleMap::from_columns(src, tgt, std::move(cols));
}

std::vector<FreeElement> kernel_raw_of(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  int p = f.source.ngens();
  int q = f.target.ngens();
  if (q == 0) {
    std::vector<FreeElement> gens;
    for (int i = 0; i < p; ++i) {
      FreeElement e(R->ambient(), p);
      e.coords[i] = Polynomial::constant(R->ambient(), Scalar(1));
      gens.push_back(std::move(e));
    }
    return gens;
  }
  std::vector<FreeElement> combined = f.columns;
  for (const FreeElement& rel : f.target.relations()) combined.push_back(rel);
  std::vector<FreeElement> syz = syzygies(R->ambient(), q, combined, R->quotient_basis(),
                                          f.target.gen_degrees());
  std::vector<FreeElement> gens;
  for (const FreeElement& s : syz) {
    FreeElement v(R->ambient(), p);
    for (int i = 0; i < p; ++i) v.coords[i] = s.coords[i];
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return gens;
}

// H = ker(outgoing) / (im(incoming) + relations of the middle module)
ModulePresentation homology_at(const ModuleMap& incoming, const ModuleMap& outgoing) {
  const ModulePresentation& B = outgoing.source;
  const RingPtr& R = B.ring();
  std::vector<FreeElement> ker = kernel_raw_of(outgoing);
  std::vector<FreeElement> rels = B.relations();
  for (const FreeElement& c : incoming.columns) rels.push_back(c);
  ModulePresentation raw = subquotient(R, B.ngens(), B.gen_degrees(), ker, rels);
  return minimal_presentation(raw).pres;
}

bool homology_vanishes(const ModuleMap& incoming, const ModuleMap& outgoing) {
  const ModulePresentation& B = outgoing.source;
  const RingPtr& R = B.ring();
  std::vector<FreeElement> ker = kernel_raw_of(outgoing);
  if (ker.empty()) return true;
  std::vector<FreeElement> rels = B.relations();
  for (const FreeElement& c : incoming.columns) rels.push_back(c);
  GroebnerBasis gb = submodule_gb(R->ambient(), B.ngens(), rels, R->quotient_basis(),
                                  B.gen_degrees());
  for (const FreeElement& g : ker)
    if (!in_submodule(g, gb)) return false;
  return true;
}

struct TorComplexSpots {
  ModulePresentation c_prev, c_mid, c_next;  // C_{i-1}, C_i, C_{i+1}
  ModuleMap incoming;                        // C_{i+1} -> C_i
  ModuleMap outgoing;                        // C_i -> C_{i-1}
  bool middle_zero = false;
};

int checked_bound(const RingPtr& R, int i, int max_bound) {
  int need = i + 1;
  if (max_bound >= 0 && need > max_bound)
    fail("BoundTooSmall",
         "index " + std::to_string(i) + " needs resolution bound " + std::to_string(need));
  (void)R;
  return need;
}

TorComplexSpots tor_spots(const ModulePresentation& M, const ModulePresentation& N, int i,
                          int max_bound) {
  check_same_ring(M, N);
  const RingPtr& R = M.ring();
  FreeResolution res = resolve(M, checked_bound(R, i, max_bound));
  TorComplexSpots s;
  int q = N.ngens();
  if (i > res.length()) {
    s.middle_zero = true;
    return s;
  }
  s.c_mid = step_tensor(R, res.degrees[i], N);
  s.c_prev = i >= 1 ? step_tensor(R, res.degrees[i - 1], N)
                    : ModulePresentation::zero(R);
  if (i >= 1)
    s.outgoing = tensor_step_map(s.c_mid, s.c_prev, res.maps[i - 1], q);
  else
    s.outgoing = ModuleMap::zero_map(s.c_mid, ModulePresentation::zero(R));
  if (i + 1 <= res.length()) {
    s.c_next = step_tensor(R, res.degrees[i + 1], N);
    s.incoming = tensor_step_map(s.c_next, s.c_mid, res.maps[i], q);
  } else {
    s.c_next = ModulePresentation::zero(R);
    s.incoming = ModuleMap::zero_map(s.c_next, s.c_mid);
  }
  return s;
}

TorComplexSpots ext_spots(const ModulePresentation& M, const ModulePresentation& N, int i,
                          int max_bound) {
  check_same_ring(M, N);
  const RingPtr& R = M.ring();
  FreeResolution res = resolve(M, checked_bound(R, i, max_bound));
  TorComplexSpots s;
  int q = N.ngens();
  if (i > res.length()) {
    s.middle_zero = true;
    return s;
  }
  s.c_mid = step_hom(R, res.degrees[i], N);
  // incoming: Hom(F_{i-1}, N) -> Hom(F_i, N)
  if (i >= 1) {
    s.c_prev = step_hom(R, res.degrees[i - 1], N);
    s.incoming = hom_step_map(s.c_prev, s.c_mid, res.maps[i - 1], q);
  } else {
    s.c_prev = ModulePresentation::zero(R);
    s.incoming = ModuleMap::zero_map(s.c_prev, s.c_mid);
  }
  // outgoing: Hom(F_i, N) -> Hom(F_{i+1}, N)
  if (i + 1 <= res.length()) {
    s.c_next = step_hom(R, res.degrees[i + 1], N);
    s.outgoing = hom_step_map(s.c_mid, s.c_next, res.maps[i], q);
  } else {
    s.c_next = ModulePresentation::zero(R);
    s.outgoing = ModuleMap::zero_map(s.c_mid, s.c_next);
  }
  return s;
}

}  // namespace

ModulePresentation tor(const ModulePresentation& M, const ModulePresentation& N, int i,
                       int max_bound) {
  if (i < 0) fail("IndexRange", "negative Tor index");
  if (i == 0) return tensor(M, N);
  TorComplexSpots s = tor_spots(M, N, i, max_bound);
  if (s.middle_zero) return ModulePresentation::zero(M.ring());
  return homology_at(s.incoming, s.outgoing);
}

bool tor_vanishes(const ModulePresentation& M, const ModulePresentation& N, int i,
                  int max_bound) {
  if (i == 0) return tensor(M, N).is_zero();
  TorComplexSpots s = tor_spots(M, N, i, max_bound);
  if (s.middle_zero) return true;
  return homology_vanishes(s.incoming, s.outgoing);
}

ModulePresentation ext(const ModulePresentation& M, const ModulePresentation& N, int i,
                       int max_bound) {
  if (i < 0) fail("IndexRange", "negative Ext index");
  if (i == 0) return hom(M, N).pres;
  TorComplexSpots s = ext_spots(M, N, i, max_bound);
  if (s.middle_zero) return ModulePresentation::zero(M.ring());
  return homology_at(s.incoming, s.outgoing);
}

bool ext_vanishes(const ModulePresentation& M, const ModulePresentation& N, int i,
                  int max_bound) {
  if (i == 0) return hom(M, N).pres.is_zero();
  TorComplexSpots s = ext_spots(M, N, i, max_bound);
  if (s.middle_zero) return true;
  return homology_vanishes(s.incoming, s.outgoing);
}

// ---------------------------------------------------------------------------
// canonical module and duals

namespace {
std::map<const Ring*, ModulePresentation>& canonical_cache() {
  static std::map<const Ring*, ModulePresentation> cache;
  return cache;
}
}  // namespace

ModulePresentation canonical_module(const RingPtr& R) {
  auto& cache = canonical_cache();
  auto it = cache.find(R.get());
  if (it != cache.end()) return it->second;
  if (!R->is_cohen_macaulay())
    fail("HypothesisViolated", "canonical module requires a Cohen-Macaulay fixture");
  int c = R->codim();
  ModulePresentation result;
  if (c == 0) {
    result = ModulePresentation::free_module(R, 1);
  } else {
    ModulePresentation R1 = ModulePresentation::free_module(R, 1);
    FreeResolution res = resolve(R1, c + 1, FreeResolution::Over::ambient);
    RingPtr S = R->ambient_ring();
    // Hom(F_c, S) -> Hom(F_{c+1}, S) with free modules
    ModulePresentation Sfree = ModulePresentation::free_module(S, 1);
    ModulePresentation hc = step_hom(S, res.degrees[c], Sfree);
    ModulePresentation hprev = step_hom(S, res.degrees[c - 1], Sfree);
    ModuleMap incoming = hom_step_map(hprev, hc, res.maps[c - 1], 1);
    ModuleMap outgoing;
    if (c + 1 <= res.length()) {
      ModulePresentation hnext = step_hom(S, res.degrees[c + 1], Sfree);
      outgoing = hom_step_map(hc, hnext, res.maps[c], 1);
    } else {
      outgoing = ModuleMap::zero_map(hc, ModulePresentation::zero(S));
    }
    ModulePresentation extS = homology_at(incoming, outgoing);
    // reinterpret over R: same generators, relations reduced mod the ideal
    std::vector<FreeElement> rels = extS.relations();
    result = ModulePresentation::from_relations(R, extS.ngens(), extS.gen_degrees(),
                                                std::move(rels));
    result = minimal_presentation(result).pres;
  }
  // normalize degrees so the smallest generator degree is zero
  if (result.ngens() > 0) {
    int dmin = *std::min_element(result.gen_degrees().begin(), result.gen_degrees().end());
    if (dmin != 0) {
      std::vector<int> deg = result.gen_degrees();
      for (int& d : deg) d -= dmin;
      result = ModulePresentation::from_relations(result.ring(), result.ngens(), deg,
                                                  result.relations(), true);
    }
  }
  cache[R.get()] = result;
  return result;
}

bool is_gorenstein(const RingPtr& R) {
  ModulePresentation w = canonical_module(R);
  return mu(w) == 1 && is_free(w);
}

ModulePresentation star_dual(const ModulePresentation& M) {
  return hom(M, ModulePresentation::free_module(M.ring(), 1)).pres;
}

ModulePresentation vee_dual(const ModulePresentation& M) {
  return hom(M, canonical_module(M.ring())).pres;
}

ModulePresentation syzygy_module(const ModulePresentation& M, int j, int max_bound) {
  if (j < 1) fail("IndexRange", "syzygy index must be >= 1");
  const RingPtr& R = M.ring();
  int need = j + 1;
  if (max_bound >= 0 && need > max_bound) fail("BoundTooSmall", "syzygy needs bound j+1");
  FreeResolution res = resolve(M, need);
  if (j > res.length()) return ModulePresentation::zero(R);
  std::vector<FreeElement> rels;
  if (j + 1 <= res.length()) rels = res.maps[j];
  return ModulePresentation::from_relations(R, static_cast<int>(res.degrees[j].size()),
                                            res.degrees[j], std::move(rels), true);
}

PushforwardResult pushforward(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  const PolyRingPtr& A = R->ambient();
  ModuleMap dd = double_dual_map(M);
  if (!kernel(dd).pres.is_zero())
    fail("NotTorsionless", "natural map to the double dual is not injective");
  HomModule star = hom(M, ModulePresentation::free_module(R, 1));
  int m = star.pres.ngens();
  // generator t has degree delta_t; the free cover needs the opposite twist
  std::vector<int> fdeg(m);
  for (int t = 0; t < m; ++t) fdeg[t] = -star.pres.gen_degrees()[t];
  ModulePresentation cover = ModulePresentation::free_module(R, m, fdeg);
  std::vector<FreeElement> cols(M.ngens(), FreeElement(A, m));
  for (int i = 0; i < M.ngens(); ++i)
    for (int t = 0; t < m; ++t)
      cols[i].coords[t] = star.generator_maps[t].columns[i].coords[0];
  ModuleMap u = ModuleMap::from_columns(M, cover, std::move(cols));
  if (!u.is_well_defined()) fail("Internal", "pushforward map ill-defined");
  if (!kernel(u).pres.is_zero()) fail("Internal", "pushforward map not injective");
  CokernelModule coker = cokernel(u);
  // depth can drop by at most one along the pushforward
  int dM = depth(M);
  if (dM >= 1 && !coker.pres.is_zero()) {
    int d1 = depth(coker.pres);
    if (d1 < dM - 1) fail("Internal", "pushforward depth dropped by more than one");
  }
  return PushforwardResult{coker.pres, u, cover};
}

// ---------------------------------------------------------------------------
// named checkers

std::string DepthFormulaReport::to_string() const {
  std::ostringstream os;
  os << "depth(M)=" << depth_m << " depth(N)=" << depth_n << " depth(R)=" << depth_r
     << " depth(MxN)=" << depth_mn << " holds=" << (holds ? "yes" : "no")
     << " defect=" << defect;
  return os.str();
}

DepthFormulaReport depth_formula_check(const ModulePresentation& M, const ModulePresentation& N,
                                       int bound) {
  check_same_ring(M, N);
  if (M.is_zero() || N.is_zero()) fail("HypothesisViolated", "depth formula needs nonzero modules");
  const RingPtr& R = M.ring();
  if (bound < 0) bound = default_sweep_bound(R);
  DepthFormulaReport rep;
  rep.bound = bound;
  rep.depth_m = depth(M);
  rep.depth_n = depth(N);
  rep.depth_r = depth(ModulePresentation::free_module(R, 1));
  ModulePresentation T = tensor(M, N);
  rep.depth_mn = depth(T);
  rep.holds = rep.depth_m + rep.depth_n == rep.depth_r + rep.depth_mn;
  rep.defect = rep.depth_r - rep.depth_mn;
  bool all_vanish = true;
  for (int i = 1; i <= bound; ++i) {
    TorEntry e;
    e.index = i;
    ModulePresentation Ti = tor(M, N, i);
    e.zero = Ti.is_zero();
    e.dim = module_dim(Ti);
    if (!e.zero && e.dim <= 0) e.length = module_length(Ti);
    all_vanish = all_vanish && e.zero;
    rep.tor_table.push_back(std::move(e));
  }
  if (R->is_complete_intersection() && R->has_isolated_singularity() && all_vanish &&
      bound >= default_sweep_bound(R))
    rep.theorem_consistent = rep.holds;
  return rep;
}

ExtDepthReport ext_depth_criterion(const ModulePresentation& M, const ModulePresentation& N,
                                   int n) {
  check_same_ring(M, N);
  const RingPtr& R = M.ring();
  ExtDepthReport rep;
  rep.n = n;
  rep.d = R->dim();
  if (n < 1 || n > depth(M)) fail("HypothesisViolated", "need 1 <= n <= depth(M)");
  if (!is_locally_free_on_punctured(M))
    fail("HypothesisViolated", "M must be locally free on the punctured spectrum");
  if (!is_mcm(N)) fail("HypothesisViolated", "N must be maximal Cohen-Macaulay");
  ModulePresentation Nvee = vee_dual(N);
  rep.ext_side = true;
  for (int i = rep.d - n + 1; i <= rep.d; ++i)
    if (!ext_vanishes(M, Nvee, i)) {
      rep.ext_side = false;
      break;
    }
  rep.depth_side = depth(tensor(M, N)) >= n;
  rep.agree = rep.depth_side == rep.ext_side;
  return rep;
}

LengthDualityReport length_duality_check(const ModulePresentation& M,
                                         const ModulePresentation& N, int i) {
  check_same_ring(M, N);
  const RingPtr& R = M.ring();
  if (i < 1) fail("HypothesisViolated", "index must be positive");
  if (!is_locally_free_on_punctured(M))
    fail("HypothesisViolated", "M must be locally free on the punctured spectrum");
  if (!is_mcm(N)) fail("HypothesisViolated", "N must be maximal Cohen-Macaulay");
  int d = R->dim();
  ModulePresentation T = tor(M, N, i);
  if (module_dim(T) > 0) fail("HypothesisViolated", "Tor_i(M,N) must have finite length");
  LengthDualityReport rep;
  rep.len_tor = T.is_zero() ? 0 : module_length(T);
  ModulePresentation E = ext(M, vee_dual(N), d + i);
  if (!E.is_zero() && module_dim(E) > 0)
    fail("Internal", "dual Ext module unexpectedly has positive dimension");
  rep.len_ext = E.is_zero() ? 0 : module_length(E);
  rep.equal = rep.len_ext == rep.len_tor;
  return rep;
}

EquivalenceReport cor25_equivalence_check(const ModulePresentation& M,
                                          const ModulePresentation& N, int bound) {
  check_same_ring(M, N);
  const RingPtr& R = M.ring();
  if (!R->is_complete_intersection() || !R->has_isolated_singularity())
    fail("HypothesisViolated", "ring must be a complete intersection with isolated singularity");
  if (!is_mcm(M) || !is_mcm(N)) fail("HypothesisViolated", "both modules must be MCM");
  if (bound < 0) bound = default_sweep_bound(R);
  EquivalenceReport rep;
  rep.bound = bound;
  rep.tensor_mcm = is_mcm(tensor(M, N));
  rep.tor_vanishing = true;
  for (int i = 1; i <= bound && rep.tor_vanishing; ++i)
    rep.tor_vanishing = tor_vanishes(M, N, i);
  rep.ext_mn_vanishing = true;
  for (int i = 1; i <= bound && rep.ext_mn_vanishing; ++i)
    rep.ext_mn_vanishing = ext_vanishes(M, N, i);
  rep.ext_nm_vanishing = true;
  for (int i = 1; i <= bound && rep.ext_nm_vanishing; ++i)
    rep.ext_nm_vanishing = ext_vanishes(N, M, i);
  return rep;
}

bool semidualizing_test(const ModulePresentation& C, int bound) {
  if (C.is_zero()) fail("HypothesisViolated", "semidualizing candidate must be nonzero");
  const RingPtr& R = C.ring();
  HomModule H = hom(C, C);
  auto idc = hom_coordinates(H, ModuleMap::identity(C));
  if (!idc) fail("Internal", "identity not found in Hom(C,C)");
  ModulePresentation R1 = ModulePresentation::free_module(R, 1);
  ModuleMap homothety{R1, H.pres, {*idc}};
  if (!kernel(homothety).pres.is_zero()) return false;
  if (!cokernel(homothety).pres.is_zero()) return false;
  for (int i = 1; i <= bound; ++i)
    if (!ext_vanishes(C, C, i)) return false;
  return true;
}

ArReport ar_test(const ModulePresentation& M, int bound) {
  const RingPtr& R = M.ring();
  if (!is_gorenstein(R)) fail("HypothesisViolated", "test applies to Gorenstein fixtures");
  ArReport rep;
  rep.bound = bound;
  rep.vanishes = true;
  ModulePresentation R1 = ModulePresentation::free_module(R, 1);
  for (int i = 1; i <= bound && rep.vanishes; ++i)
    rep.vanishes = ext_vanishes(M, M, i) && ext_vanishes(M, R1, i);
  rep.expected_free = is_free(M);
  return rep;
}

HighDepthPairResult high_depth_pair(const ModulePresentation& N) {
  const RingPtr& R = N.ring();
  int d = R->dim();
  if (d < 3) fail("HypothesisViolated", "needs dim R >= 3");
  if (is_free(N)) fail("HypothesisViolated", "N must be nonfree");
  if (module_rank(N) != 1) fail("HypothesisViolated", "N must have rank one");
  if (!is_mcm(N)) fail("HypothesisViolated", "N must be MCM");
  if (!is_locally_free_on_punctured(N))
    fail("HypothesisViolated", "N must be locally free on the punctured spectrum");
  ModulePresentation m0 = star_dual(N);
  PushforwardResult p1 = pushforward(m0);
  PushforwardResult p2 = pushforward(p1.m1);
  HighDepthPairResult out;
  out.m = p2.m1;
  out.depth_achieved = depth(tensor(out.m, N));
  out.meets_bound = out.depth_achieved >= d - 2;
  out.m_nonfree = !is_free(out.m);
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism witness search

namespace {

ModulePresentation shift_to_zero(const ModulePresentation& M) {
  if (M.ngens() == 0) return M;
  int dmin = *std::min_element(M.gen_degrees().begin(), M.gen_degrees().end());
  if (dmin == 0) return M;
  std::vector<int> deg = M.gen_degrees();
  for (int& d : deg) d -= dmin;
  return ModulePresentation::from_relations(M.ring(), M.ngens(), deg, M.relations(),
                                            M.known_minimal());
}

}  // namespace

bool iso_witnessed(const ModulePresentation& A, const ModulePresentation& B) {
  check_same_ring(A, B);
  ModulePresentation A0 = shift_to_zero(minimal_presentation(A).pres);
  ModulePresentation B0 = shift_to_zero(minimal_presentation(B).pres);
  if (A0.ngens() != B0.ngens()) return false;
  if (A0.ngens() == 0) return true;
  if (!(A0.hilbert() == B0.hilbert())) return false;
  HomModule hab = hom(A0, B0);
  HomModule hba = hom(B0, A0);
  // candidates: small integer combinations of the degree-zero generators
  auto degree_zero = [](const HomModule& H) {
    std::vector<int> idx;
    for (int t = 0; t < H.pres.ngens(); ++t)
      if (H.pres.gen_degrees()[t] == 0) idx.push_back(t);
    return idx;
  };
  std::vector<int> ia = degree_zero(hab);
  std::vector<int> ib = degree_zero(hba);
  if (ia.empty() || ib.empty()) return false;
  const std::vector<Scalar> coefs = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(0)};
  auto combos = [&](const HomModule& H, const std::vector<int>& idx,
                    const ModulePresentation& src, const ModulePresentation& tgt) {
    std::vector<ModuleMap> out;
    size_t total = 1;
    for (size_t t = 0; t < idx.size() && t < 3; ++t) total *= coefs.size();
    size_t width = std::min<size_t>(idx.size(), 3);
    for (size_t code = 0; code < total; ++code) {
      size_t c = code;
      std::vector<FreeElement> cols(src.ngens(),
                                    FreeElement(src.ring()->ambient(), tgt.ngens()));
      bool nontrivial = false;
      for (size_t t = 0; t < width; ++t) {
        Scalar coef = coefs[c % coefs.size()];
        c /= coefs.size();
        if (coef == 0) continue;
        nontrivial = true;
        const ModuleMap& g = H.generator_maps[idx[t]];
        for (int i = 0; i < src.ngens(); ++i)
          cols[i] = cols[i] + g.columns[i].scaled(coef);
      }
      if (!nontrivial) continue;
      out.push_back(ModuleMap{src, tgt, cols});
    }
    return out;
  };
  std::vector<ModuleMap> fs = combos(hab, ia, A0, B0);
  std::vector<ModuleMap> gs = combos(hba, ib, B0, A0);
  ModuleMap idA = ModuleMap::identity(A0);
  ModuleMap idB = ModuleMap::identity(B0);
  for (const ModuleMap& f : fs)
    for (const ModuleMap& g : gs) {
      if (!g.compose(f).equals(idA)) continue;
      if (!f.compose(g).equals(idB)) continue;
      return true;
    }
  return false;
}

}  // namespace depthlab
