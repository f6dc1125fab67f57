#include "depthlab/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "depthlab/resolution.hpp"

namespace depthlab {

struct ModulePresentation::Data {
  RingPtr ring;
  int ngens = 0;
  std::vector<int> gen_degrees;
  std::vector<FreeElement> relations;
  bool known_minimal = false;

  mutable std::shared_ptr<GroebnerBasis> relations_gb;
  mutable std::shared_ptr<HilbertSeries> hilbert;
  struct MinimalCore {
    ModulePresentation pres;
    std::vector<FreeElement> to_cols;
    std::vector<FreeElement> from_cols;
  };
  mutable std::shared_ptr<MinimalCore> minimal_core;
  mutable std::shared_ptr<FreeResolution> res_quotient;
  mutable std::shared_ptr<FreeResolution> res_ambient;
};

void check_same_ring(const ModulePresentation& A, const ModulePresentation& B) {
  if (!A.valid() || !B.valid()) fail("Internal", "empty module handle");
  if (A.ring() == B.ring() || A.ring()->same_as(*B.ring())) return;
  fail("RingMismatch", "modules live over different rings");
}

ModulePresentation ModulePresentation::zero(const RingPtr& R) {
  return from_relations(R, 0, {}, {}, true);
}

ModulePresentation ModulePresentation::free_module(const RingPtr& R, int rank,
                                                   std::vector<int> degrees) {
  if (rank < 0) fail("IndexRange", "negative rank");
  if (degrees.empty()) degrees.assign(rank, 0);
  if (static_cast<int>(degrees.size()) != rank) fail("IndexRange", "degree count");
  return from_relations(R, rank, std::move(degrees), {}, true);
}

ModulePresentation ModulePresentation::from_relations(const RingPtr& R, int ngens,
                                                      std::vector<int> gen_degrees,
                                                      std::vector<FreeElement> relations,
                                                      bool known_minimal) {
  if (gen_degrees.empty()) gen_degrees.assign(ngens, 0);
  if (static_cast<int>(gen_degrees.size()) != ngens) fail("IndexRange", "gen degree count");
  auto data = std::make_shared<Data>();
  data->ring = R;
  data->ngens = ngens;
  data->gen_degrees = std::move(gen_degrees);
  for (FreeElement& col : relations) {
    if (static_cast<int>(col.coords.size()) != ngens) fail("RankMismatch", "relation column rank");
    col = R->reduce(col);
    if (col.is_zero()) continue;
    if (!col.is_homogeneous(data->gen_degrees))
      fail("NonHomogeneous", "relation column " + col.to_string());
    data->relations.push_back(std::move(col));
  }
  // drop exact duplicates, keeping first occurrences
  std::vector<FreeElement> dedup;
  for (const FreeElement& col : data->relations) {
    bool seen = false;
    for (const FreeElement& prev : dedup)
      if (prev == col) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(col);
  }
  data->relations = std::move(dedup);
  data->known_minimal = known_minimal && [&] {
    for (const FreeElement& col : data->relations)
      for (const Polynomial& e : col.coords)
        if (!e.is_zero() && e.degree() == 0) return false;
    return true;
  }();
  ModulePresentation M;
  M.d_ = std::move(data);
  return M;
}

ModulePresentation ModulePresentation::ideal(const RingPtr& R,
                                             const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> nz;
  for (const Polynomial& g : gens) {
    Polynomial r = R->reduce(g);
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) fail("NonHomogeneous", "ideal generator " + g.to_string());
    nz.push_back(std::move(r));
  }
  int m = static_cast<int>(nz.size());
  std::vector<int> degrees;
  std::vector<FreeElement> as_elems;
  for (const Polynomial& g : nz) {
    degrees.push_back(g.degree());
    as_elems.push_back(FreeElement(R->ambient(), {g}));
  }
  std::vector<FreeElement> rels =
      syzygies(R->ambient(), 1, as_elems, R->quotient_basis(), {});
  return from_relations(R, m, std::move(degrees), std::move(rels));
}

ModulePresentation ModulePresentation::residue_field(const RingPtr& R) {
  std::vector<FreeElement> rels;
  for (int v = 0; v < R->nvars(); ++v) {
    Polynomial xv = R->reduce(Polynomial::variable(R->ambient(), v));
    if (!xv.is_zero()) rels.push_back(FreeElement(R->ambient(), {xv}));
  }
  return from_relations(R, 1, {0}, std::move(rels));
}

const RingPtr& ModulePresentation::ring() const { return d_->ring; }
int ModulePresentation::ngens() const { return d_->ngens; }
const std::vector<int>& ModulePresentation::gen_degrees() const { return d_->gen_degrees; }
const std::vector<FreeElement>& ModulePresentation::relations() const { return d_->relations; }
bool ModulePresentation::known_minimal() const { return d_->known_minimal; }

const GroebnerBasis& ModulePresentation::relations_gb() const {
  if (!d_->relations_gb)
    d_->relations_gb = std::make_shared<GroebnerBasis>(
        submodule_gb(d_->ring->ambient(), d_->ngens, d_->relations, d_->ring->quotient_basis(),
                     d_->gen_degrees));
  return *d_->relations_gb;
}

const HilbertSeries& ModulePresentation::hilbert() const {
  if (!d_->hilbert)
    d_->hilbert = std::make_shared<HilbertSeries>(hilbert_from_leads(
        d_->ring->nvars(), relations_gb().leads, d_->ngens, d_->gen_degrees));
  return *d_->hilbert;
}

std::shared_ptr<FreeResolution>& ModulePresentation::resolution_slot(bool ambient) const {
  return ambient ? d_->res_ambient : d_->res_quotient;
}

std::string ModulePresentation::describe() const {
  std::ostringstream os;
  os << "module with " << ngens() << " generators, " << relations().size() << " relations over "
     << ring()->describe();
  return os.str();
}

// ---------------------------------------------------------------------------
// maps

ModuleMap ModuleMap::identity(const ModulePresentation& M) {
  std::vector<FreeElement> cols;
  for (int i = 0; i < M.ngens(); ++i) {
    FreeElement e(M.ring()->ambient(), M.ngens());
    e.coords[i] = Polynomial::constant(M.ring()->ambient(), Scalar(1));
    cols.push_back(std::move(e));
  }
  return ModuleMap{M, M, std::move(cols)};
}

ModuleMap ModuleMap::zero_map(const ModulePresentation& src, const ModulePresentation& tgt) {
  std::vector<FreeElement> cols(src.ngens(), FreeElement(src.ring()->ambient(), tgt.ngens()));
  return ModuleMap{src, tgt, std::move(cols)};
}

ModuleMap ModuleMap::from_columns(const ModulePresentation& src, const ModulePresentation& tgt,
                                  std::vector<FreeElement> cols) {
  check_same_ring(src, tgt);
  if (static_cast<int>(cols.size()) != src.ngens()) fail("RankMismatch", "map column count");
  for (FreeElement& c : cols) {
    if (static_cast<int>(c.coords.size()) != tgt.ngens()) fail("RankMismatch", "map column rank");
    c = tgt.ring()->reduce(c);
  }
  return ModuleMap{src, tgt, std::move(cols)};
}

FreeElement ModuleMap::apply(const FreeElement& x) const {
  FreeElement out(target.ring()->ambient(), target.ngens());
  for (int i = 0; i < source.ngens(); ++i) {
    if (x.coords[i].is_zero()) continue;
    out = out + columns[i].times(x.coords[i]);
  }
  return target.ring()->reduce(out);
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
  if (!inner.target.same_presentation(source) && inner.target.ngens() != source.ngens())
    fail("RankMismatch", "map composition");
  std::vector<FreeElement> cols;
  cols.reserve(inner.source.ngens());
  for (const FreeElement& c : inner.columns) cols.push_back(apply(c));
  return ModuleMap{inner.source, target, std::move(cols)};
}

bool ModuleMap::is_well_defined() const {
  for (const FreeElement& rel : source.relations()) {
    FreeElement img = apply(rel);
    if (!in_submodule(img, target.relations_gb())) return false;
  }
  return true;
}

bool ModuleMap::is_zero_map() const {
  for (const FreeElement& c : columns)
    if (!in_submodule(c, target.relations_gb())) return false;
  return true;
}

bool ModuleMap::equals(const ModuleMap& o) const {
  if (columns.size() != o.columns.size()) return false;
  for (size_t i = 0; i < columns.size(); ++i)
    if (!in_submodule(columns[i] - o.columns[i], target.relations_gb())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// minimal presentation

MinimalPresentation minimal_presentation(const ModulePresentation& M) {
  if (M.known_minimal()) {
    return MinimalPresentation{M, ModuleMap::identity(M), ModuleMap::identity(M)};
  }
  auto& core_slot = M.d_->minimal_core;
  if (!core_slot) {
    const RingPtr& R = M.ring();
    const PolyRingPtr& A = R->ambient();
    int p = M.ngens();
    std::vector<int> gdeg = M.gen_degrees();
    std::vector<FreeElement> cols = M.relations();

    // to_cols[t]: original generator t in current generators;
    // from_cols[l]: current generator l in original generators
    std::vector<FreeElement> to_cols, from_cols;
    for (int i = 0; i < p; ++i) {
      FreeElement e(A, p);
      e.coords[i] = Polynomial::constant(A, Scalar(1));
      to_cols.push_back(e);
      from_cols.push_back(e);
    }

    for (;;) {
      int pivot_col = -1, pivot_row = -1;
      for (size_t j = 0; j < cols.size() && pivot_col < 0; ++j)
        for (int i = 0; i < static_cast<int>(cols[j].coords.size()); ++i) {
          const Polynomial& e = cols[j].coords[i];
          if (!e.is_zero() && e.degree() == 0) {
            pivot_col = static_cast<int>(j);
            pivot_row = i;
            break;
          }
        }
      if (pivot_col < 0) break;

      int cur = static_cast<int>(from_cols.size());
      FreeElement col = cols[pivot_col];
      Scalar u = col.coords[pivot_row].lead().coef;
      const FieldSpec& F = A->field();
      Scalar uinv = F.inv(u);

      // clear row pivot_row in the other columns
      for (size_t k = 0; k < cols.size(); ++k) {
        if (static_cast<int>(k) == pivot_col) continue;
        const Polynomial& e = cols[k].coords[pivot_row];
        if (e.is_zero()) continue;
        cols[k] = R->reduce(cols[k] - col.times(e.scaled(uinv)));
      }
      // substitute the eliminated generator in to_cols
      for (FreeElement& t : to_cols) {
        Polynomial c = t.coords[pivot_row];
        if (!c.is_zero()) {
          for (int l = 0; l < cur; ++l) {
            if (l == pivot_row) continue;
            t.coords[l] = t.coords[l] - c * col.coords[l].scaled(uinv);
          }
          t.coords[pivot_row] = Polynomial(A);
        }
      }
      // drop the generator and the pivot relation
      auto drop_coord = [&](FreeElement& v) {
        v.coords.erase(v.coords.begin() + pivot_row);
        v.rank -= 1;
      };
      cols.erase(cols.begin() + pivot_col);
      for (FreeElement& c : cols) drop_coord(c);
      for (FreeElement& t : to_cols) drop_coord(t);
      from_cols.erase(from_cols.begin() + pivot_row);
      gdeg.erase(gdeg.begin() + pivot_row);
      for (FreeElement& t : to_cols) t = R->reduce(t);
    }

    ModulePresentation pres = ModulePresentation::from_relations(
        R, static_cast<int>(gdeg.size()), gdeg, cols, true);
    auto core = std::make_shared<ModulePresentation::Data::MinimalCore>();
    core->pres = pres;
    core->to_cols = std::move(to_cols);
    core->from_cols = std::move(from_cols);
    core_slot = std::move(core);
  }
  const auto& core = *core_slot;
  MinimalPresentation out;
  out.pres = core.pres;
  out.to = ModuleMap{M, core.pres, core.to_cols};
  out.from = ModuleMap{core.pres, M, core.from_cols};
  return out;
}

int mu(const ModulePresentation& M) { return minimal_presentation(M).pres.ngens(); }

// ---------------------------------------------------------------------------
// tensor / subquotient / kernels

ModulePresentation tensor(const ModulePresentation& A, const ModulePresentation& B) {
  check_same_ring(A, B);
  const RingPtr& R = A.ring();
  int p = A.ngens(), q = B.ngens();
  auto idx = [q](int i, int l) { return i * q + l; };
  std::vector<int> degrees(p * q, 0);
  for (int i = 0; i < p; ++i)
    for (int l = 0; l < q; ++l) degrees[idx(i, l)] = A.gen_degrees()[i] + B.gen_degrees()[l];
  std::vector<FreeElement> rels;
  for (const FreeElement& c : A.relations())
    for (int l = 0; l < q; ++l) {
      FreeElement col(R->ambient(), p * q);
      for (int i = 0; i < p; ++i) col.coords[idx(i, l)] = c.coords[i];
      rels.push_back(std::move(col));
    }
  for (const FreeElement& d : B.relations())
    for (int i = 0; i < p; ++i) {
      FreeElement col(R->ambient(), p * q);
      for (int l = 0; l < q; ++l) col.coords[idx(i, l)] = d.coords[l];
      rels.push_back(std::move(col));
    }
  ModulePresentation raw =
      ModulePresentation::from_relations(R, p * q, std::move(degrees), std::move(rels));
  return minimal_presentation(raw).pres;
}

ModulePresentation subquotient(const RingPtr& R, int free_rank,
                               const std::vector<int>& free_degrees,
                               const std::vector<FreeElement>& gens,
                               const std::vector<FreeElement>& rels) {
  std::vector<FreeElement> combined = gens;
  combined.insert(combined.end(), rels.begin(), rels.end());
  std::vector<FreeElement> syz =
      syzygies(R->ambient(), free_rank, combined, R->quotient_basis(), free_degrees);
  int m = static_cast<int>(gens.size());
  std::vector<int> degrees;
  degrees.reserve(m);
  for (const FreeElement& g : gens) degrees.push_back(g.is_zero() ? 0 : g.degree(free_degrees));
  std::vector<FreeElement> cols;
  for (const FreeElement& s : syz) {
    FreeElement col(R->ambient(), m);
    for (int i = 0; i < m; ++i) col.coords[i] = s.coords[i];
    if (!col.is_zero()) cols.push_back(std::move(col));
  }
  return ModulePresentation::from_relations(R, m, std::move(degrees), std::move(cols));
}

namespace {

// kernel generators in the free cover of f.source (no minimization)
std::vector<FreeElement> kernel_raw(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  int p = f.source.ngens();
  int q = f.target.ngens();
  if (q == 0) {
    // everything maps to zero
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

}  // namespace

KernelModule kernel(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  std::vector<FreeElement> gens = kernel_raw(f);
  ModulePresentation raw =
      subquotient(R, f.source.ngens(), f.source.gen_degrees(), gens, f.source.relations());
  ModuleMap inc_raw{raw, f.source, gens};
  MinimalPresentation m = minimal_presentation(raw);
  return KernelModule{m.pres, inc_raw.compose(m.from)};
}

ImageModule image(const ModuleMap& f) {
  const RingPtr& R = f.source.ring();
  ModulePresentation raw =
      subquotient(R, f.target.ngens(), f.target.gen_degrees(), f.columns, f.target.relations());
  ModuleMap inc_raw{raw, f.target, f.columns};
  MinimalPresentation m = minimal_presentation(raw);
  return ImageModule{m.pres, inc_raw.compose(m.from)};
}

CokernelModule cokernel(const ModuleMap& f) {
  const RingPtr& R = f.target.ring();
  std::vector<FreeElement> rels = f.target.relations();
  for (const FreeElement& c : f.columns) rels.push_back(c);
  ModulePresentation raw = ModulePresentation::from_relations(
      R, f.target.ngens(), f.target.gen_degrees(), std::move(rels));
  MinimalPresentation m = minimal_presentation(raw);
  // projection: target generators map to themselves
  ModuleMap proj_raw = ModuleMap{f.target, raw, ModuleMap::identity(raw).columns};
  return CokernelModule{m.pres, m.to.compose(proj_raw)};
}

// ---------------------------------------------------------------------------
// hom

HomModule hom(const ModulePresentation& M, const ModulePresentation& N) {
  check_same_ring(M, N);
  const RingPtr& R = M.ring();
  const PolyRingPtr& A = R->ambient();
  int p = M.ngens(), q = N.ngens();
  auto idx = [q](int i, int l) { return i * q + l; };

  HomModule out;
  if (p == 0 || q == 0) {
    out.pres = ModulePresentation::zero(R);
    out.hom_f0 = ModulePresentation::zero(R);
    return out;
  }

  // Hom(F0, N) = sum of N(+gdeg_i)
  std::vector<int> f0deg(p * q);
  for (int i = 0; i < p; ++i)
    for (int l = 0; l < q; ++l) f0deg[idx(i, l)] = N.gen_degrees()[l] - M.gen_degrees()[i];
  std::vector<FreeElement> f0rels;
  for (int i = 0; i < p; ++i)
    for (const FreeElement& d : N.relations()) {
      FreeElement col(A, p * q);
      for (int l = 0; l < q; ++l) col.coords[idx(i, l)] = d.coords[l];
      f0rels.push_back(std::move(col));
    }
  ModulePresentation homF0 = ModulePresentation::from_relations(R, p * q, f0deg, f0rels);
  out.hom_f0 = homF0;

  const std::vector<FreeElement>& d1 = M.relations();
  int r1 = static_cast<int>(d1.size());

  std::vector<FreeElement> ker_gens;
  if (r1 == 0) {
    for (int g = 0; g < p * q; ++g) {
      FreeElement e(A, p * q);
      e.coords[g] = Polynomial::constant(A, Scalar(1));
      ker_gens.push_back(std::move(e));
    }
  } else {
    // Hom(F1, N) with F1 the relation source
    std::vector<int> f1colderg(r1);
    for (int c = 0; c < r1; ++c) f1colderg[c] = d1[c].degree(M.gen_degrees());
    std::vector<int> f1deg(r1 * q);
    for (int c = 0; c < r1; ++c)
      for (int l = 0; l < q; ++l) f1deg[c * q + l] = N.gen_degrees()[l] - f1colderg[c];
    std::vector<FreeElement> f1rels;
    for (int c = 0; c < r1; ++c)
      for (const FreeElement& d : N.relations()) {
        FreeElement col(A, r1 * q);
        for (int l = 0; l < q; ++l) col.coords[c * q + l] = d.coords[l];
        f1rels.push_back(std::move(col));
      }
    ModulePresentation homF1 = ModulePresentation::from_relations(R, r1 * q, f1deg, f1rels);

    // composition with d1: basis (i,l) -> sum_c d1[i][c] (c,l)
    std::vector<FreeElement> phi_cols;
    phi_cols.reserve(p * q);
    for (int i = 0; i < p; ++i)
      for (int l = 0; l < q; ++l) {
        FreeElement col(A, r1 * q);
        for (int c = 0; c < r1; ++c) col.coords[c * q + l] = d1[c].coords[i];
        phi_cols.push_back(std::move(col));
      }
    ModuleMap phi = ModuleMap::from_columns(homF0, homF1, std::move(phi_cols));
    ker_gens = kernel_raw(phi);
  }

  ModulePresentation raw = subquotient(R, p * q, f0deg, ker_gens, homF0.relations());
  MinimalPresentation mres = minimal_presentation(raw);
  out.pres = mres.pres;

  // representatives of the minimal generators inside Hom(F0, N)
  for (int t = 0; t < mres.pres.ngens(); ++t) {
    const FreeElement& expr = mres.from.columns[t];  // in raw generators
    FreeElement rep(A, p * q);
    for (int g = 0; g < static_cast<int>(ker_gens.size()); ++g) {
      if (expr.coords[g].is_zero()) continue;
      rep = rep + ker_gens[g].times(expr.coords[g]);
    }
    rep = R->reduce(rep);
    out.gen_reps.push_back(rep);
    std::vector<FreeElement> cols(p, FreeElement(A, q));
    for (int i = 0; i < p; ++i)
      for (int l = 0; l < q; ++l) cols[i].coords[l] = rep.coords[idx(i, l)];
    out.generator_maps.push_back(ModuleMap{M, N, std::move(cols)});
  }
  return out;
}

std::optional<FreeElement> hom_coordinates(const HomModule& H, const ModuleMap& f) {
  if (!H.pres.valid()) return std::nullopt;
  const ModulePresentation& M = f.source;
  const ModulePresentation& N = f.target;
  const RingPtr& R = M.ring();
  const PolyRingPtr& A = R->ambient();
  int p = M.ngens(), q = N.ngens();
  int ng = H.pres.ngens();
  if (p * q == 0 || ng == 0) {
    if (f.is_zero_map()) return FreeElement(A, ng);
    return std::nullopt;
  }
  FreeElement rep(A, p * q);
  for (int i = 0; i < p; ++i)
    for (int l = 0; l < q; ++l) rep.coords[i * q + l] = f.columns[i].coords[l];
  std::vector<FreeElement> gens = H.gen_reps;
  for (const FreeElement& rel : H.hom_f0.relations()) gens.push_back(rel);
  auto w = lift(A, p * q, rep, gens, R->quotient_basis());
  if (!w) return std::nullopt;
  FreeElement coords(A, ng);
  for (int t = 0; t < ng; ++t) coords.coords[t] = (*w)[t];
  return R->reduce(coords);
}

// ---------------------------------------------------------------------------
// numerical invariants

std::vector<Polynomial> annihilator(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  const PolyRingPtr& A = R->ambient();
  if (M.ngens() == 0) return {Polynomial::constant(A, Scalar(1))};
  std::vector<Polynomial> acc;
  bool first = true;
  for (int i = 0; i < M.ngens(); ++i) {
    std::vector<FreeElement> gens;
    FreeElement e(A, M.ngens());
    e.coords[i] = Polynomial::constant(A, Scalar(1));
    gens.push_back(std::move(e));
    for (const FreeElement& rel : M.relations()) gens.push_back(rel);
    std::vector<Polynomial> colon;
    for (const FreeElement& s : syzygies(A, M.ngens(), gens, R->quotient_basis(),
                                         M.gen_degrees()))
      if (!s.coords[0].is_zero()) colon.push_back(s.coords[0]);
    if (first) {
      acc = std::move(colon);
      first = false;
    } else {
      acc = ideal_intersect(A, acc, colon, R->quotient_basis());
    }
    if (acc.empty()) return {};  // annihilator is zero
  }
  for (Polynomial& f : acc) f = R->reduce(f).monic();
  std::sort(acc.begin(), acc.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return A->order().greater(a.lead().mono, b.lead().mono);
  });
  acc.erase(std::unique(acc.begin(), acc.end(),
                        [](const Polynomial& a, const Polynomial& b) { return a == b; }),
            acc.end());
  return acc;
}

std::vector<mpz_class> hilbert_function(const ModulePresentation& M, int d_lo, int d_hi) {
  std::vector<mpz_class> out;
  for (int d = d_lo; d <= d_hi; ++d) out.push_back(M.hilbert().hf(d));
  return out;
}

int module_dim(const ModulePresentation& M) { return M.hilbert().dim(); }

mpz_class module_length(const ModulePresentation& M) { return M.hilbert().length(); }

mpz_class module_multiplicity(const ModulePresentation& M) { return M.hilbert().multiplicity(); }

int module_rank(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  R->require_domain("rank");
  if (M.is_zero()) return 0;
  if (module_dim(M) < R->dim()) return 0;
  mpz_class em = module_multiplicity(M);
  mpz_class er = R->multiplicity();
  mpz_class q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), em.get_mpz_t(), er.get_mpz_t());
  if (rem != 0) fail("NonConstantRank", "multiplicity ratio is not an integer");
  return static_cast<int>(q.get_si());
}

namespace {

Polynomial minor_det(const PolyRingPtr& A, const std::vector<FreeElement>& cols,
                     const std::vector<int>& rows, const std::vector<int>& col_idx) {
  if (rows.size() == 1) return cols[col_idx[0]].coords[rows[0]];
  Polynomial det(A);
  std::vector<int> rows2(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < col_idx.size(); ++j) {
    const Polynomial& e = cols[col_idx[j]].coords[rows[0]];
    if (e.is_zero()) continue;
    std::vector<int> cols2;
    for (size_t l = 0; l < col_idx.size(); ++l)
      if (l != j) cols2.push_back(col_idx[l]);
    Polynomial piece = e * minor_det(A, cols, rows2, cols2);
    det = (j % 2 == 0) ? det + piece : det - piece;
  }
  return det;
}

// enumerate size-k subsets in lexicographic order, invoking fn until it
// returns true
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return true;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int l = pos + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

int dim_of_ideal(const RingPtr& R, const std::vector<Polynomial>& gens) {
  const PolyRingPtr& A = R->ambient();
  std::vector<FreeElement> fe;
  for (const Polynomial& q : R->quotient_basis()) fe.push_back(FreeElement(A, {q}));
  for (const Polynomial& g : gens)
    if (!g.is_zero()) fe.push_back(FreeElement(A, {g}));
  GroebnerBasis G = groebner_basis(A, 1, std::move(fe), ModuleOrder{A->order(), 0});
  for (const auto& e : G.elements)
    if (e.coords[0].is_constant()) return kDimZeroModule;  // unit ideal: empty locus
  return hilbert_from_leads(A->nvars(), G.leads, 1, {}).dim();
}

std::vector<Polynomial> fitting_ideal(const ModulePresentation& M, int r) {
  if (r < 0) fail("IndexRange", "negative Fitting index");
  const RingPtr& R = M.ring();
  const PolyRingPtr& A = R->ambient();
  ModulePresentation P = minimal_presentation(M).pres;
  int p = P.ngens();
  int s = p - r;
  if (s <= 0) return {Polynomial::constant(A, Scalar(1))};
  const std::vector<FreeElement>& cols = P.relations();
  int ncols = static_cast<int>(cols.size());
  if (s > p || s > ncols) return {};
  std::vector<Polynomial> out;
  for_each_subset(p, s, [&](const std::vector<int>& rows) {
    for_each_subset(ncols, s, [&](const std::vector<int>& cidx) {
      Polynomial d = R->reduce(minor_det(A, cols, rows, cidx));
      if (!d.is_zero()) {
        d = d.monic();
        bool seen = false;
        for (const Polynomial& g : out)
          if (g == d) {
            seen = true;
            break;
          }
        if (!seen) out.push_back(std::move(d));
      }
      return false;
    });
    return false;
  });
  return out;
}

// ---------------------------------------------------------------------------
// duals and torsion

ModuleMap double_dual_map(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  ModulePresentation Rfree = ModulePresentation::free_module(R, 1);
  HomModule star = hom(M, Rfree);
  HomModule dstar = hom(star.pres, Rfree);
  std::vector<FreeElement> cols;
  for (int i = 0; i < M.ngens(); ++i) {
    // evaluation at generator i as a map star.pres -> R
    std::vector<FreeElement> ev_cols;
    for (int t = 0; t < star.pres.ngens(); ++t)
      ev_cols.push_back(star.generator_maps[t].columns[i]);
    ModuleMap ev{star.pres, Rfree, std::move(ev_cols)};
    auto coords = hom_coordinates(dstar, ev);
    if (!coords) fail("Internal", "evaluation map not found in double dual");
    cols.push_back(std::move(*coords));
  }
  return ModuleMap{M, dstar.pres, std::move(cols)};
}

TorsionModule torsion(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  R->require_domain("torsion");
  const PolyRingPtr& A = R->ambient();
  // deterministic nonzerodivisor: last ambient variable that stays a
  // nonzerodivisor on R, scanning backwards then forwards
  Polynomial nzd(A);
  std::vector<int> candidates = {A->nvars() - 1};
  for (int v = 0; v + 1 < A->nvars(); ++v) candidates.push_back(v);
  for (int v : candidates) {
    Polynomial xv = R->reduce(Polynomial::variable(A, v));
    if (xv.is_zero()) continue;
    if (syzygies(A, 1, {FreeElement(A, {xv})}, R->quotient_basis()).empty()) {
      nzd = xv;
      break;
    }
  }
  if (nzd.is_zero()) fail("NotDomain", "no variable is a nonzerodivisor");
  std::vector<FreeElement> sat =
      saturate(A, M.ngens(), M.relations(), nzd, R->quotient_basis());
  ModulePresentation raw = subquotient(R, M.ngens(), M.gen_degrees(), sat, M.relations());
  ModuleMap inc_raw{raw, M, sat};
  MinimalPresentation m = minimal_presentation(raw);
  return TorsionModule{m.pres, inc_raw.compose(m.from)};
}

bool is_torsionfree(const ModulePresentation& M) { return torsion(M).pres.is_zero(); }

bool is_reflexive(const ModulePresentation& M) {
  ModuleMap dd = double_dual_map(M);
  if (!kernel(dd).pres.is_zero()) return false;
  return cokernel(dd).pres.is_zero();
}

bool is_free(const ModulePresentation& M) {
  return minimal_presentation(M).pres.relations().empty();
}

bool is_locally_free_on_punctured(const ModulePresentation& M) {
  const RingPtr& R = M.ring();
  R->require_domain("locally-free test");
  TorsionModule T = torsion(M);
  if (!T.pres.is_zero()) {
    if (module_dim(T.pres) > 0)
      fail("HypothesisViolated", "torsion submodule has positive dimension");
    ModulePresentation Mfree = cokernel(T.inclusion).pres;
    return is_locally_free_on_punctured(Mfree);
  }
  int rk = module_rank(M);
  ModulePresentation P = minimal_presentation(M).pres;
  int p = P.ngens();
  int s = p - rk;
  if (s <= 0) return true;
  const std::vector<FreeElement>& cols = P.relations();
  int ncols = static_cast<int>(cols.size());
  if (s > ncols) return R->dim() <= 0;  // Fitting ideal is zero
  const PolyRingPtr& A = R->ambient();
  std::vector<Polynomial> acc;
  int since_check = 0;
  bool verdict = false;
  bool done = false;
  for_each_subset(p, s, [&](const std::vector<int>& rows) {
    for_each_subset(ncols, s, [&](const std::vector<int>& cidx) {
      Polynomial d = R->reduce(minor_det(A, cols, rows, cidx));
      if (!d.is_zero()) {
        acc.push_back(std::move(d));
        if (++since_check >= 6) {
          since_check = 0;
          if (dim_of_ideal(R, acc) <= 0) {
            verdict = true;
            done = true;
          }
        }
      }
      return done;
    });
    return done;
  });
  if (done) return verdict;
  return dim_of_ideal(R, acc) <= 0;
}

std::vector<FreeElement> minimal_generators(const RingPtr& R, int rank,
                                            const std::vector<int>& comp_degrees,
                                            std::vector<FreeElement> gens) {
  const PolyRingPtr& A = R->ambient();
  std::vector<FreeElement> nz;
  for (FreeElement& g : gens) {
    FreeElement r = R->reduce(g);
    if (!r.is_zero()) nz.push_back(std::move(r));
  }
  std::stable_sort(nz.begin(), nz.end(), [&](const FreeElement& a, const FreeElement& b) {
    return a.degree(comp_degrees) < b.degree(comp_degrees);
  });
  std::vector<FreeElement> kept;
  std::optional<GroebnerBasis> gb;
  for (FreeElement& v : nz) {
    bool member;
    if (kept.empty()) {
      // coordinates are already reduced mod the quotient ideal
      member = false;
    } else {
      if (!gb) gb = submodule_gb(A, rank, kept, R->quotient_basis(), comp_degrees);
      member = in_submodule(v, *gb);
    }
    if (!member) {
      kept.push_back(std::move(v));
      gb.reset();
    }
  }
  return kept;
}

}  // namespace depthlab
