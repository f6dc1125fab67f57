#include "depthlab/ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace depthlab {

RingPtr Ring::create(PolyRingPtr ambient, std::vector<Polynomial> quotient_gens, RingFlags flags) {
  for (const Polynomial& f : quotient_gens) {
    if (f.ring() != ambient && !(f.ring() && f.ring()->same_as(*ambient)))
      fail("RingMismatch", "quotient generator from another ring");
    if (!f.is_homogeneous())
      fail("NonHomogeneous", "quotient generator " + f.to_string() + " is not homogeneous");
    if (!f.is_zero() && f.degree() == 0)
      fail("UnitIdeal", "quotient generator is a nonzero constant");
  }

  auto R = std::shared_ptr<Ring>(new Ring());
  R->ambient_ = ambient;
  R->quotient_gens_ = quotient_gens;

  std::vector<FreeElement> gens;
  for (const Polynomial& f : quotient_gens)
    if (!f.is_zero()) gens.push_back(FreeElement(ambient, {f}));
  GroebnerBasis G = groebner_basis(ambient, 1, std::move(gens), ModuleOrder{ambient->order(), 0});
  for (const FreeElement& e : G.elements) {
    if (e.coords[0].is_constant()) fail("UnitIdeal", "quotient ideal contains a unit");
    R->quotient_basis_.push_back(e.coords[0]);
  }
  R->quotient_gb_ = std::move(G);
  R->flags_ = flags;

  if (R->quotient_basis_.empty()) {
    // polynomial ring: regular, hence everything below holds
    R->flags_.domain = true;
    R->flags_.cohen_macaulay = true;
    R->flags_.complete_intersection = true;
    R->flags_.isolated_singularity = true;
  }
  return R;
}

bool Ring::same_as(const Ring& o) const {
  if (this == &o) return true;
  if (!ambient_->same_as(*o.ambient_)) return false;
  if (quotient_basis_.size() != o.quotient_basis_.size()) return false;
  for (size_t i = 0; i < quotient_basis_.size(); ++i)
    if (quotient_basis_[i] != o.quotient_basis_[i]) return false;
  return true;
}

Polynomial Ring::reduce(const Polynomial& f) const {
  if (quotient_basis_.empty()) return f;
  return normal_form(f, quotient_gb_);
}

FreeElement Ring::reduce(const FreeElement& v) const {
  if (quotient_basis_.empty()) return v;
  FreeElement r(v.ring, v.rank);
  for (int i = 0; i < v.rank; ++i) r.coords[i] = reduce(v.coords[i]);
  return r;
}

const HilbertSeries& Ring::hilbert() const {
  if (!hilbert_) hilbert_ = hilbert_from_leads(nvars(), quotient_gb_.leads, 1, {});
  return *hilbert_;
}

int Ring::edim() const {
  int linear = 0;
  for (const Polynomial& f : quotient_basis_)
    if (f.degree() == 1) ++linear;
  return nvars() - linear;
}

bool Ring::is_domain() const { return flags_.domain.value_or(false); }

void Ring::require_domain(const std::string& who) const {
  if (!is_domain()) fail("NotDomain", who + " requires a ring flagged as a domain");
}

bool Ring::is_complete_intersection() const {
  if (flags_.complete_intersection) return *flags_.complete_intersection;
  if (!ci_) {
    // minimal generator count of the quotient ideal vs codimension
    std::vector<Polynomial> mingens;
    std::vector<Polynomial> sorted = quotient_basis_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    for (const Polynomial& f : sorted) {
      std::vector<FreeElement> kept;
      for (const Polynomial& g : mingens) kept.push_back(FreeElement(ambient_, {g}));
      GroebnerBasis G = groebner_basis(ambient_, 1, std::move(kept), ModuleOrder{ambient_->order(), 0});
      // membership in (kept) + m*(ideal) is graded-safe as plain membership
      // here because generators are processed by ascending degree
      if (!in_submodule(FreeElement(ambient_, {f}), G)) mingens.push_back(f);
    }
    ci_ = static_cast<int>(mingens.size()) == codim();
  }
  return *ci_;
}

bool Ring::is_cohen_macaulay() const {
  if (flags_.cohen_macaulay) return *flags_.cohen_macaulay;
  if (is_complete_intersection()) return true;
  return false;
}

bool Ring::has_isolated_singularity() const {
  if (flags_.isolated_singularity) return *flags_.isolated_singularity;
  if (!isolated_) isolated_ = jacobian_isolated_singularity(*this);
  return *isolated_;
}

RingPtr Ring::ambient_ring() const {
  if (is_polynomial_ring()) return shared_from_this();
  if (!ambient_ring_) ambient_ring_ = Ring::create(ambient_, {});
  return ambient_ring_;
}

std::string Ring::describe() const {
  std::ostringstream os;
  os << ambient_->field().to_string() << "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) os << ",";
    os << ambient_->var_names()[i];
  }
  os << "]";
  if (!quotient_basis_.empty()) {
    os << "/(";
    for (size_t i = 0; i < quotient_gens_.size(); ++i) {
      if (i) os << ", ";
      os << quotient_gens_[i].to_string();
    }
    os << ")";
  }
  return os.str();
}

bool jacobian_isolated_singularity(const Ring& R) {
  if (!R.ambient()->field().is_rationals())
    fail("UnsupportedField", "Jacobian singularity test needs characteristic zero");
  if (R.is_polynomial_ring()) return true;
  const PolyRingPtr& A = R.ambient();
  int n = A->nvars();
  int c = R.codim();
  const std::vector<Polynomial>& gens = R.quotient_basis();
  int m = static_cast<int>(gens.size());
  if (c <= 0 || c > std::min(m, n)) fail("Internal", "unexpected codimension in Jacobian test");

  std::vector<std::vector<Polynomial>> jac(m, std::vector<Polynomial>());
  for (int i = 0; i < m; ++i)
    for (int v = 0; v < n; ++v) jac[i].push_back(gens[i].derivative(v));

  // accumulate c x c minors; stop as soon as dimension drops to <= 0
  std::vector<Polynomial> acc = gens;
  auto current_dim = [&]() {
    std::vector<FreeElement> fe;
    for (const Polynomial& f : acc) fe.push_back(FreeElement(A, {f}));
    GroebnerBasis G = groebner_basis(A, 1, std::move(fe), ModuleOrder{A->order(), 0});
    return hilbert_from_leads(n, G.leads, 1, {}).dim();
  };

  std::vector<int> rows(c), cols(c);
  std::function<bool(int, int)> rec_rows;
  std::function<bool(int, int)> rec_cols;
  int since_check = 0;
  bool done = false;

  std::function<Polynomial(const std::vector<int>&, const std::vector<int>&)> minor_det =
      [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        // Laplace expansion along the first row
        if (rs.size() == 1) return jac[rs[0]][cs[0]];
        Polynomial det(A);
        for (size_t j = 0; j < cs.size(); ++j) {
          if (jac[rs[0]][cs[j]].is_zero()) continue;
          std::vector<int> rs2(rs.begin() + 1, rs.end());
          std::vector<int> cs2;
          for (size_t l = 0; l < cs.size(); ++l)
            if (l != j) cs2.push_back(cs[l]);
          Polynomial sub = minor_det(rs2, cs2);
          Polynomial piece = jac[rs[0]][cs[j]] * sub;
          det = (j % 2 == 0) ? det + piece : det - piece;
        }
        return det;
      };

  rec_cols = [&](int start, int k) -> bool {
    if (done) return true;
    if (k == c) {
      Polynomial d = minor_det(rows, cols);
      if (!d.is_zero()) {
        acc.push_back(d);
        if (++since_check >= 6) {
          since_check = 0;
          if (current_dim() <= 0) {
            done = true;
            return true;
          }
        }
      }
      return false;
    }
    for (int j = start; j < n; ++j) {
      cols[k] = j;
      if (rec_cols(j + 1, k + 1)) return true;
    }
    return false;
  };
  rec_rows = [&](int start, int k) -> bool {
    if (done) return true;
    if (k == c) return rec_cols(0, 0);
    for (int i = start; i < m; ++i) {
      rows[k] = i;
      if (rec_rows(i + 1, k + 1)) return true;
    }
    return false;
  };
  rec_rows(0, 0);
  if (done) return true;
  return current_dim() <= 0;
}

}  // namespace depthlab
