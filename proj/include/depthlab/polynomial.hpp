#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "depthlab/field.hpp"
#include "depthlab/monomial.hpp"

namespace depthlab {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Ambient polynomial ring data: coefficient field, named variables and a
// monomial order. Quotients live one level up (see ring.hpp); polynomials
// always carry a handle to their ambient ring.
class PolyRing : public std::enable_shared_from_this<PolyRing> {
 public:
  static PolyRingPtr make(FieldSpec field, std::vector<std::string> var_names,
                          MonoOrder order = MonoOrder{}, int var_degree = 1);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const MonoOrder& order() const { return order_; }
  int nvars() const { return static_cast<int>(var_names_.size()); }
  // Display degree of each variable. Internally all grading is by exponent
  // sum; rings whose variables conceptually sit in a higher degree record it
  // here for reporting only.
  int var_degree() const { return var_degree_; }

  int var_index(const std::string& name) const;  // -1 when absent

  bool same_as(const PolyRing& o) const {
    return field_ == o.field_ && var_names_ == o.var_names_ && order_ == o.order_;
  }

 private:
  PolyRing(FieldSpec field, std::vector<std::string> var_names, MonoOrder order, int var_degree)
      : field_(field), var_names_(std::move(var_names)), order_(order), var_degree_(var_degree) {}

  FieldSpec field_;
  std::vector<std::string> var_names_;
  MonoOrder order_;
  int var_degree_;
};

struct Term {
  Monomial mono;
  Scalar coef;
};

// Sparse polynomial with terms kept strictly descending in the ring order
// and no zero coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(PolyRingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  static Polynomial zero(const PolyRingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const PolyRingPtr& ring, const Scalar& c);
  static Polynomial variable(const PolyRingPtr& ring, int index, int power = 1);
  static Polynomial monomial(const PolyRingPtr& ring, Monomial m, const Scalar& c);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  // Monic form (lead coefficient 1); identity on zero.
  Polynomial monic() const;
  Polynomial derivative(int var) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Image under variable -> images[variable]; result lives in the target
  // ring of the supplied images.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  // Transplant into another ring with identical variable count and field
  // (used to move between orders or renamed variable sets).
  Polynomial transplant(const PolyRingPtr& target) const;

  std::string to_string() const;

  // Text form: signed terms `coef*mono`, `^` powers, `*` optional between
  // juxtaposed symbols (so both `x*y - z^2` and `2x^2y` parse). Variable
  // tokens are matched longest-first against the ring's names.
  static Polynomial parse(const PolyRingPtr& ring, const std::string& text);

 private:
  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace depthlab
