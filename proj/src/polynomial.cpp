#include "depthlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace depthlab {

PolyRingPtr PolyRing::make(FieldSpec field, std::vector<std::string> var_names, MonoOrder order,
                           int var_degree) {
  for (size_t i = 0; i < var_names.size(); ++i)
    for (size_t j = i + 1; j < var_names.size(); ++j)
      if (var_names[i] == var_names[j]) fail("DuplicateVariable", "variable " + var_names[i]);
  if (var_degree < 1) fail("InvalidDegree", "variable degree must be positive");
  return PolyRingPtr(new PolyRing(field, std::move(var_names), order, var_degree));
}

int PolyRing::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (var_names_[i] == name) return i;
  return -1;
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  if (a.ring() && b.ring() && a.ring()->same_as(*b.ring())) return;
  fail("RingMismatch", "operands live in different rings");
}

Polynomial Polynomial::constant(const PolyRingPtr& ring, const Scalar& c) {
  Scalar n = ring->field().normalize(c);
  if (n == 0) return Polynomial(ring);
  return Polynomial(ring, {Term{Monomial::one(ring->nvars()), n}});
}

Polynomial Polynomial::variable(const PolyRingPtr& ring, int index, int power) {
  if (index < 0 || index >= ring->nvars()) fail("IndexRange", "variable index out of range");
  Monomial m = Monomial::one(ring->nvars());
  m.exps[index] = power;
  return Polynomial(ring, {Term{m, Scalar(1)}});
}

Polynomial Polynomial::monomial(const PolyRingPtr& ring, Monomial m, const Scalar& c) {
  Scalar n = ring->field().normalize(c);
  if (n == 0) return Polynomial(ring);
  return Polynomial(ring, {Term{std::move(m), n}});
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_[0].mono.degree();
  for (const Term& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) fail("Internal", "lead term of zero polynomial");
  return terms_[0];
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  const FieldSpec& F = ring_->field();
  const MonoOrder& ord = ring_->order();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = F.add(terms_[i].coef, o.terms_[j].coef);
      if (s != 0) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  const FieldSpec& F = ring_->field();
  for (Term& t : out) t.coef = F.neg(t.coef);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  const FieldSpec& F = ring_->field();
  Scalar n = F.normalize(c);
  if (n == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    Scalar s = F.mul(t.coef, n);
    if (s != 0) out.push_back(Term{t.mono * m, s});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  const FieldSpec& F = ring_->field();
  const MonoOrder& ord = ring_->order();
  auto cmp = [&ord](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
  std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
  for (const Term& s : terms_)
    for (const Term& t : o.terms_) {
      Monomial m = s.mono * t.mono;
      Scalar c = F.mul(s.coef, t.coef);
      auto it = acc.find(m);
      if (it == acc.end()) {
        if (c != 0) acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = F.add(it->second, c);
        if (it->second == 0) acc.erase(it);
      }
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{m, c});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  const FieldSpec& F = ring_->field();
  Scalar n = F.normalize(c);
  if (n == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coef = F.mul(t.coef, n);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_[0].coef));
}

Polynomial Polynomial::derivative(int var) const {
  const FieldSpec& F = ring_->field();
  std::vector<Term> out;
  for (const Term& t : terms_) {
    int e = t.mono.exps[var];
    if (e == 0) continue;
    Scalar c = F.mul(t.coef, Scalar(e));
    if (c == 0) continue;
    Term nt{t.mono, c};
    nt.mono.exps[var] -= 1;
    out.push_back(std::move(nt));
  }
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars())
    fail("IndexRange", "substitute needs one image per variable");
  if (images.empty()) fail("IndexRange", "substitute into empty ring");
  PolyRingPtr target = images[0].ring();
  Polynomial acc(target);
  for (const Term& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coef);
    for (int v = 0; v < ring_->nvars(); ++v)
      for (int e = 0; e < t.mono.exps[v]; ++e) prod = prod * images[v];
    acc = acc + prod;
  }
  return acc;
}

Polynomial Polynomial::transplant(const PolyRingPtr& target) const {
  if (target->nvars() != ring_->nvars()) fail("RingMismatch", "transplant variable count");
  Polynomial acc(target);
  for (const Term& t : terms_) acc = acc + Polynomial::monomial(target, t.mono, t.coef);
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Scalar c = t.coef;
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (neg) c = -c;
    bool unit_coef = (c == 1);
    bool has_mono = !t.mono.is_one();
    if (!unit_coef || !has_mono) {
      os << c.get_str();
      if (has_mono) os << "*";
    }
    if (has_mono) {
      bool firstv = true;
      for (int v = 0; v < ring_->nvars(); ++v) {
        int e = t.mono.exps[v];
        if (e == 0) continue;
        if (!firstv) os << "*";
        firstv = false;
        os << ring_->var_names()[v];
        if (e > 1) os << "^" << e;
      }
    }
    first = false;
  }
  return os.str();
}

namespace {

struct PolyLexer {
  const std::string& s;
  size_t pos = 0;

  explicit PolyLexer(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

}  // namespace

Polynomial Polynomial::parse(const PolyRingPtr& ring, const std::string& text) {
  PolyLexer lx(text);
  const FieldSpec& F = ring->field();

  // Variable names sorted longest-first so that e.g. "v10" beats "v1".
  std::vector<int> order_idx(ring->nvars());
  for (int i = 0; i < ring->nvars(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    return ring->var_names()[a].size() > ring->var_names()[b].size();
  });

  auto parse_uint = [&]() -> mpz_class {
    lx.skip_ws();
    size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos == start) fail("ParseError", "expected number in polynomial at '" + text + "'");
    return mpz_class(lx.s.substr(start, lx.pos - start));
  };

  auto try_var = [&]() -> int {
    lx.skip_ws();
    for (int i : order_idx) {
      const std::string& name = ring->var_names()[i];
      if (lx.s.compare(lx.pos, name.size(), name) == 0) {
        lx.pos += name.size();
        return i;
      }
    }
    return -1;
  };

  Polynomial result(ring);
  bool expect_term = true;
  int sign = 1;
  while (!lx.eof()) {
    char c = lx.peek();
    if (c == '+') {
      ++lx.pos;
      sign = 1;
      expect_term = true;
      continue;
    }
    if (c == '-') {
      ++lx.pos;
      sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) fail("ParseError", "unexpected token in polynomial '" + text + "'");

    Scalar coef(sign);
    Monomial mono = Monomial::one(ring->nvars());
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = parse_uint();
      mpz_class den(1);
      if (lx.peek() == '/') {
        ++lx.pos;
        den = parse_uint();
        if (den == 0) fail("ParseError", "zero denominator in '" + text + "'");
      }
      coef = coef * Scalar(mpq_class(num) / mpq_class(den));
      saw_factor = true;
    }
    for (;;) {
      if (lx.peek() == '*') {
        ++lx.pos;
        continue;
      }
      int v = try_var();
      if (v < 0) break;
      int e = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        e = static_cast<int>(parse_uint().get_si());
      }
      mono.exps[v] += e;
      saw_factor = true;
    }
    if (!saw_factor) fail("ParseError", "expected term in polynomial '" + text + "'");
    result = result + Polynomial::monomial(ring, mono, F.normalize(coef));
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !result.is_zero())
    fail("ParseError", "dangling sign in polynomial '" + text + "'");
  return result;
}

}  // namespace depthlab
