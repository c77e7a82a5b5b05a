#include "pil/polyspace.hpp"
#include "pil/coverage.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pil {

const char* variable_prefix(Space s) { return s == Space::Operator ? "x" : "y"; }

namespace {

void enumerate(std::size_t ell, unsigned remaining, std::size_t var, Exponent& cur,
               std::vector<Exponent>& out) {
  if (var + 1 == ell) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned a = remaining + 1; a-- > 0;) {
    cur[var] = a;
    enumerate(ell, remaining - a, var + 1, cur, out);
  }
  cur[var] = 0;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// b! / (b - a)!
Integer falling(unsigned b, unsigned a) {
  Integer f = 1;
  for (unsigned i = 0; i < a; ++i) f *= (b - i);
  return f;
}

}  // namespace

MonomialIndex::MonomialIndex(std::size_t ell, unsigned degree) : ell_(ell), degree_(degree) {
  if (ell == 0) throw std::invalid_argument("MonomialIndex: ambient dimension must be >= 1");
  Exponent cur(ell, 0);
  enumerate(ell, degree, 0, cur, monomials_);
  for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], i);
}

std::size_t MonomialIndex::index_of(const Exponent& e) const {
  auto it = lookup_.find(e);
  if (it == lookup_.end()) throw std::out_of_range("exponent not in monomial index");
  return it->second;
}

std::shared_ptr<const MonomialIndex> monomial_index(std::size_t ell, unsigned degree) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const MonomialIndex>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{ell, degree}];
  if (!slot) slot = std::make_shared<const MonomialIndex>(ell, degree);
  return slot;
}

std::size_t monomial_count(std::size_t ell, unsigned d) {
  coverage::hit(coverage::Op::MonomialCount);
  if (ell == 0) throw std::invalid_argument("monomial_count: ell must be >= 1");
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), ell + d - 1, d);
  return c.get_ui();
}

Integer apolarity_weight(const Exponent& e) {
  Integer w = 1;
  for (unsigned a : e) w *= factorial(a);
  return w;
}

GradedPoly::GradedPoly(std::size_t ell, unsigned degree, Space space)
    : ell_(ell), degree_(degree), space_(space), index_(monomial_index(ell, degree)),
      coeffs_(index_->size(), Rational(0)) {}

GradedPoly::GradedPoly(std::size_t ell, unsigned degree, Space space, Vector coefficients)
    : ell_(ell), degree_(degree), space_(space), index_(monomial_index(ell, degree)),
      coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != index_->size()) {
    throw std::invalid_argument("GradedPoly: coefficient vector has wrong length");
  }
}

GradedPoly GradedPoly::constant(std::size_t ell, Space space, const Rational& c) {
  return GradedPoly(ell, 0, space, Vector{c});
}

GradedPoly GradedPoly::monomial(std::size_t ell, Space space, const Exponent& e) {
  unsigned d = 0;
  for (unsigned a : e) d += a;
  GradedPoly p(ell, d, space);
  p.coeffs_[p.index_->index_of(e)] = 1;
  return p;
}

bool GradedPoly::is_zero() const { return pil::is_zero(coeffs_); }

Rational GradedPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ell_) throw std::invalid_argument("evaluate: point has wrong length");
  Rational total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational term = coeffs_[i];
    const Exponent& e = index_->at(i);
    for (std::size_t v = 0; v < ell_; ++v)
      for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
    total += term;
  }
  return total;
}

void GradedPoly::check_compatible(const GradedPoly& rhs, const char* what) const {
  if (space_ != rhs.space_) {
    throw std::invalid_argument(std::string(what) + ": operator and solution polynomials do not mix");
  }
  if (ell_ != rhs.ell_) throw std::invalid_argument(std::string(what) + ": ambient dimension mismatch");
}

GradedPoly GradedPoly::operator+(const GradedPoly& rhs) const {
  check_compatible(rhs, "add");
  if (degree_ != rhs.degree_) throw std::invalid_argument("add: degree mismatch");
  GradedPoly out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
  return out;
}

GradedPoly GradedPoly::operator-(const GradedPoly& rhs) const { return *this + rhs * Rational(-1); }

GradedPoly GradedPoly::operator*(const Rational& s) const {
  GradedPoly out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

GradedPoly GradedPoly::operator*(const GradedPoly& rhs) const {
  check_compatible(rhs, "multiply");
  GradedPoly out(ell_, degree_ + rhs.degree_, space_);
  Exponent sum(ell_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const Exponent& a = index_->at(i);
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      const Exponent& b = rhs.index_->at(j);
      for (std::size_t v = 0; v < ell_; ++v) sum[v] = a[v] + b[v];
      out.coeffs_[out.index_->index_of(sum)] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

bool GradedPoly::operator==(const GradedPoly& rhs) const {
  return ell_ == rhs.ell_ && degree_ == rhs.degree_ && space_ == rhs.space_ && coeffs_ == rhs.coeffs_;
}

std::string GradedPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    const Exponent& e = index_->at(i);
    bool has_var = degree_ > 0;
    bool wrote = false;
    if (c != 1 || !has_var) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t v = 0; v < ell_; ++v) {
      if (e[v] == 0) continue;
      if (wrote) os << '*';
      os << variable_prefix(space_) << (v + 1);
      if (e[v] > 1) os << '^' << e[v];
      wrote = true;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

GradedPoly expand_power(std::span<const Rational> h, unsigned e, Space space) {
  coverage::hit(coverage::Op::ExpandPower);
  const std::size_t ell = h.size();
  if (e > 0 && is_zero(h)) throw std::invalid_argument("expand_power: zero vector raised to a positive power");
  GradedPoly out(ell, e, space);
  const Integer top = factorial(e);
  const auto& idx = out.index();
  Vector coeffs(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const Exponent& a = idx.at(i);
    Rational c(top, apolarity_weight(a));
    c.canonicalize();
    for (std::size_t v = 0; v < ell && c != 0; ++v)
      for (unsigned k = 0; k < a[v]; ++k) c *= h[v];
    coeffs[i] = c;
  }
  return GradedPoly(ell, e, space, std::move(coeffs));
}

GradedPoly apply_diff(const GradedPoly& op, const GradedPoly& f) {
  coverage::hit(coverage::Op::ApplyDiff);
  if (op.space() != Space::Operator || f.space() != Space::Solution) {
    throw std::invalid_argument("apply_diff: expects an operator acting on a solution polynomial");
  }
  if (op.ambient_dim() != f.ambient_dim()) throw std::invalid_argument("apply_diff: ambient dimension mismatch");
  if (op.degree() > f.degree()) throw std::invalid_argument("apply_diff: operator degree exceeds polynomial degree");

  const std::size_t ell = f.ambient_dim();
  GradedPoly out(ell, f.degree() - op.degree(), Space::Solution);
  Vector coeffs(out.index().size(), Rational(0));
  Exponent diff(ell);
  for (std::size_t i = 0; i < op.coefficients().size(); ++i) {
    const Rational& c = op.coefficients()[i];
    if (c == 0) continue;
    const Exponent& a = op.index().at(i);
    for (std::size_t j = 0; j < f.coefficients().size(); ++j) {
      const Rational& g = f.coefficients()[j];
      if (g == 0) continue;
      const Exponent& b = f.index().at(j);
      bool fits = true;
      Integer mult = 1;
      for (std::size_t v = 0; v < ell && fits; ++v) {
        if (a[v] > b[v]) {
          fits = false;
        } else {
          diff[v] = b[v] - a[v];
          mult *= falling(b[v], a[v]);
        }
      }
      if (!fits) continue;
      coeffs[out.index().index_of(diff)] += c * g * Rational(mult);
    }
  }
  return GradedPoly(ell, out.degree(), Space::Solution, std::move(coeffs));
}

Matrix pairing_matrix(std::size_t ell, std::span<const GradedPoly> ops, unsigned d) {
  coverage::hit(coverage::Op::PairingMatrix);
  Matrix out(0, monomial_count(ell, d));
  for (const auto& g : ops) {
    if (g.ambient_dim() != ell) throw std::invalid_argument("pairing_matrix: ambient dimension mismatch");
    if (g.space() != Space::Operator) throw std::invalid_argument("pairing_matrix: generators must be operators");
    if (g.degree() > d) continue;
    const auto shifts = monomial_index(ell, d - g.degree());
    for (const auto& m : shifts->monomials()) {
      out.append_row((GradedPoly::monomial(ell, Space::Operator, m) * g).coefficients());
    }
  }
  return out;
}

Vector to_weighted(const MonomialIndex& index, std::span<const Rational> coeffs) {
  Vector out(coeffs.begin(), coeffs.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= Rational(apolarity_weight(index.at(i)));
  return out;
}

Vector from_weighted(const MonomialIndex& index, std::span<const Rational> coeffs) {
  Vector out(coeffs.begin(), coeffs.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] /= Rational(apolarity_weight(index.at(i)));
  return out;
}

}  // namespace pil
