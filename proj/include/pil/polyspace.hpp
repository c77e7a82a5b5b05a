#pragma once

// Homogeneous polynomials of a fixed degree in ell variables, stored as dense
// coefficient vectors over the graded-lexicographic monomial basis.
//
// Two polynomial rings are kept apart by a tag: operators live in Sym(V) with
// variables x_1..x_ell and act by differentiation on solutions in Sym(V*) with
// variables y_1..y_ell.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pil/linalg.hpp"

namespace pil {

enum class Space { Operator, Solution };

const char* variable_prefix(Space s);

using Exponent = std::vector<unsigned>;

/// All exponent vectors of total degree d in ell variables, ordered
/// lexicographically from x_1^d down to x_ell^d.
class MonomialIndex {
 public:
  MonomialIndex(std::size_t ell, unsigned degree);

  std::size_t ambient_dim() const { return ell_; }
  unsigned degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& at(std::size_t i) const { return monomials_[i]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }

  /// Throws std::out_of_range if the exponent is not of this degree.
  std::size_t index_of(const Exponent& e) const;

 private:
  std::size_t ell_;
  unsigned degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> lookup_;
};

/// Shared, thread-safe cache of monomial indices.
std::shared_ptr<const MonomialIndex> monomial_index(std::size_t ell, unsigned degree);

/// binom(ell + d - 1, d). Requires ell >= 1.
std::size_t monomial_count(std::size_t ell, unsigned d);

/// prod_i e_i!, the value <x^e, y^e> of the differentiation pairing.
Integer apolarity_weight(const Exponent& e);

class GradedPoly {
 public:
  GradedPoly(std::size_t ell, unsigned degree, Space space);
  GradedPoly(std::size_t ell, unsigned degree, Space space, Vector coefficients);

  static GradedPoly constant(std::size_t ell, Space space, const Rational& c);
  static GradedPoly monomial(std::size_t ell, Space space, const Exponent& e);

  std::size_t ambient_dim() const { return ell_; }
  unsigned degree() const { return degree_; }
  Space space() const { return space_; }
  const Vector& coefficients() const { return coeffs_; }
  const MonomialIndex& index() const { return *index_; }

  bool is_zero() const;
  Rational evaluate(std::span<const Rational> point) const;

  GradedPoly operator+(const GradedPoly& rhs) const;
  GradedPoly operator-(const GradedPoly& rhs) const;
  GradedPoly operator*(const Rational& s) const;
  /// Product in the same ring; degrees add.
  GradedPoly operator*(const GradedPoly& rhs) const;

  bool operator==(const GradedPoly& rhs) const;

  /// e.g. "2*y1^2*y2 - y3", "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void check_compatible(const GradedPoly& rhs, const char* what) const;

  std::size_t ell_;
  unsigned degree_;
  Space space_;
  std::shared_ptr<const MonomialIndex> index_;
  Vector coeffs_;
};

/// (h_1 v_1 + ... + h_ell v_ell)^e by the multinomial theorem. Throws
/// std::invalid_argument if h = 0 and e > 0.
GradedPoly expand_power(std::span<const Rational> h, unsigned e, Space space);

/// Apply op(d/dy) to f. Throws std::invalid_argument when op is not an
/// operator, f is not a solution, ambient dimensions differ, or
/// op.degree() > f.degree().
GradedPoly apply_diff(const GradedPoly& op, const GradedPoly& f);

/// Rows are the coefficient vectors of m*g for every operator g in `ops` with
/// deg g <= d and every monomial m of degree d - deg g. Generators of degree
/// above d contribute nothing.
Matrix pairing_matrix(std::size_t ell, std::span<const GradedPoly> ops, unsigned d);

/// Rescale between the coefficient dot product and the differentiation
/// pairing: c_a -> c_a * a! (to_weighted) or c_a / a! (from_weighted).
Vector to_weighted(const MonomialIndex& index, std::span<const Rational> coeffs);
Vector from_weighted(const MonomialIndex& index, std::span<const Rational> coeffs);

}  // namespace pil
