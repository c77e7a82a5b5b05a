#pragma once

// Central hyperplane arrangements over Q: the hyperplanes H_i = ker(l_i) for
// nonzero covectors l_i, with their intersection subspaces ("strata").

#include <cstddef>
#include <span>
#include <vector>

#include "pil/linalg.hpp"

namespace pil {

class Arrangement {
 public:
  /// Throws std::invalid_argument if a form is zero or has length != ell.
  Arrangement(std::size_t ell, std::vector<Vector> forms, std::size_t loops = 0);

  std::size_t ambient_dim() const { return ell_; }
  /// Number of (nonzero) forms. Loops are counted separately.
  std::size_t size() const { return forms_.size(); }
  std::size_t loops() const { return loops_; }
  const std::vector<Vector>& forms() const { return forms_; }
  const Vector& form(std::size_t label) const;

  /// Forms stacked as rows, n x ell.
  Matrix form_matrix() const;

  bool operator==(const Arrangement&) const = default;

 private:
  std::size_t ell_;
  std::vector<Vector> forms_;
  std::size_t loops_;
};

/// An intersection subspace X of dimension >= 1 together with the labels of
/// the hyperplanes containing it.
struct Stratum {
  Matrix basis;  // RREF, dim x ell
  std::size_t dim = 0;
  std::size_t multiplicity = 0;  // m_X
  std::vector<std::size_t> containing;

  /// The first basis vector; for a line this is its canonical direction.
  Vector direction() const { return basis.row_vector(0); }
};

/// Number of hyperplanes not containing h. Throws on h = 0.
std::size_t rho_of(const Arrangement& a, std::span<const Rational> h);

/// Every distinct intersection subspace of dimension >= 1, V included.
/// Sorted by decreasing dimension, then by containing set.
std::vector<Stratum> strata(const Arrangement& a);

/// The one-dimensional strata.
std::vector<Stratum> lines(const Arrangement& a);

/// min over nonzero h of rho_of(a, h). Throws if ell = 0.
std::size_t rho_min(const Arrangement& a);

/// RREF basis of the span of all vectors h with rho_of(a, h) = rho_min(a).
Matrix large_span(const Arrangement& a);

Arrangement delete_form(const Arrangement& a, std::size_t label);

struct Contraction {
  Arrangement arrangement;
  /// (ell - 1) x ell; row j is the j-th basis vector of ker(l_i) in V.
  Matrix embedding;
};

/// Restrict every other form to H_label. Forms that vanish on H_label become
/// loops.
Contraction contract(const Arrangement& a, std::size_t label);

/// Change of coordinates: each form l becomes l * g (g is ell x ell,
/// invertible). Throws if g is singular.
Arrangement transform(const Arrangement& a, const Matrix& g);

}  // namespace pil
