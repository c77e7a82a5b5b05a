#pragma once

// Power ideals of a central arrangement and their inverse systems.
//
// I_{A,k} is generated by h^{rho(h)+k+1} over all nonzero h in V. On the
// relative interior of a stratum X every h has rho(h) = n - m_X, and in
// characteristic zero the powers h^e (h in X) span Sym^e(X). So the ideal is
// generated by the finite family Sym^{e_X}(X), e_X = n - m_X + k + 1, over
// all strata X. The Lines variant I'_{A,k} keeps one generator h^{e} per line.
//
// The inverse system C_{A,k} is the orthogonal complement of I_{A,k} under
// the differentiation pairing, computed one degree at a time.

#include <cstddef>
#include <optional>
#include <vector>

#include "pil/arrangement.hpp"
#include "pil/linalg.hpp"
#include "pil/polyspace.hpp"

namespace pil {

enum class Variant { Full, Lines };

const char* variant_name(Variant v);

class IdealSpec {
 public:
  /// Throws std::domain_error when k < -(rho(A) + 1).
  IdealSpec(Arrangement arrangement, int k, Variant variant = Variant::Full);

  const Arrangement& arrangement() const { return arrangement_; }
  int k() const { return k_; }
  Variant variant() const { return variant_; }
  std::size_t rho() const { return rho_; }

  /// n + k; the inverse system vanishes above this degree. Negative means
  /// the inverse system is zero.
  long top_degree() const { return static_cast<long>(arrangement_.size()) + k_; }

 private:
  Arrangement arrangement_;
  int k_;
  Variant variant_;
  std::size_t rho_;
};

struct GeneratorBlock {
  Stratum stratum;
  unsigned exponent = 0;
  std::vector<GradedPoly> polys;
};

struct GeneratorFamily {
  std::size_t ambient_dim = 0;
  std::vector<GeneratorBlock> blocks;

  bool is_unit() const;
  /// All generator polynomials of exactly degree d.
  std::vector<GradedPoly> of_degree(unsigned d) const;
  std::vector<GradedPoly> all() const;
};

GeneratorFamily generators(const IdealSpec& spec);

/// One graded piece of a subspace of Sym(V) or Sym(V*), as an RREF basis of
/// coefficient vectors in the monomial basis of that degree.
struct GradedSubspace {
  std::size_t ambient_dim = 0;
  unsigned degree = 0;
  Space space = Space::Operator;
  Matrix basis;

  std::size_t dim() const { return basis.rows(); }
  bool operator==(const GradedSubspace&) const = default;
};

/// Degree-by-degree computation of I_d and C_d for one spec, built with
/// I_d = x_1 I_{d-1} + ... + x_ell I_{d-1} + (generators of degree d).
/// Results are cached; an instance is not safe for concurrent mutation.
class PowerIdeal {
 public:
  explicit PowerIdeal(IdealSpec spec);

  const IdealSpec& spec() const { return spec_; }
  const GeneratorFamily& generator_family() const { return family_; }

  const GradedSubspace& ideal_span(unsigned d);
  std::size_t ideal_dim(unsigned d) { return ideal_span(d).dim(); }
  std::size_t inverse_dim(unsigned d);

  /// Solution polynomials of degree d spanning C_d. Each is the canonical
  /// kernel vector rescaled from the dot-product pairing to the
  /// differentiation pairing.
  std::vector<GradedPoly> inverse_basis(unsigned d);
  GradedSubspace inverse_span(unsigned d);

  /// Whether a degree-d solution polynomial is annihilated by I_d.
  bool annihilated(const GradedPoly& f);

 private:
  IdealSpec spec_;
  GeneratorFamily family_;
  std::vector<GradedSubspace> spans_;
};

GradedSubspace ideal_degree_span(const IdealSpec& spec, unsigned d);

std::vector<GradedPoly> inverse_system_basis(const IdealSpec& spec, unsigned d);

struct HilbertFunction {
  std::vector<std::size_t> dims;  // dims[d] = dim C_d, d = 0..n+k

  std::size_t total() const;
  std::size_t at(std::size_t d) const { return d < dims.size() ? dims[d] : 0; }
  bool operator==(const HilbertFunction&) const = default;
};

HilbertFunction hilbert_function(const IdealSpec& spec);
HilbertFunction hilbert_function(PowerIdeal& ideal);

struct MonomialSpan {
  std::vector<std::size_t> dims;  // dim span{A-monomials of degree d in C_d}
  bool spanned = false;
};

/// Products of the forms l_i (as solution polynomials) lying in C, per degree.
MonomialSpan a_monomial_span(const IdealSpec& spec);

/// Per-degree equality of I_{A,k} and I'_{A,k} for degrees 0..n+k.
bool check_c_equals_cprime(const Arrangement& a, int k);

struct Degree1Component {
  Matrix from_large_span;      // kernel of the large span, RREF
  Matrix from_inverse_system;  // (C_{A,-rho})_1, RREF
  bool agree = false;
  std::size_t dim() const { return from_inverse_system.rows(); }
};

Degree1Component degree1_component(const Arrangement& a);

/// defect[d] = dim(C_A)_d - dim(C_{A\H})_{d-1} - dim(C_{A/H})_d, d = 0..n+k.
/// Throws std::invalid_argument if H is a loop or coloop, or if k is out of
/// range for any of the three arrangements.
std::vector<long> exact_sequence_defect(const Arrangement& a, std::size_t label, int k);

}  // namespace pil
