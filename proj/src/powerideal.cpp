#include "pil/powerideal.hpp"
#include "pil/coverage.hpp"

#include <stdexcept>
#include <string>

#include "pil/matroid.hpp"

namespace pil {

const char* variant_name(Variant v) { return v == Variant::Full ? "full" : "lines"; }

IdealSpec::IdealSpec(Arrangement arrangement, int k, Variant variant)
    : arrangement_(std::move(arrangement)), k_(k), variant_(variant), rho_(rho_min(arrangement_)) {
  if (static_cast<long>(k_) < -static_cast<long>(rho_ + 1)) {
    throw std::domain_error("power ideal undefined for k = " + std::to_string(k_) +
                            ": requires k >= -(rho + 1) = " + std::to_string(-static_cast<long>(rho_ + 1)));
  }
}

bool GeneratorFamily::is_unit() const {
  for (const auto& b : blocks)
    if (b.exponent == 0) return true;
  return false;
}

std::vector<GradedPoly> GeneratorFamily::of_degree(unsigned d) const {
  std::vector<GradedPoly> out;
  for (const auto& b : blocks)
    if (b.exponent == d) out.insert(out.end(), b.polys.begin(), b.polys.end());
  return out;
}

std::vector<GradedPoly> GeneratorFamily::all() const {
  std::vector<GradedPoly> out;
  for (const auto& b : blocks) out.insert(out.end(), b.polys.begin(), b.polys.end());
  return out;
}

namespace {

// All products b_1^{a_1} ... b_s^{a_s} with a_1 + ... + a_s = e.
std::vector<GradedPoly> symmetric_power(const Matrix& basis, unsigned e) {
  const std::size_t ell = basis.cols();
  const std::size_t s = basis.rows();
  std::vector<std::vector<GradedPoly>> powers(s);
  for (std::size_t i = 0; i < s; ++i)
    for (unsigned p = 0; p <= e; ++p) powers[i].push_back(expand_power(basis.row(i), p, Space::Operator));

  std::vector<GradedPoly> out;
  for (const auto& a : monomial_index(s, e)->monomials()) {
    GradedPoly g = GradedPoly::constant(ell, Space::Operator, 1);
    for (std::size_t i = 0; i < s; ++i)
      if (a[i] > 0) g = g * powers[i][a[i]];
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

GeneratorFamily generators(const IdealSpec& spec) {
  coverage::hit(coverage::Op::Generators);
  const Arrangement& a = spec.arrangement();
  GeneratorFamily family{a.ambient_dim(), {}};
  for (auto& x : strata(a)) {
    if (spec.variant() == Variant::Lines && x.dim != 1) continue;
    const long e = static_cast<long>(a.size() - x.multiplicity) + spec.k() + 1;
    if (e < 0) throw std::logic_error("negative generator exponent");
    GeneratorBlock block{std::move(x), static_cast<unsigned>(e), {}};
    if (spec.variant() == Variant::Lines) {
      block.polys.push_back(expand_power(block.stratum.direction(), block.exponent, Space::Operator));
    } else {
      block.polys = symmetric_power(block.stratum.basis, block.exponent);
    }
    family.blocks.push_back(std::move(block));
  }
  return family;
}

PowerIdeal::PowerIdeal(IdealSpec spec) : spec_(std::move(spec)), family_(generators(spec_)) {}

const GradedSubspace& PowerIdeal::ideal_span(unsigned d) {
  const std::size_t ell = spec_.arrangement().ambient_dim();
  while (spans_.size() <= d) {
    const auto t = static_cast<unsigned>(spans_.size());
    const auto index = monomial_index(ell, t);
    EchelonBasis basis(index->size());
    if (t > 0) {
      const GradedSubspace& prev = spans_.back();
      const auto prev_index = monomial_index(ell, t - 1);
      // shift[i][j]: index of x_i * (monomial j of degree t-1).
      std::vector<std::vector<std::size_t>> shift(ell, std::vector<std::size_t>(prev_index->size()));
      for (std::size_t j = 0; j < prev_index->size(); ++j) {
        Exponent e = prev_index->at(j);
        for (std::size_t i = 0; i < ell; ++i) {
          ++e[i];
          shift[i][j] = index->index_of(e);
          --e[i];
        }
      }
      Vector row(index->size());
      for (std::size_t r = 0; r < prev.basis.rows() && !basis.full(); ++r) {
        for (std::size_t i = 0; i < ell && !basis.full(); ++i) {
          std::fill(row.begin(), row.end(), Rational(0));
          const auto src = prev.basis.row(r);
          for (std::size_t j = 0; j < src.size(); ++j)
            if (src[j] != 0) row[shift[i][j]] = src[j];
          basis.insert(row);
        }
      }
    }
    for (const auto& g : family_.of_degree(t)) {
      if (basis.full()) break;
      basis.insert(g.coefficients());
    }
    spans_.push_back(GradedSubspace{ell, t, Space::Operator, basis.to_matrix()});
  }
  return spans_[d];
}

std::size_t PowerIdeal::inverse_dim(unsigned d) {
  return monomial_count(spec_.arrangement().ambient_dim(), d) - ideal_dim(d);
}

std::vector<GradedPoly> PowerIdeal::inverse_basis(unsigned d) {
  const std::size_t ell = spec_.arrangement().ambient_dim();
  const auto index = monomial_index(ell, d);
  std::vector<GradedPoly> out;
  for (const auto& v : kernel_basis(ideal_span(d).basis)) {
    out.emplace_back(ell, d, Space::Solution, from_weighted(*index, v));
  }
  return out;
}

GradedSubspace PowerIdeal::inverse_span(unsigned d) {
  const std::size_t ell = spec_.arrangement().ambient_dim();
  EchelonBasis basis(monomial_count(ell, d));
  for (const auto& f : inverse_basis(d)) basis.insert(f.coefficients());
  return GradedSubspace{ell, d, Space::Solution, basis.to_matrix()};
}

bool PowerIdeal::annihilated(const GradedPoly& f) {
  if (f.space() != Space::Solution) throw std::invalid_argument("annihilated: expects a solution polynomial");
  const Vector w = to_weighted(f.index(), f.coefficients());
  const Matrix& rows = ideal_span(f.degree()).basis;
  for (std::size_t r = 0; r < rows.rows(); ++r)
    if (dot(rows.row(r), w) != 0) return false;
  return true;
}

GradedSubspace ideal_degree_span(const IdealSpec& spec, unsigned d) {
  coverage::hit(coverage::Op::IdealDegreeSpan);
  PowerIdeal ideal(spec);
  return ideal.ideal_span(d);
}

std::vector<GradedPoly> inverse_system_basis(const IdealSpec& spec, unsigned d) {
  coverage::hit(coverage::Op::InverseSystemBasis);
  PowerIdeal ideal(spec);
  return ideal.inverse_basis(d);
}

std::size_t HilbertFunction::total() const {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

HilbertFunction hilbert_function(PowerIdeal& ideal) {
  coverage::hit(coverage::Op::HilbertFunction);
  HilbertFunction h;
  for (long d = 0; d <= ideal.spec().top_degree(); ++d) h.dims.push_back(ideal.inverse_dim(static_cast<unsigned>(d)));
  return h;
}

HilbertFunction hilbert_function(const IdealSpec& spec) {
  PowerIdeal ideal(spec);
  return hilbert_function(ideal);
}

namespace {

// Visits every multiset of labels of size `remaining` drawn from
// [first, n), carrying the running product.
template <typename Visit>
void for_each_product(const std::vector<GradedPoly>& forms, std::size_t first, unsigned remaining,
                      const GradedPoly& acc, Visit&& visit) {
  if (remaining == 0) {
    visit(acc);
    return;
  }
  for (std::size_t i = first; i < forms.size(); ++i) for_each_product(forms, i, remaining - 1, acc * forms[i], visit);
}

}  // namespace

MonomialSpan a_monomial_span(const IdealSpec& spec) {
  coverage::hit(coverage::Op::AMonomialSpan);
  PowerIdeal ideal(spec);
  const Arrangement& a = spec.arrangement();
  const std::size_t ell = a.ambient_dim();
  std::vector<GradedPoly> forms;
  for (const auto& l : a.forms()) forms.emplace_back(ell, 1, Space::Solution, l);

  MonomialSpan out;
  out.spanned = true;
  const GradedPoly one = GradedPoly::constant(ell, Space::Solution, 1);
  for (long dl = 0; dl <= spec.top_degree(); ++dl) {
    const auto d = static_cast<unsigned>(dl);
    EchelonBasis inverse(monomial_count(ell, d));
    for (const auto& f : ideal.inverse_basis(d)) inverse.insert(f.coefficients());
    EchelonBasis reached(monomial_count(ell, d));
    if (inverse.rank() > 0) {
      for_each_product(forms, 0, d, one, [&](const GradedPoly& p) {
        if (inverse.contains(p.coefficients())) reached.insert(p.coefficients());
      });
    }
    out.dims.push_back(reached.rank());
    if (reached.rank() != inverse.rank()) out.spanned = false;
  }
  return out;
}

bool check_c_equals_cprime(const Arrangement& a, int k) {
  coverage::hit(coverage::Op::CheckCEqualsCPrime);
  PowerIdeal full(IdealSpec(a, k, Variant::Full));
  PowerIdeal restricted(IdealSpec(a, k, Variant::Lines));
  for (long d = 0; d <= full.spec().top_degree(); ++d) {
    const auto du = static_cast<unsigned>(d);
    if (!(full.ideal_span(du).basis == restricted.ideal_span(du).basis)) return false;
  }
  return true;
}

Degree1Component degree1_component(const Arrangement& a) {
  coverage::hit(coverage::Op::Degree1Component);
  const auto rho = static_cast<int>(rho_min(a));
  PowerIdeal ideal(IdealSpec(a, -rho, Variant::Full));
  Degree1Component out;
  out.from_inverse_system = ideal.inverse_span(1).basis;
  out.from_large_span = row_basis(Matrix::from_rows(kernel_basis(large_span(a)), a.ambient_dim()));
  out.agree = out.from_inverse_system == out.from_large_span;
  return out;
}

std::vector<long> exact_sequence_defect(const Arrangement& a, std::size_t label, int k) {
  coverage::hit(coverage::Op::ExactSequenceDefect);
  a.form(label);
  if (a.ambient_dim() < 2) throw std::invalid_argument("exact_sequence_defect: contraction needs ell >= 2");
  const Matroid m = matroid_of(a);
  if (m.is_loop(label)) throw std::invalid_argument("hyperplane " + std::to_string(label) + " is a loop");
  if (m.is_coloop(label)) throw std::invalid_argument("hyperplane " + std::to_string(label) + " is a coloop");

  PowerIdeal whole(IdealSpec(a, k));
  PowerIdeal deleted(IdealSpec(delete_form(a, label), k));
  PowerIdeal contracted(IdealSpec(contract(a, label).arrangement, k));
  const HilbertFunction hw = hilbert_function(whole);
  const HilbertFunction hd = hilbert_function(deleted);
  const HilbertFunction hc = hilbert_function(contracted);

  std::vector<long> defect;
  for (long d = 0; d <= whole.spec().top_degree(); ++d) {
    const auto du = static_cast<std::size_t>(d);
    const long shifted = d >= 1 ? static_cast<long>(hd.at(du - 1)) : 0;
    defect.push_back(static_cast<long>(hw.at(du)) - shifted - static_cast<long>(hc.at(du)));
  }
  return defect;
}

}  // namespace pil
