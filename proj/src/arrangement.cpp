#include "pil/arrangement.hpp"
#include "pil/coverage.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace pil {

Arrangement::Arrangement(std::size_t ell, std::vector<Vector> forms, std::size_t loops)
    : ell_(ell), forms_(std::move(forms)), loops_(loops) {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].size() != ell_) {
      throw std::invalid_argument("form " + std::to_string(i) + " has length " +
                                  std::to_string(forms_[i].size()) + ", expected " + std::to_string(ell_));
    }
    if (is_zero(forms_[i])) throw std::invalid_argument("form " + std::to_string(i) + " is zero");
  }
}

const Vector& Arrangement::form(std::size_t label) const {
  if (label >= forms_.size()) throw std::out_of_range("no form with label " + std::to_string(label));
  return forms_[label];
}

Matrix Arrangement::form_matrix() const { return Matrix::from_rows(forms_, ell_); }

std::size_t rho_of(const Arrangement& a, std::span<const Rational> h) {
  coverage::hit(coverage::Op::RhoOf);
  if (h.size() != a.ambient_dim()) throw std::invalid_argument("rho_of: vector has wrong length");
  if (is_zero(h)) throw std::invalid_argument("rho_of: h must be nonzero");
  return static_cast<std::size_t>(
      std::count_if(a.forms().begin(), a.forms().end(), [&](const Vector& l) { return dot(l, h) != 0; }));
}

namespace {

Matrix subspace_of(const Arrangement& a, const std::vector<std::size_t>& labels) {
  Matrix eqs(0, a.ambient_dim());
  for (auto i : labels) eqs.append_row(a.forms()[i]);
  return Matrix::from_rows(kernel_basis(eqs), a.ambient_dim());
}

std::vector<std::size_t> vanishing_on(const Arrangement& a, const Matrix& basis) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool vanishes = true;
    for (std::size_t r = 0; r < basis.rows() && vanishes; ++r) vanishes = dot(a.forms()[i], basis.row(r)) == 0;
    if (vanishes) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<Stratum> strata(const Arrangement& a) {
  coverage::hit(coverage::Op::Strata);
  // Each intersection subspace is determined by its (closed) set of
  // containing hyperplanes, which serves as the dedup key.
  std::map<std::vector<std::size_t>, Stratum> seen;
  std::deque<std::vector<std::size_t>> queue;

  auto visit = [&](std::vector<std::size_t> labels) {
    Matrix basis = subspace_of(a, labels);
    if (basis.rows() == 0) return;
    basis = row_basis(basis);
    auto closed = vanishing_on(a, basis);
    if (seen.contains(closed)) return;
    Stratum s{basis, basis.rows(), closed.size(), closed};
    seen.emplace(closed, std::move(s));
    queue.push_back(std::move(closed));
  };

  visit({});
  while (!queue.empty()) {
    auto labels = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (std::binary_search(labels.begin(), labels.end(), j)) continue;
      auto next = labels;
      next.insert(std::upper_bound(next.begin(), next.end(), j), j);
      visit(std::move(next));
    }
  }

  std::vector<Stratum> out;
  out.reserve(seen.size());
  for (auto& [key, s] : seen) out.push_back(std::move(s));
  std::stable_sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.containing < y.containing;
  });
  return out;
}

std::vector<Stratum> lines(const Arrangement& a) {
  coverage::hit(coverage::Op::Lines);
  std::vector<Stratum> out;
  for (auto& s : strata(a))
    if (s.dim == 1) out.push_back(std::move(s));
  return out;
}

std::size_t rho_min(const Arrangement& a) {
  coverage::hit(coverage::Op::RhoMin);
  if (a.ambient_dim() == 0) throw std::invalid_argument("rho_min: ambient space is zero-dimensional");
  std::size_t best = 0;
  for (const auto& s : strata(a)) best = std::max(best, s.multiplicity);
  return a.size() - best;
}

Matrix large_span(const Arrangement& a) {
  coverage::hit(coverage::Op::LargeSpan);
  const auto all = strata(a);
  std::size_t best = 0;
  for (const auto& s : all) best = std::max(best, s.multiplicity);
  std::vector<Matrix> bases;
  for (const auto& s : all)
    if (s.multiplicity == best) bases.push_back(s.basis);
  return subspace_sum(bases, a.ambient_dim());
}

Arrangement delete_form(const Arrangement& a, std::size_t label) {
  coverage::hit(coverage::Op::Delete);
  a.form(label);
  auto forms = a.forms();
  forms.erase(forms.begin() + static_cast<std::ptrdiff_t>(label));
  return Arrangement(a.ambient_dim(), std::move(forms), a.loops());
}

Contraction contract(const Arrangement& a, std::size_t label) {
  coverage::hit(coverage::Op::Contract);
  const Vector& h = a.form(label);
  const Matrix eq = Matrix::from_rows({h}, a.ambient_dim());
  Matrix embedding = Matrix::from_rows(kernel_basis(eq), a.ambient_dim());

  std::vector<Vector> forms;
  std::size_t loops = a.loops();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == label) continue;
    Vector restricted = embedding.apply(a.forms()[i]);
    if (is_zero(restricted)) {
      ++loops;
    } else {
      forms.push_back(std::move(restricted));
    }
  }
  return {Arrangement(embedding.rows(), std::move(forms), loops), std::move(embedding)};
}

Arrangement transform(const Arrangement& a, const Matrix& g) {
  const std::size_t ell = a.ambient_dim();
  if (g.rows() != ell || g.cols() != ell) throw std::invalid_argument("transform: matrix has wrong shape");
  if (rank(g) != ell) throw std::invalid_argument("transform: matrix is singular");
  const Matrix gt = g.transpose();
  std::vector<Vector> forms;
  for (const auto& l : a.forms()) forms.push_back(gt.apply(l));
  return Arrangement(ell, std::move(forms), a.loops());
}

}  // namespace pil
