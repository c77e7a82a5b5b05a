#include "pil/linalg.hpp"
#include "pil/coverage.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pil {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? Integer(-p) : p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

void Matrix::append_row(std::span<const Rational> v) {
  if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const Matrix& m) {
  coverage::hit(coverage::Op::Rref);
  RrefResult out{m, 0, {}};
  Matrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    }
    const Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (a(lead, j) != 0) a(r, j) -= f * a(lead, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++lead;
  }
  out.rank = lead;
  return out;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows() && !basis.full(); ++r) basis.insert(m.row(r));
  return basis.rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  coverage::hit(coverage::Op::KernelBasis);
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivot_columns[i]] = -red.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool rowspace_contains(const Matrix& m, std::span<const Rational> v) {
  coverage::hit(coverage::Op::RowspaceContains);
  if (v.size() != m.cols()) throw std::invalid_argument("rowspace_contains: length mismatch");
  EchelonBasis basis(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) basis.insert(m.row(r));
  return basis.contains(v);
}

Matrix subspace_sum(std::span<const Matrix> bases, std::size_t cols) {
  coverage::hit(coverage::Op::SubspaceSum);
  EchelonBasis sum(cols);
  for (const auto& b : bases) {
    if (b.cols() != cols) throw std::invalid_argument("subspace_sum: column mismatch");
    for (std::size_t r = 0; r < b.rows() && !sum.full(); ++r) sum.insert(b.row(r));
  }
  return sum.to_matrix();
}

Matrix row_basis(const Matrix& m) {
  const Matrix single[] = {m};
  return subspace_sum(single, m.cols());
}

Vector EchelonBasis::reduce(std::span<const Rational> v) const {
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = w[pivots_[i]];
    if (f == 0) continue;
    const Vector& row = rows_[i];
    for (std::size_t j = pivots_[i]; j < cols_; ++j) {
      if (row[j] != 0) w[j] -= f * row[j];
    }
  }
  return w;
}

bool EchelonBasis::insert(std::span<const Rational> v) {
  if (v.size() != cols_) throw std::invalid_argument("EchelonBasis: length mismatch");
  Vector w = reduce(v);
  std::size_t pivot = 0;
  while (pivot < cols_ && w[pivot] == 0) ++pivot;
  if (pivot == cols_) return false;

  const Rational inv = 1 / w[pivot];
  for (std::size_t j = pivot; j < cols_; ++j) w[j] *= inv;
  for (auto& row : rows_) {
    const Rational f = row[pivot];
    if (f == 0) continue;
    for (std::size_t j = pivot; j < cols_; ++j) {
      if (w[j] != 0) row[j] -= f * w[j];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

bool EchelonBasis::contains(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("EchelonBasis: length mismatch");
  return is_zero(reduce(v));
}

Matrix EchelonBasis::to_matrix() const { return Matrix::from_rows(rows_, cols_); }

}  // namespace pil
