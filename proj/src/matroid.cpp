#include "pil/matroid.hpp"
#include "pil/coverage.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pil {

Matroid::Matroid(std::size_t ground_size, std::vector<std::uint8_t> ranks)
    : ground_(ground_size), ranks_(std::move(ranks)) {
  if (ground_ > kMaxGroundSize) throw std::invalid_argument("matroid ground set larger than 16 labels");
  if (ranks_.size() != (std::size_t{1} << ground_)) throw std::invalid_argument("rank table has wrong size");
}

std::vector<LabelSet> Matroid::bases() const {
  std::vector<LabelSet> out;
  const std::size_t r = rank();
  for (LabelSet s = 0; s <= ground_set(); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == r && rank(s) == r) out.push_back(s);
    if (s == ground_set()) break;
  }
  return out;
}

std::size_t Matroid::independent_set_count() const {
  std::size_t count = 0;
  for (LabelSet s = 0;; ++s) {
    if (rank(s) == static_cast<std::size_t>(std::popcount(s))) ++count;
    if (s == ground_set()) break;
  }
  return count;
}

Matroid matroid_of(const Arrangement& a) {
  coverage::hit(coverage::Op::MatroidOf);
  const std::size_t n = a.size();
  const std::size_t ground = n + a.loops();
  if (ground > kMaxGroundSize) throw std::invalid_argument("arrangement has more than 16 labels");
  std::vector<std::uint8_t> ranks(std::size_t{1} << ground, 0);
  for (LabelSet s = 1; s < ranks.size(); ++s) {
    // Loops occupy the high labels and never change the rank.
    const LabelSet forms_only = s & static_cast<LabelSet>((std::uint64_t{1} << n) - 1);
    if (forms_only != s) {
      ranks[s] = ranks[forms_only];
      continue;
    }
    EchelonBasis basis(a.ambient_dim());
    for (std::size_t i = 0; i < n; ++i)
      if (s & (LabelSet{1} << i)) basis.insert(a.forms()[i]);
    ranks[s] = static_cast<std::uint8_t>(basis.rank());
  }
  return Matroid(ground, std::move(ranks));
}

bool same_matroid(const Matroid& a, const Matroid& b) {
  coverage::hit(coverage::Op::SameMatroid);
  if (a.ground_size() != b.ground_size()) {
    throw std::invalid_argument("same_matroid: ground sets have different sizes (" +
                                std::to_string(a.ground_size()) + " vs " + std::to_string(b.ground_size()) + ")");
  }
  return a == b;
}

bool same_matroid(const Arrangement& a, const Arrangement& b) {
  return same_matroid(matroid_of(a), matroid_of(b));
}

namespace {

LabelSet permute(LabelSet s, const std::vector<std::size_t>& p) {
  LabelSet out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (s & (LabelSet{1} << i)) out |= LabelSet{1} << p[i];
  return out;
}

bool extend(const Matroid& a, const Matroid& b, std::vector<std::size_t>& p, std::vector<bool>& used) {
  const std::size_t i = p.size();
  const std::size_t n = a.ground_size();
  if (i == n) return true;
  for (std::size_t target = 0; target < n; ++target) {
    if (used[target]) continue;
    p.push_back(target);
    bool ok = true;
    // Only subsets containing the newly assigned label need checking.
    const LabelSet lower = static_cast<LabelSet>((LabelSet{1} << i) - 1);
    for (LabelSet t = 0;; t = (t - lower) & lower) {
      const LabelSet s = t | (LabelSet{1} << i);
      if (a.rank(s) != b.rank(permute(s, p))) {
        ok = false;
        break;
      }
      if (t == lower) break;
    }
    if (ok) {
      used[target] = true;
      if (extend(a, b, p, used)) return true;
      used[target] = false;
    }
    p.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) return std::nullopt;
  if (a.ground_size() > 9) throw std::invalid_argument("find_isomorphism: limited to 9 labels");
  std::vector<std::size_t> p;
  std::vector<bool> used(a.ground_size(), false);
  if (extend(a, b, p, used)) return p;
  return std::nullopt;
}

TuttePolynomial::TuttePolynomial(std::size_t max_x, std::size_t max_y)
    : coeffs_(max_x + 1, std::vector<Integer>(max_y + 1, Integer(0))) {}

const Integer& TuttePolynomial::coefficient(std::size_t i, std::size_t j) const {
  static const Integer zero = 0;
  if (i >= coeffs_.size() || j >= coeffs_[i].size()) return zero;
  return coeffs_[i][j];
}

void TuttePolynomial::add(std::size_t i, std::size_t j, const Integer& c) {
  if (i >= coeffs_.size() || j >= coeffs_[i].size()) throw std::out_of_range("Tutte coefficient out of range");
  coeffs_[i][j] += c;
}

Rational TuttePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational total = 0;
  Rational xp = 1;
  for (const auto& row : coeffs_) {
    Rational yp = 1;
    for (const auto& c : row) {
      if (c != 0) total += Rational(c) * xp * yp;
      yp *= y;
    }
    xp *= x;
  }
  return total;
}

std::string TuttePolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
      const Integer& c = coeffs_[i][j];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      const bool bare = i == 0 && j == 0;
      if (c != 1 || bare) os << c.get_str();
      if (c != 1 && !bare) os << '*';
      if (i > 0) os << 'x' << (i > 1 ? "^" + std::to_string(i) : "");
      if (i > 0 && j > 0) os << '*';
      if (j > 0) os << 'y' << (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  if (first) os << '0';
  return os.str();
}

namespace {

using Table = std::vector<std::vector<Integer>>;

class DeletionContraction {
 public:
  explicit DeletionContraction(const Matroid& m)
      : m_(m), rx_(m.rank()), ry_(m.ground_size() - m.rank()) {}

  Table run() { return solve(m_.ground_set(), 0); }

 private:
  Table zero() const { return Table(rx_ + 1, std::vector<Integer>(ry_ + 1, Integer(0))); }

  // Tutte polynomial of the minor on `alive` obtained by contracting
  // `contracted` (and deleting everything else).
  Table solve(LabelSet alive, LabelSet contracted) {
    if (alive == 0) {
      Table t = zero();
      t[0][0] = 1;
      return t;
    }
    const auto key = std::make_pair(alive, contracted);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const LabelSet e = LabelSet{1} << (31 - std::countl_zero(alive));
    const LabelSet rest = alive & ~e;
    const std::size_t rc = m_.rank(contracted);
    auto minor_rank = [&](LabelSet s) { return m_.rank(s | contracted) - rc; };

    Table t = zero();
    if (minor_rank(e) == 0) {
      shift_into(t, solve(rest, contracted), 0, 1);
    } else if (minor_rank(rest) < minor_rank(alive)) {
      shift_into(t, solve(rest, contracted | e), 1, 0);
    } else {
      shift_into(t, solve(rest, contracted), 0, 0);
      shift_into(t, solve(rest, contracted | e), 0, 0);
    }
    memo_.emplace(key, t);
    return t;
  }

  static void shift_into(Table& dst, const Table& src, std::size_t dx, std::size_t dy) {
    for (std::size_t i = 0; i + dx < dst.size(); ++i)
      for (std::size_t j = 0; j + dy < dst[i].size(); ++j)
        if (src[i][j] != 0) dst[i + dx][j + dy] += src[i][j];
  }

  const Matroid& m_;
  std::size_t rx_;
  std::size_t ry_;
  std::map<std::pair<LabelSet, LabelSet>, Table> memo_;
};

}  // namespace

TuttePolynomial tutte_deletion_contraction(const Matroid& m) {
  const Table table = DeletionContraction(m).run();
  TuttePolynomial t(m.rank(), m.ground_size() - m.rank());
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table[i].size(); ++j)
      if (table[i][j] != 0) t.add(i, j, table[i][j]);
  return t;
}

TuttePolynomial tutte_basis_activity(const Matroid& m) {
  const std::size_t n = m.ground_size();
  const std::size_t r = m.rank();
  TuttePolynomial t(r, n - r);
  auto is_basis = [&](LabelSet s) {
    return static_cast<std::size_t>(std::popcount(s)) == r && m.rank(s) == r;
  };
  for (LabelSet b : m.bases()) {
    std::size_t internal = 0;
    std::size_t external = 0;
    for (std::size_t e = 0; e < n; ++e) {
      const LabelSet eb = LabelSet{1} << e;
      bool active = true;
      if (b & eb) {
        // e is the smallest element of its fundamental cocircuit.
        for (std::size_t f = 0; f < e && active; ++f) {
          const LabelSet fb = LabelSet{1} << f;
          if (!(b & fb) && is_basis((b & ~eb) | fb)) active = false;
        }
        if (active) ++internal;
      } else {
        // e is the smallest element of its fundamental circuit.
        for (std::size_t f = 0; f < e && active; ++f) {
          const LabelSet fb = LabelSet{1} << f;
          if ((b & fb) && is_basis((b & ~fb) | eb)) active = false;
        }
        if (active) ++external;
      }
    }
    t.add(internal, external, 1);
  }
  return t;
}

TuttePolynomial tutte(const Matroid& m) {
  coverage::hit(coverage::Op::Tutte);
  TuttePolynomial dc = tutte_deletion_contraction(m);
  TuttePolynomial act = tutte_basis_activity(m);
  if (!(dc == act)) {
    throw std::logic_error("Tutte polynomial mismatch: deletion-contraction gives " + dc.to_string() +
                           ", basis activities give " + act.to_string());
  }
  return dc;
}

Rational tutte_eval(const TuttePolynomial& t, const Rational& x, const Rational& y) {
  coverage::hit(coverage::Op::TutteEval);
  return t.evaluate(x, y);
}

}  // namespace pil
