#include "pil/constructions.hpp"
#include "pil/coverage.hpp"

#include <algorithm>
#include <bit>

#include "pil/matroid.hpp"

namespace pil {

long SeededStream::next_int(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Vector SeededStream::next_nonzero_vector(std::size_t len, long bound) {
  for (;;) {
    Vector v;
    for (std::size_t i = 0; i < len; ++i) v.emplace_back(next_int(-bound, bound));
    if (!is_zero(v)) return v;
  }
}

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool proportional(const Vector& a, const Vector& b) {
  return rank(Matrix::from_rows({a, b}, a.size())) < 2;
}

bool by_string(const Matrix& x, const Matrix& y) { return x.to_string() < y.to_string(); }

std::vector<Matrix> large_strata_bases(const Arrangement& a) {
  const auto all = strata(a);
  std::size_t best = 0;
  for (const auto& s : all) best = std::max(best, s.multiplicity);
  std::vector<Matrix> out;
  for (const auto& s : all)
    if (s.multiplicity == best) out.push_back(s.basis);
  std::sort(out.begin(), out.end(), by_string);
  return out;
}

void validate(const PencilConfig& cfg) {
  if (cfg.directions.size() != 3) throw ConstructionError("pencil config needs exactly three directions");
  for (const auto& d : cfg.directions)
    if (d.size() != 3 || is_zero(d)) throw ConstructionError("pencil directions must be nonzero vectors in Q^3");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (proportional(cfg.directions[i], cfg.directions[j])) {
        throw ConstructionError("pencil directions must be pairwise independent");
      }
  const std::size_t r = rank(Matrix::from_rows(cfg.directions, 3));
  if (r != (cfg.coplanar ? 2u : 3u)) {
    throw ConstructionError(std::string("directions have rank ") + std::to_string(r) + " but coplanar flag is " +
                            (cfg.coplanar ? "set" : "clear"));
  }
  if (cfg.m == 0) throw ConstructionError("pencils need at least one plane");
}

}  // namespace

Arrangement k23_arrangement() {
  return Arrangement(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({1, 0, 0, -1}),
                         vec({0, 1, 0, -1}), vec({0, 0, 1, -1})});
}

Arrangement uniform_u23() { return Arrangement(2, {vec({1, 0}), vec({0, 1}), vec({1, 1})}); }

PencilConfig PencilConfig::coplanar_default(std::size_t m, std::uint64_t seed) {
  return {{vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 0})}, m, true, seed};
}

PencilConfig PencilConfig::generic_default(std::size_t m, std::uint64_t seed) {
  return {{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, m, false, seed};
}

bool has_generic_pencil_matroid(const Arrangement& a, std::size_t m) {
  if (a.size() != 3 * m || a.loops() != 0) return false;
  const Matroid mat = matroid_of(a);
  const LabelSet pencil_mask = static_cast<LabelSet>((LabelSet{1} << m) - 1);
  for (LabelSet s = 0;; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    std::size_t touched = 0;
    for (std::size_t p = 0; p < 3; ++p)
      if (s & (pencil_mask << (p * m))) ++touched;
    const std::size_t expected = touched <= 1 ? std::min<std::size_t>(size, 2) : std::min<std::size_t>(size, 3);
    if (mat.rank(s) != expected) return false;
    if (s == mat.ground_set()) break;
  }
  return true;
}

PencilArrangement build_pencil_arrangement(const PencilConfig& cfg) {
  coverage::hit(coverage::Op::BuildPencilArrangement);
  validate(cfg);
  const std::size_t m = cfg.m;
  std::vector<std::vector<Vector>> pencil_bases;
  std::vector<Matrix> axes;
  for (const auto& d : cfg.directions) {
    pencil_bases.push_back(kernel_basis(Matrix::from_rows({d}, 3)));
    axes.push_back(row_basis(Matrix::from_rows({d}, 3)));
  }

  // Wider range for larger pencils, otherwise collisions dominate the draws.
  const long coefficient_bound = std::max<long>(4, 3 * static_cast<long>(m));
  SeededStream stream(cfg.seed);
  for (int attempt = 1; attempt <= kRedrawBudget; ++attempt) {
    std::vector<Vector> forms;
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t j = 0; j < m; ++j) {
        const Vector c = stream.next_nonzero_vector(2, coefficient_bound);
        Vector f(3);
        for (std::size_t t = 0; t < 3; ++t) f[t] = c[0] * pencil_bases[p][0][t] + c[1] * pencil_bases[p][1][t];
        forms.push_back(std::move(f));
      }
    }

    bool distinct = true;
    for (std::size_t i = 0; i < forms.size() && distinct; ++i)
      for (std::size_t j = i + 1; j < forms.size() && distinct; ++j) distinct = !proportional(forms[i], forms[j]);
    if (!distinct) continue;

    Arrangement a(3, std::move(forms));
    if (rho_min(a) != 2 * m) continue;

    const auto large = large_strata_bases(a);
    const bool axes_large = std::all_of(axes.begin(), axes.end(), [&](const Matrix& ax) {
      return std::find(large.begin(), large.end(), ax) != large.end();
    });
    if (!axes_large) continue;
    const bool exact = large.size() == 3;
    if (m >= 3 && !exact) continue;
    if (!has_generic_pencil_matroid(a, m)) continue;

    return {std::move(a), cfg, attempt, exact};
  }
  throw ConstructionError("no generic pencil arrangement with m = " + std::to_string(m) + " found in " +
                          std::to_string(kRedrawBudget) + " draws");
}

std::vector<Arrangement> add_common_generic_plane(const std::vector<Arrangement>& arrangements,
                                                  std::uint64_t seed) {
  if (arrangements.empty()) throw ConstructionError("no arrangements to extend");
  const std::size_t ell = arrangements.front().ambient_dim();
  std::vector<std::size_t> rhos;
  std::vector<std::vector<Matrix>> larges;
  for (const auto& a : arrangements) {
    if (a.ambient_dim() != ell) throw ConstructionError("arrangements live in different dimensions");
    rhos.push_back(rho_min(a));
    larges.push_back(large_strata_bases(a));
  }

  // Offset the seed so the plane is not correlated with the pencil draws.
  SeededStream stream(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 1; attempt <= kRedrawBudget; ++attempt) {
    const Vector g = stream.next_nonzero_vector(ell, 5);
    std::vector<Arrangement> out;
    bool ok = true;
    for (std::size_t i = 0; i < arrangements.size() && ok; ++i) {
      const auto& a = arrangements[i];
      ok = std::none_of(a.forms().begin(), a.forms().end(), [&](const Vector& l) { return proportional(l, g); });
      if (!ok) break;
      auto forms = a.forms();
      forms.push_back(g);
      Arrangement ext(ell, std::move(forms), a.loops());
      // With pairwise-only multiplicities (m = 2) the new plane adds large
      // lines of its own, so only require the old ones to survive.
      const auto now_large = large_strata_bases(ext);
      ok = rho_min(ext) == rhos[i] + 1 &&
           std::includes(now_large.begin(), now_large.end(), larges[i].begin(), larges[i].end(), by_string);
      out.push_back(std::move(ext));
    }
    if (!ok) continue;
    const Matroid first = matroid_of(out.front());
    if (!std::all_of(out.begin(), out.end(), [&](const Arrangement& e) { return matroid_of(e) == first; })) continue;
    return out;
  }
  throw ConstructionError("no common generic plane found in " + std::to_string(kRedrawBudget) + " draws");
}

Matrix random_invertible(std::size_t ell, SeededStream& stream) {
  for (;;) {
    Matrix g(ell, ell);
    for (std::size_t r = 0; r < ell; ++r)
      for (std::size_t c = 0; c < ell; ++c) g(r, c) = stream.next_int(-3, 3);
    if (rank(g) == ell) return g;
  }
}

std::vector<NamedArrangement> builtin_corpus(std::uint64_t seed) {
  std::vector<NamedArrangement> out;
  out.push_back({"k23", k23_arrangement()});
  out.push_back({"u23", uniform_u23()});
  for (std::size_t m : {2u, 3u}) {
    out.push_back({"pencil_coplanar_m" + std::to_string(m),
                   build_pencil_arrangement(PencilConfig::coplanar_default(m, seed)).arrangement});
    out.push_back({"pencil_generic_m" + std::to_string(m),
                   build_pencil_arrangement(PencilConfig::generic_default(m, seed)).arrangement});
  }
  return out;
}

}  // namespace pil
