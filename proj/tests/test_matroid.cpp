#include <doctest.h>

#include <bit>
#include <numeric>

#include "pil/constructions.hpp"
#include "pil/matroid.hpp"
#include "test_util.hpp"

using namespace pil;
using pil::test::v;

namespace {

// Graph rank |V| - #components, by union-find over the chosen edges.
std::size_t graph_rank(std::size_t vertices, const std::vector<std::pair<int, int>>& edges, LabelSet s) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::size_t merged = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!(s & (LabelSet{1} << e))) continue;
    const int a = find(edges[e].first);
    const int b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      ++merged;
    }
  }
  return merged;
}

long det(std::vector<std::vector<long>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * a[0][c] * det(minor);
  }
  return total;
}

Arrangement random_arrangement(test::Rng& rng) {
  const auto ell = static_cast<std::size_t>(rng.integer(1, 3));
  const auto n = static_cast<std::size_t>(rng.integer(1, 7));
  std::vector<Vector> forms;
  for (std::size_t i = 0; i < n; ++i) {
    // Small entries so that parallel pairs and dependencies show up.
    forms.push_back(rng.nonzero_vector(ell, 1));
  }
  return Arrangement(ell, forms, static_cast<std::size_t>(rng.integer(0, 1)));
}

}  // namespace

TEST_CASE("matroid construction errors") {
  CHECK_THROWS_AS(Matroid(2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid(17, {}), std::invalid_argument);
}

TEST_CASE("uniform matroid U23") {
  const Matroid m = matroid_of(uniform_u23());
  for (LabelSet s = 0; s < 8; ++s) CHECK(m.rank(s) == std::min<std::size_t>(std::popcount(s), 2));
  CHECK(m.bases().size() == 3);
  CHECK(m.independent_set_count() == 7);
}

TEST_CASE("K23 arrangement is the graphic matroid of K23") {
  // Vertex 0 and vertex 4 are both joined to 1, 2, 3: y_i is edge (0, i) and
  // y_i - y_4 is edge (i, 4).
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  const Matroid m = matroid_of(k23_arrangement());
  for (LabelSet s = 0; s < 64; ++s) CHECK(m.rank(s) == graph_rank(5, edges, s));
}

TEST_CASE("parallel forms") {
  const Matroid m = matroid_of(Arrangement(2, {v({1, 2}), v({-2, -4}), v({0, 1})}));
  CHECK(m.rank(0b011) == 1);
  CHECK(m.rank(0b101) == 2);
}

TEST_CASE("loops occupy the high labels") {
  const Matroid m = matroid_of(Arrangement(2, {v({1, 0}), v({0, 1})}, 2));
  CHECK(m.ground_size() == 4);
  CHECK(m.is_loop(2));
  CHECK(m.is_loop(3));
  CHECK_FALSE(m.is_loop(0));
  CHECK(m.is_coloop(0));
  CHECK(m.rank() == 2);
}

TEST_CASE("same_matroid") {
  const Arrangement u = uniform_u23();
  CHECK(same_matroid(u, u));
  CHECK_THROWS_AS(same_matroid(u, delete_form(u, 0)), std::invalid_argument);
  const Arrangement parallel(2, {v({1, 0}), v({0, 1}), v({2, 0})});
  CHECK_FALSE(same_matroid(u, parallel));
  CHECK(same_matroid(u, parallel) == same_matroid(parallel, u));

  const auto a1 = build_pencil_arrangement(PencilConfig::coplanar_default(3, 1)).arrangement;
  const auto a2 = build_pencil_arrangement(PencilConfig::generic_default(3, 1)).arrangement;
  CHECK(matroid_of(a1).ground_set() == 511);
  CHECK(same_matroid(a1, a2));
  CHECK(same_matroid(a2, a1));
}

TEST_CASE("find_isomorphism") {
  const Arrangement a = k23_arrangement();
  auto forms = a.forms();
  std::rotate(forms.begin(), forms.begin() + 2, forms.end());
  const Arrangement b(4, forms);
  const auto p = find_isomorphism(matroid_of(a), matroid_of(b));
  REQUIRE(p.has_value());
  const Matroid ma = matroid_of(a);
  const Matroid mb = matroid_of(b);
  for (LabelSet s = 0; s < 64; ++s) {
    LabelSet t = 0;
    for (std::size_t i = 0; i < 6; ++i)
      if (s & (LabelSet{1} << i)) t |= LabelSet{1} << (*p)[i];
    CHECK(ma.rank(s) == mb.rank(t));
  }
  const Arrangement parallel(2, {v({1, 0}), v({0, 1}), v({2, 0})});
  CHECK_FALSE(find_isomorphism(matroid_of(uniform_u23()), matroid_of(parallel)).has_value());
  CHECK_FALSE(find_isomorphism(matroid_of(uniform_u23()), matroid_of(a)).has_value());
  const auto pencil = build_pencil_arrangement(PencilConfig::generic_default(4, 1)).arrangement;
  CHECK_THROWS_AS(find_isomorphism(matroid_of(pencil), matroid_of(pencil)), std::invalid_argument);
}

TEST_CASE("Tutte polynomial examples") {
  const TuttePolynomial coloop = tutte(matroid_of(Arrangement(1, {v({1})})));
  CHECK(coloop.to_string() == "x");
  const TuttePolynomial loop = tutte(matroid_of(Arrangement(1, {}, 1)));
  CHECK(loop.to_string() == "y");
  CHECK(tutte(matroid_of(Arrangement(1, {}))).to_string() == "1");

  const TuttePolynomial u = tutte(matroid_of(uniform_u23()));
  CHECK(u.to_string() == "x^2 + x + y");
  CHECK(tutte_eval(u, 1, 1) == 3);
  CHECK(tutte_eval(u, 2, 1) == 7);

  const TuttePolynomial k = tutte(matroid_of(k23_arrangement()));
  CHECK(k.to_string() == "x^4 + 2*x^3 + 3*x^2 + x + 3*x*y + y + y^2");
}

TEST_CASE("K23 spanning trees by the matrix-tree theorem") {
  // Laplacian of K23 with vertex 4 removed.
  const std::vector<std::vector<long>> reduced = {
      {3, -1, -1, -1}, {-1, 2, 0, 0}, {-1, 0, 2, 0}, {-1, 0, 0, 2}};
  const long trees = det(reduced);
  CHECK(trees == 12);
  CHECK(tutte_eval(tutte(matroid_of(k23_arrangement())), 1, 1) == trees);
}

TEST_CASE("Tutte algorithms agree and count correctly") {
  test::Rng rng(31);
  std::vector<Arrangement> cases;
  for (const auto& [name, a] : builtin_corpus(1)) cases.push_back(a);
  for (int i = 0; i < 40; ++i) cases.push_back(random_arrangement(rng));
  for (const auto& a : cases) {
    const Matroid m = matroid_of(a);
    const TuttePolynomial dc = tutte_deletion_contraction(m);
    const TuttePolynomial act = tutte_basis_activity(m);
    CHECK(dc == act);
    CHECK(dc.evaluate(1, 1) == Rational(m.bases().size()));
    CHECK(dc.evaluate(2, 1) == Rational(m.independent_set_count()));
    CHECK(dc.evaluate(2, 2) == Rational(Integer(1) << m.ground_size()));
  }
}

TEST_CASE("rank function is submodular") {
  test::Rng rng(17);
  for (const auto& [name, a] : builtin_corpus(1)) {
    const Matroid m = matroid_of(a);
    for (int i = 0; i < 200; ++i) {
      const auto s = static_cast<LabelSet>(rng.integer(0, m.ground_set()));
      const auto t = static_cast<LabelSet>(rng.integer(0, m.ground_set()));
      CHECK(m.rank(s | t) + m.rank(s & t) <= m.rank(s) + m.rank(t));
    }
  }
}

TEST_CASE("Tutte coefficient access") {
  TuttePolynomial t(1, 1);
  t.add(1, 0, 2);
  CHECK(t.coefficient(1, 0) == 2);
  CHECK(t.coefficient(5, 5) == 0);
  CHECK_THROWS_AS(t.add(2, 0, 1), std::out_of_range);
  CHECK(t.to_string() == "2*x");
  CHECK(TuttePolynomial(0, 0).to_string() == "0");
}
