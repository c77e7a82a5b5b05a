// Acceptance checks, one line per criterion. Exit status is nonzero if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "pil/constructions.hpp"
#include "pil/matroid.hpp"
#include "pil/powerideal.hpp"

using namespace pil;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Every (arrangement, k) with -(rho + 1) <= k <= 0 over the built-in corpus.
template <typename F>
void for_each_builtin_spec(F&& f) {
  for (const auto& [name, a] : builtin_corpus(1)) {
    const auto rho = static_cast<int>(rho_min(a));
    for (int k = -(rho + 1); k <= 0; ++k) f(name, a, k);
  }
}

std::string where(const std::string& name, int k) { return name + " k=" + std::to_string(k); }

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const Arrangement a = k23_arrangement();
  const IdealSpec spec(a, -2);
  PowerIdeal ideal(spec);

  HilbertFunction h = hilbert_function(ideal);
  while (!h.dims.empty() && h.dims.back() == 0) h.dims.pop_back();
  o.require(h.dims == std::vector<std::size_t>{1, 1}, "hilbert function");

  const auto b0 = ideal.inverse_basis(0);
  const auto b1 = ideal.inverse_basis(1);
  const GradedPoly y4 = GradedPoly::monomial(4, Space::Solution, {0, 0, 0, 1});
  o.require(b0.size() == 1 && !b0[0].is_zero(), "degree-0 basis");
  o.require(b1.size() == 1 && rank(Matrix::from_rows({b1[0].coefficients(), y4.coefficients()}, 4)) == 1,
            "degree-1 basis is a multiple of y4");

  const Matrix e123 = Matrix::from_rows({vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})}, 4);
  o.require(ideal.ideal_span(1).basis == row_basis(e123), "degree-1 ideal span");
  o.require(ideal.ideal_span(2).dim() == 10, "degree-2 ideal span");

  const MonomialSpan span = a_monomial_span(spec);
  o.require(span.dims.size() >= 2 && span.dims[0] == 1 && span.dims[1] == 0, "A-monomial dims");
  o.require(!span.spanned, "spanned flag");

  const double s = seconds_since(t0);
  o.require(s < 1.0, "runtime");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s) + " s";
  return o;
}

std::size_t degree1_dim(const Arrangement& a, int k) { return PowerIdeal(IdealSpec(a, k)).inverse_dim(1); }

bool rank_tables_equal(const Matroid& a, const Matroid& b, std::size_t& subsets) {
  subsets = 0;
  if (a.ground_size() != b.ground_size()) return false;
  for (LabelSet s = 0;; ++s) {
    ++subsets;
    if (a.rank(s) != b.rank(s)) return false;
    if (s == a.ground_set()) return true;
  }
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = Clock::now();
  const Arrangement a1 = build_pencil_arrangement(PencilConfig::coplanar_default(3, 1)).arrangement;
  const Arrangement a2 = build_pencil_arrangement(PencilConfig::generic_default(3, 1)).arrangement;
  std::size_t subsets = 0;
  o.require(same_matroid(a1, a2), "same_matroid");
  o.require(rank_tables_equal(matroid_of(a1), matroid_of(a2), subsets) && subsets == 512, "512 subset ranks");
  o.require(degree1_dim(a1, -6) == 1, "coplanar degree-1 dim");
  o.require(degree1_dim(a2, -6) == 0, "generic degree-1 dim");
  o.require(rho_min(a1) == 6 && rho_min(a2) == 6, "rho");

  const auto ext = add_common_generic_plane({a1, a2}, 1);
  o.require(same_matroid(ext[0], ext[1]), "odd same_matroid");
  o.require(rho_min(ext[0]) == 7 && rho_min(ext[1]) == 7, "odd rho");
  o.require(degree1_dim(ext[0], -7) == 1, "odd coplanar degree-1 dim");
  o.require(degree1_dim(ext[1], -7) == 0, "odd generic degree-1 dim");

  const double s = seconds_since(t0);
  o.require(s < 30.0, "runtime");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  const Arrangement a = build_pencil_arrangement(PencilConfig::generic_default(3, 1)).arrangement;
  const std::size_t h = 0;
  const Matroid m = matroid_of(a);
  o.require(!m.is_loop(h) && !m.is_coloop(h), "H is neither loop nor coloop");
  o.require(degree1_dim(a, -6) == 0, "dim (C_A)_1");
  o.require(degree1_dim(contract(a, h).arrangement, -6) == 1, "dim (C_A/H)_1");
  const auto defect = exact_sequence_defect(a, h, -6);
  o.require(defect.size() > 1 && defect[1] != 0, "defect[1] nonzero");
  const auto control = exact_sequence_defect(a, h, -1);
  o.require(std::all_of(control.begin(), control.end(), [](long d) { return d == 0; }), "k=-1 control");

  const double s = seconds_since(t0);
  o.require(s < 60.0, "runtime");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s) + " s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t pairs = 0;
  for_each_builtin_spec([&](const std::string& name, const Arrangement& a, int k) {
    ++pairs;
    o.require(check_c_equals_cprime(a, k), "C != C' at " + where(name, k));
  });
  for (const auto& [name, a] : builtin_corpus(1)) o.require(degree1_component(a).agree, "degree-1 identity on " + name);
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(pairs) + " pairs";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::size_t checks = 0;
  for_each_builtin_spec([&](const std::string& name, const Arrangement& a, int k) {
    PowerIdeal ideal(IdealSpec(a, k));
    const long top = ideal.spec().top_degree();
    for (long d = 0; d <= top + 1; ++d) {
      const auto du = static_cast<unsigned>(d);
      ++checks;
      o.require(ideal.ideal_dim(du) + ideal.inverse_dim(du) == monomial_count(a.ambient_dim(), du),
                "duality at " + where(name, k) + " d=" + std::to_string(d));
    }
    if (top + 1 >= 0) o.require(ideal.inverse_dim(static_cast<unsigned>(top + 1)) == 0, "vanishing at " + where(name, k));
  });
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(checks) + " degrees";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t specs = 0;
  std::size_t total = 0;
  std::size_t members = 0;
  SeededStream stream(1);
  for_each_builtin_spec([&](const std::string& name, const Arrangement& a, int k) {
    ++specs;
    PowerIdeal ideal(IdealSpec(a, k));
    std::size_t hits = 0;
    for (int i = 0; i < 100; ++i) {
      const Vector h = stream.next_nonzero_vector(a.ambient_dim(), 5);
      const auto e = static_cast<unsigned>(static_cast<long>(rho_of(a, h)) + k + 1);
      const GradedPoly p = expand_power(h, e, Space::Operator);
      if (rowspace_contains(ideal.ideal_span(e).basis, p.coefficients())) ++hits;
    }
    total += 100;
    members += hits;
    o.require(hits == 100, std::to_string(hits) + "/100 at " + where(name, k));
  });
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(members) + "/" + std::to_string(total) +
              " memberships over " + std::to_string(specs) + " specs";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& [name, a] : builtin_corpus(1)) {
    const Matroid m = matroid_of(a);
    o.require(tutte_deletion_contraction(m) == tutte_basis_activity(m), "algorithms disagree on " + name);
  }
  const Arrangement k23 = k23_arrangement();
  const TuttePolynomial tk = tutte(matroid_of(k23));
  o.require(tutte_eval(tk, 1, 1) == 12, "T(1,1) of K23");
  o.require(hilbert_function(IdealSpec(k23, -1)).total() == 12, "sum dim C_{-1} of K23");
  const Arrangement u23 = uniform_u23();
  const TuttePolynomial tu = tutte(matroid_of(u23));
  o.require(tutte_eval(tu, 2, 1) == 7, "T(2,1) of U23");
  o.require(hilbert_function(IdealSpec(u23, 0)).total() == 7, "sum dim C_0 of U23");
  return o;
}

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(PIL_CLI_PATH) + " " + args;
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome criterion8(Clock::time_point suite_start) {
  Outcome o;
  const auto t0 = Clock::now();
  const CliRun first = run_cli("verify all -m 3 --seed 1 --json");
  const CliRun second = run_cli("verify all -m 3 --seed 1 --json");
  o.require(first.status == 0, "first run exit " + std::to_string(first.status));
  o.require(second.status == 0, "second run exit " + std::to_string(second.status));
  o.require(!first.out.empty() && first.out == second.out, "reports differ");
  const double verify_s = seconds_since(t0);
  const double suite_s = seconds_since(suite_start);
  o.require(suite_s < 300.0, "suite runtime");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(first.out.size()) + " bytes, verify " +
              std::to_string(verify_s) + " s, suite " + std::to_string(suite_s) + " s";
  return o;
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  const std::array<std::pair<const char*, std::function<Outcome()>>, 8> criteria = {{
      {"prop1 reproduction", criterion1},
      {"prop2 reproduction at m=3", criterion2},
      {"prop3 reproduction at m=3", criterion3},
      {"lemma suite", criterion4},
      {"duality and vanishing", criterion5},
      {"generator-reduction oracle", criterion6},
      {"Tutte cross-checks", criterion7},
      {"determinism", [&] { return criterion8(suite_start); }},
  }};

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.ok) ++failed;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (o.ok ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
