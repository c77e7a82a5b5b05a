// pil: power ideals and inverse systems of hyperplane arrangements.
//
// Exit status: 0 success, 1 verification failure, 2 input error.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pil/arrangement_io.hpp"
#include "pil/constructions.hpp"
#include "pil/matroid.hpp"
#include "pil/powerideal.hpp"
#include "pil/scenarios.hpp"

namespace {

using pil::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

struct GlobalFlags {
  bool json = false;
  bool timing = false;
};

// One structured document per invocation, same shape as scenario reports.
json command_document(const std::string& name, json inputs, json results, double ms, bool timing) {
  return {{"scenario", name},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"expected", json::object()},
          {"provenance", json::object()},
          {"verdict", "pass"},
          {"failures", json::array()},
          {"elapsed_ms", timing ? json(ms) : json(nullptr)}};
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::string join(const json& array) {
  std::string out;
  for (const auto& v : array) {
    if (!out.empty()) out += ' ';
    out += v.is_string() ? v.get<std::string>() : v.dump();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power ideals, inverse systems and Tutte invariants of central hyperplane arrangements"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit one JSON document instead of text");
  app.add_flag("--timing", flags.timing, "Fill in elapsed_ms (reports are then no longer byte-stable)");

  std::string file;
  int k = 0;
  unsigned degree = 0;
  bool lines_only = false;
  std::size_t hyperplane = 0;
  std::vector<std::string> eval_point;
  std::string scenario;
  std::size_t m = 3;
  std::uint64_t seed = 1;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the inverse system C_{A,k}");
  hilbert->add_option("--file", file, "Arrangement file")->required();
  hilbert->add_option("-k", k, "Power ideal parameter k")->required();
  hilbert->add_flag("--lines-only", lines_only, "Use generators from Lines(A) only (C'_{A,k})");

  auto* basis = app.add_subcommand("basis", "Basis of the degree-d part of C_{A,k}");
  basis->add_option("--file", file, "Arrangement file")->required();
  basis->add_option("-k", k, "Power ideal parameter k")->required();
  basis->add_option("-d", degree, "Degree")->required();

  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial of the arrangement's matroid");
  tutte->add_option("--file", file, "Arrangement file")->required();
  tutte->add_option("--eval", eval_point, "Evaluate at X Y")->expected(2);

  auto* rho = app.add_subcommand("rho", "rho(A) and the large span");
  rho->add_option("--file", file, "Arrangement file")->required();

  auto* lines = app.add_subcommand("lines", "Lines of intersection with their multiplicities");
  lines->add_option("--file", file, "Arrangement file")->required();

  auto* defect = app.add_subcommand("defect", "Dimension defect of the deletion-contraction sequence");
  defect->add_option("--file", file, "Arrangement file")->required();
  defect->add_option("-k", k, "Power ideal parameter k")->required();
  defect->add_option("--hyperplane", hyperplane, "Label of the hyperplane H")->required();

  auto* verify = app.add_subcommand("verify", "Run verification scenarios");
  verify->add_option("scenario", scenario, "prop1 | prop2 | prop3 | lemmas | all")
      ->required()
      ->check(CLI::IsMember({"prop1", "prop2", "prop3", "lemmas", "all"}));
  verify->add_option("-m", m, "Planes per pencil");
  verify->add_option("--seed", seed, "Seed for generic constructions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (verify->parsed()) {
      pil::ScenarioOptions opts{m, seed, flags.timing};
      const pil::ScenarioReport report = pil::run_scenario(scenario, opts);
      if (flags.json) {
        std::cout << report.to_json().dump(2) << '\n';
      } else {
        std::cout << report.to_text();
      }
      return report.passed() ? kExitOk : kExitVerificationFailed;
    }

    const pil::Arrangement a = pil::load_arrangement(file);
    json inputs = {{"file", file}, {"arrangement", pil::json_of(a)}};
    json results;
    std::string name;
    std::string text;

    if (hilbert->parsed()) {
      name = "hilbert";
      const auto variant = lines_only ? pil::Variant::Lines : pil::Variant::Full;
      const pil::HilbertFunction h = pil::hilbert_function(pil::IdealSpec(a, k, variant));
      inputs["k"] = k;
      inputs["variant"] = pil::variant_name(variant);
      results = {{"hilbert_function", h.dims}, {"total", h.total()}};
      text = "hilbert function: " + join(results["hilbert_function"]) + "\ntotal: " + std::to_string(h.total()) + "\n";
    } else if (basis->parsed()) {
      name = "basis";
      json polys = json::array();
      for (const auto& f : pil::inverse_system_basis(pil::IdealSpec(a, k), degree)) polys.push_back(f.to_string());
      inputs["k"] = k;
      inputs["degree"] = degree;
      results = {{"basis", polys}, {"dim", polys.size()}};
      text = "dim " + std::to_string(polys.size()) + "\n";
      for (const auto& p : polys) text += "  " + p.get<std::string>() + "\n";
    } else if (tutte->parsed()) {
      name = "tutte";
      const pil::Matroid mat = pil::matroid_of(a);
      const pil::TuttePolynomial t = pil::tutte(mat);
      json coeffs = json::array();
      for (const auto& row : t.coefficients()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(c.get_str());
        coeffs.push_back(r);
      }
      results = {{"polynomial", t.to_string()}, {"coefficients", coeffs}, {"rank", mat.rank()}};
      text = "T(x, y) = " + t.to_string() + "\n";
      if (!eval_point.empty()) {
        const pil::Rational x = pil::parse_rational(eval_point[0]);
        const pil::Rational y = pil::parse_rational(eval_point[1]);
        const pil::Rational v = pil::tutte_eval(t, x, y);
        inputs["eval"] = {x.get_str(), y.get_str()};
        results["value"] = v.get_str();
        text += "T(" + x.get_str() + ", " + y.get_str() + ") = " + v.get_str() + "\n";
      }
    } else if (rho->parsed()) {
      name = "rho";
      const pil::Matrix large = pil::large_span(a);
      results = {{"rho", pil::rho_min(a)}, {"large_span", pil::json_of(large)}, {"large_span_dim", large.rows()}};
      text = "rho: " + std::to_string(pil::rho_min(a)) + "\nlarge span dim: " + std::to_string(large.rows()) + "\n";
    } else if (lines->parsed()) {
      name = "lines";
      json ls = json::array();
      text.clear();
      for (const auto& s : pil::lines(a)) {
        const pil::Vector dir = s.direction();
        ls.push_back({{"direction", pil::json_of(dir)}, {"multiplicity", s.multiplicity}, {"rho", a.size() - s.multiplicity},
                      {"containing", s.containing}});
        text += "  " + join(pil::json_of(dir)) + "  m=" + std::to_string(s.multiplicity) + "\n";
      }
      results = {{"lines", ls}, {"count", ls.size()}};
      text = std::to_string(ls.size()) + " lines\n" + text;
    } else if (defect->parsed()) {
      name = "defect";
      const auto d = pil::exact_sequence_defect(a, hyperplane, k);
      inputs["k"] = k;
      inputs["hyperplane"] = hyperplane;
      bool exact = true;
      for (long v : d) exact = exact && v == 0;
      results = {{"defect", d}, {"all_zero", exact}};
      text = "defect: " + join(results["defect"]) + "\n";
    }

    if (flags.json) {
      std::cout << command_document(name, inputs, results, ms_since(t0), flags.timing).dump(2) << '\n';
    } else {
      std::cout << text;
    }
    return kExitOk;
  } catch (const pil::ParseError& e) {
    std::cerr << "pil: " << file << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error, out_of_range: bad input for the request.
    std::cerr << "pil: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "pil: " << e.what() << '\n';
    return kExitInputError;
  }
}
