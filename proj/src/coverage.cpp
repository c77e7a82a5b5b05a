#include "pil/coverage.hpp"

#include <array>
#include <atomic>

namespace pil::coverage {

namespace {

constexpr auto kCount = static_cast<std::size_t>(Op::Count_);
std::array<std::atomic<bool>, kCount> g_hits{};

constexpr std::array<const char*, kCount> kNames = {
    "rref",           "kernel_basis",        "rowspace_contains",      "subspace_sum",
    "monomial_count", "expand_power",        "apply_diff",             "pairing_matrix",
    "rho_of",         "strata",              "lines",                  "rho_min",
    "large_span",     "delete",              "contract",               "matroid_of",
    "same_matroid",   "tutte",               "tutte_eval",             "generators",
    "ideal_degree_span", "inverse_system_basis", "hilbert_function",   "a_monomial_span",
    "check_c_equals_cprime", "degree1_component", "exact_sequence_defect", "parse_arrangement",
    "build_pencil_arrangement",
};

}  // namespace

void hit(Op op) { g_hits[static_cast<std::size_t>(op)].store(true, std::memory_order_relaxed); }

void reset() {
  for (auto& h : g_hits) h.store(false, std::memory_order_relaxed);
}

std::vector<std::string> missing() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kCount; ++i)
    if (!g_hits[i].load(std::memory_order_relaxed)) out.emplace_back(kNames[i]);
  return out;
}

const char* name(Op op) { return kNames[static_cast<std::size_t>(op)]; }

}  // namespace pil::coverage
