#pragma once

// Fixed example arrangements and seeded "generic" constructions. Genericity
// is never assumed: every random draw is checked and redrawn on failure.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "pil/arrangement.hpp"
#include "pil/linalg.hpp"

namespace pil {

inline constexpr int kRedrawBudget = 64;

/// Deterministic stream of small integers. Uses the raw mt19937_64 output so
/// that draws are identical across standard libraries.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  long next_int(long lo, long hi);
  /// Nonzero vector with entries in [-bound, bound].
  Vector next_nonzero_vector(std::size_t len, long bound);
  std::size_t next_index(std::size_t n) { return static_cast<std::size_t>(next_int(0, static_cast<long>(n) - 1)); }

 private:
  std::mt19937_64 engine_;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// y1, y2, y3, y1 - y4, y2 - y4, y3 - y4 in dimension 4 (the graphic
/// arrangement of K_{2,3}).
Arrangement k23_arrangement();

/// Three pairwise independent lines in the plane: y1, y2, y1 + y2.
Arrangement uniform_u23();

struct PencilConfig {
  std::vector<Vector> directions;  // three vectors in Q^3
  std::size_t m = 3;               // planes per pencil
  bool coplanar = false;
  std::uint64_t seed = 1;

  static PencilConfig coplanar_default(std::size_t m, std::uint64_t seed);
  static PencilConfig generic_default(std::size_t m, std::uint64_t seed);
};

struct PencilArrangement {
  Arrangement arrangement;
  PencilConfig config;
  int attempts = 0;
  /// True when the maximal strata are exactly the three pencil axes. Always
  /// true for m >= 3; for m = 2 the planes from different pencils meet in
  /// further lines of the same multiplicity.
  bool axes_are_exactly_large = false;
};

/// 3m planes; planes 0..m-1 contain directions[0], m..2m-1 contain
/// directions[1], and so on. Post-checks (redrawn up to kRedrawBudget times):
/// rho = 2m; the pencil axes are large (and for m >= 3 the only large
/// strata); forms pairwise non-proportional; the matroid is that of three
/// generic pencils. Throws ConstructionError when the config is invalid or
/// no draw passes.
PencilArrangement build_pencil_arrangement(const PencilConfig& cfg);

/// The rank function of three generic rank-2 pencils of m planes in Q^3.
bool has_generic_pencil_matroid(const Arrangement& a, std::size_t m);

/// Draws one plane g and appends it to every arrangement, checking that rho
/// rises by one, the old large strata stay large, and all extended matroids
/// stay labeled-equal.
std::vector<Arrangement> add_common_generic_plane(const std::vector<Arrangement>& arrangements,
                                                  std::uint64_t seed);

/// Random invertible ell x ell integer matrix.
Matrix random_invertible(std::size_t ell, SeededStream& stream);

struct NamedArrangement {
  std::string name;
  Arrangement arrangement;
};

/// K_{2,3}, U_{2,3}, and the coplanar/generic pencil pairs at m = 2 and 3.
std::vector<NamedArrangement> builtin_corpus(std::uint64_t seed);

}  // namespace pil
