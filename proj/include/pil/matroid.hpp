#pragma once

// The matroid of an arrangement, given by its full rank table, and the Tutte
// polynomial computed by deletion-contraction and by basis activities.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pil/arrangement.hpp"
#include "pil/linalg.hpp"

namespace pil {

using LabelSet = std::uint32_t;

inline constexpr std::size_t kMaxGroundSize = 16;

class Matroid {
 public:
  /// ranks[S] is the rank of subset S (bitmask); ranks.size() must be
  /// 2^ground_size.
  Matroid(std::size_t ground_size, std::vector<std::uint8_t> ranks);

  std::size_t ground_size() const { return ground_; }
  LabelSet ground_set() const { return static_cast<LabelSet>((std::uint64_t{1} << ground_) - 1); }
  std::size_t rank(LabelSet s) const { return ranks_[s]; }
  std::size_t rank() const { return ranks_[ground_set()]; }

  bool is_loop(std::size_t e) const { return rank(LabelSet{1} << e) == 0; }
  bool is_coloop(std::size_t e) const {
    return rank(ground_set() & ~(LabelSet{1} << e)) < rank();
  }

  std::vector<LabelSet> bases() const;
  std::size_t independent_set_count() const;

  bool operator==(const Matroid&) const = default;

 private:
  std::size_t ground_;
  std::vector<std::uint8_t> ranks_;
};

/// Labels 0..n-1 are the forms in order; labels n..n+loops-1 are the loops.
Matroid matroid_of(const Arrangement& a);

/// Labeled equality of rank functions. Throws std::invalid_argument when the
/// ground sets differ in size.
bool same_matroid(const Matroid& a, const Matroid& b);
bool same_matroid(const Arrangement& a, const Arrangement& b);

/// Brute-force search for a label permutation p with rank_b(p(S)) = rank_a(S).
/// Limited to ground sets of at most 9 elements.
std::optional<std::vector<std::size_t>> find_isomorphism(const Matroid& a, const Matroid& b);

class TuttePolynomial {
 public:
  TuttePolynomial() = default;
  TuttePolynomial(std::size_t max_x, std::size_t max_y);

  const Integer& coefficient(std::size_t i, std::size_t j) const;
  void add(std::size_t i, std::size_t j, const Integer& c);
  std::size_t x_degree_bound() const { return coeffs_.size(); }
  std::size_t y_degree_bound() const { return coeffs_.empty() ? 0 : coeffs_[0].size(); }

  /// Dense coefficient table, c[i][j] multiplies x^i y^j.
  const std::vector<std::vector<Integer>>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x, const Rational& y) const;
  std::string to_string() const;

  bool operator==(const TuttePolynomial&) const = default;

 private:
  std::vector<std::vector<Integer>> coeffs_;
};

TuttePolynomial tutte_deletion_contraction(const Matroid& m);
TuttePolynomial tutte_basis_activity(const Matroid& m);

/// Both algorithms; throws std::logic_error if they disagree.
TuttePolynomial tutte(const Matroid& m);

Rational tutte_eval(const TuttePolynomial& t, const Rational& x, const Rational& y);

}  // namespace pil
