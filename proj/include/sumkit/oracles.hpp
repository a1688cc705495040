#pragma once

// Brute-force ground truth for the recursion engines. Nothing here depends on
// the series or sum-engine code it is used to check.

#include "sumkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace sumkit::oracles {

/// Sum of the divisors of n by trial division; n >= 1.
Integer divisor_sum(long n);

class Permutation {
 public:
  explicit Permutation(std::size_t n);  // identity
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }

  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  /// Swaps the images of i and j: composes with the transposition on the left.
  void apply_transposition(std::size_t i, std::size_t j);

  /// Cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> image_;
};

/// (1/d!) #{transposition tuples with product of cycle type alpha generating
/// a transitive subgroup}; the tuple length is the Riemann-Hurwitz branch
/// count 2d + 2g - 2 - sum (a - 1). Zero when that count is negative.
/// Requires 1 <= d <= 6 and alpha a partition of d (any order).
Rational hurwitz_oracle(int d, int g, const std::vector<int>& alpha);

/// Rational plane curves of degree d through 3d - 1 points, by the
/// associativity recursion; d >= 1.
Integer kontsevich_oracle(int d);

}  // namespace sumkit::oracles
