#pragma once

// Connected Hurwitz numbers of P^1 with one arbitrary branch point and r
// simple ones, generated from the cut-join equation
//   dG/du = 1/2 sum_{i,j} ( ij lambda^2 z_{i+j} (d_i d_j G + d_i G d_j G)
//                           + (i+j) z_i z_j d_{i+j} G )
// for G = sum N z^m u^r/r! t^d lambda^{2g-2}, where N is 1/d! times the
// number of transitive transposition tuples. Under the z^m/m! normalization
// the same equation holds for the coefficients m! N.

#include "sumkit/rational.hpp"
#include "sumkit/series.hpp"

#include <vector>

namespace sumkit::hurwitz {

using Partition = std::vector<int>;

/// Partitions of d with parts in descending order, in lexicographically
/// descending order.
std::vector<Partition> partitions(int d);

/// 2d + 2g - 2 - sum (a - 1); may be negative (no such covers).
long branch_count(int d, int g, const Partition& alpha);

/// Zero for invalid keys (alpha not a partition of d, g < 0, r < 0).
Rational hurwitz_number(int d, int g, const Partition& alpha);

/// The context {t (weight 1), u, lambda (Laurent), z_1..z_dmax}.
ContextPtr generating_context(int d_max);

/// G through t^d_max and u^r_max, assembled from hurwitz_number.
Series generating_series(int d_max, int r_max);

/// dG/du minus the cut-join operator applied to G, keeping only the u^k
/// terms with k < r_max (the ones G determines completely). Zero when the
/// numbers satisfy the equation.
Series cut_join_residual(int d_max, int r_max);

}  // namespace sumkit::hurwitz
