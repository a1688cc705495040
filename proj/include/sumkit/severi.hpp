#pragma once

// Severi degrees of nodal plane curves with tangency conditions along a line,
// by the recursion obtained from the sum P^2 #_L F_1.

#include "sumkit/rational.hpp"

#include <string>
#include <vector>

namespace sumkit::severi {

/// Multiplicity vector: entry k-1 counts contacts of order k. Trailing zeros
/// are trimmed.
using Profile = std::vector<long>;

Profile make_profile(std::vector<long> counts);
/// Parses "k:c,k:c,..." (empty string is the zero profile).
Profile parse_profile(const std::string& text);
std::string to_string(const Profile& p);

/// sum_k k p_k.
long weighted_sum(const Profile& p);
/// sum_k p_k.
long count(const Profile& p);
Profile unit(int k);

/// Arithmetic genus of a degree-d curve with delta nodes; may be negative
/// for reducible curves.
long genus_of(int d, int delta);

/// Number of point conditions 2d + g - 1 + |beta|. Throws
/// std::invalid_argument unless I alpha + I beta = d.
long point_count(int d, long g, const Profile& alpha, const Profile& beta);

/// Counts of possibly reducible curves (no component equal to the line).
/// Keys violating delta >= 0, r >= 0 or I alpha + I beta = d give 0.
Integer tw_severi_number(int d, int delta, const Profile& alpha, const Profile& beta);

/// Counts of irreducible curves, extracted from tw_severi_number by taking
/// the logarithm of the disconnected generating series.
Integer severi_number(int d, int delta, const Profile& alpha, const Profile& beta);

/// Irreducible rational curves of degree d through 3d - 1 points.
Integer rational_degree(int d);

struct TableRow {
  int d;
  int delta;
  long r;
  Integer value;
};

/// severi_number for 1 <= d <= d_max, 0 <= delta <= min(delta_max, genus),
/// alpha = 0, beta = d e_1, in (d, delta) order.
std::vector<TableRow> severi_table(int d_max, int delta_max);

}  // namespace sumkit::severi
