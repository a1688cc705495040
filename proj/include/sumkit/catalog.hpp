#pragma once

// Closed-form relative invariants of the simple spaces used as building
// blocks: P^1 relative to two points, the torus, T^2 x S^2 and the Hirzebruch
// surfaces F_n relative to their zero and infinity sections.

#include "sumkit/contact.hpp"
#include "sumkit/series.hpp"
#include "sumkit/sum_engine.hpp"

#include <string>
#include <vector>

namespace sumkit::catalog {

/// P^1 relative to {0, inf}: classes (d), both ends of degree d, V a point.
GeometryPtr p1_geometry();

/// Connected count of degree-d genus-g covers with contact s over 0 and s'
/// over inf.
Rational p1_rel(int d, int g, const ContactSeq& s, const ContactSeq& s2);
/// Same, with one extra simple branch point at a fixed location.
Rational p1_rel_branch(int d, int g, const ContactSeq& s, const ContactSeq& s2);

/// Connected relative series of p1_rel through degree cutoff. With
/// with_branch the tag "b" terms of p1_rel_branch are included.
RelSeries p1_series(int cutoff, bool with_branch = false);

/// The variable context {t} (weight 1) shared by the fiber-class series.
ContextPtr fiber_context();

/// sum_{n <= cutoff} sigma(n) t^n.
Series torus_rel_series(int cutoff);

enum class T2S2Family { DfAbsolute, DfRelF, SdfAbsolute, SdfRelF };

/// 2G, G, 2G', G' for the four families.
Series t2s2_series(T2S2Family family, int cutoff);
/// Whether the two-fiber relative series is supported at the zero rim-torus
/// class; false means the series vanishes identically.
bool t2s2_two_fiber_supported(T2S2Family family);
T2S2Family parse_t2s2_family(const std::string& name);
std::string to_string(T2S2Family family);

enum class RuledConstraint { None, Point };

/// F_n relative to S + E: classes (a, b) = aS + bF, end 0 meets E with
/// degree b, end 1 meets S with degree b + n a. Basis {point, fundamental}.
GeometryPtr ruled_geometry(int n);

/// Contact index conventions on S, E = P^1.
inline constexpr int kPointClass = 0;
inline constexpr int kFundamentalClass = 1;

struct RuledValue {
  Rational value;
  /// The value multiplies the divisor-class tensor S(x)1 + 1(x)E.
  bool divisor_tensor = false;
};

/// Ignores the class indices of the contacts (the tensor flag carries that
/// information). Throws std::invalid_argument when the degrees of s, s' do
/// not match b and b + n a.
RuledValue ruled_rel(int n, int a, int b, int g, const ContactSeq& s, const ContactSeq& s2,
                     RuledConstraint constraint);

/// ruled_rel paired against the contacts' class indices: the tensor
/// S(x)1 + 1(x)E contributes on a (point, fundamental) or (fundamental, point)
/// pair; the point-constrained values need every contact of case a=1 fixed
/// and both contacts of case a=0 moving.
Rational ruled_rel_indexed(int n, int a, int b, int g, const ContactSeq& s, const ContactSeq& s2,
                           RuledConstraint constraint);

/// Connected relative series of F_n through grading cutoff; point-constrained
/// terms carry tag "p".
RelSeries ruled_series(int n, int cutoff, bool with_point);

/// True (possibly nonzero) iff 2a + g <= 1 + deg_alpha.
bool vanishing_filter(int a, int g, int deg_alpha);

struct CatalogEntry {
  std::string name;
  std::vector<int> parameters;
};

/// Names addressable from the command line: p1, torus, t2xs2, ruled:n.
CatalogEntry parse_entry(const std::string& name);

struct ConsistencyReport {
  long checked = 0;
  long nonzero = 0;
  std::vector<std::string> failures;
};

/// Scans every catalog value in the given ranges and checks that nonzero
/// values are allowed by the dimension count.
ConsistencyReport dimension_consistency(int max_n, int max_a, int max_b, int max_g);

/// Coefficient of the degree-d single-contact term of the P^1 series glued
/// to itself along a point.
Rational p1_self_gluing(int d);

}  // namespace sumkit::catalog
