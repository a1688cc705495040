#pragma once

// Relative invariant series and the gluing operations of the symplectic sum
// formula in the setting without rim tori: homology classes are integer
// vectors, contact data are multisets over a basis of H_*(V), and the
// generating series is graded by class and Euler characteristic.

#include "sumkit/contact.hpp"
#include "sumkit/rational.hpp"

#include "json.hpp"

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sumkit {

using ClassKey = std::vector<long>;

struct LinearForm {
  std::vector<long> coeffs;

  long operator()(const ClassKey& a) const;
  bool operator==(const LinearForm&) const = default;
};

ClassKey class_add(const ClassKey& a, const ClassKey& b);

using ClassMap = std::function<ClassKey(const ClassKey&, const ClassKey&)>;

/// Numerical data of a (manifold, divisor ends) pair needed by the engine.
struct Geometry {
  std::string name;
  int class_dim = 1;
  /// One functional per divisor end: A -> A.V_e.
  std::vector<LinearForm> end_degree;
  LinearForm canonical;  // A -> K_X[A]
  /// Truncation grading on classes; nonnegative on every stored class.
  LinearForm grading;
  /// Energy of the projection to V. Neck maps that are not fiber covers have
  /// positive area; the area of a glued class is the sum of the areas.
  LinearForm projected_area;
  int basis_size = 1;
  /// Two-ended neck geometries only: class of a degree-d cover of the fiber.
  std::function<ClassKey(long)> fiber_class;
  /// Two-ended neck geometries only: class map of F #_V F = F.
  ClassMap self_gluing;

  int end_count() const { return static_cast<int>(end_degree.size()); }
};

using GeometryPtr = std::shared_ptr<const Geometry>;

/// The ruled model F = P(N + C) over V with trivial normal bundle: classes
/// (a, k) with a the projected area and k the fiber degree (= contact degree
/// at both ends).
GeometryPtr product_neck_geometry(int basis_size);
/// A one-ended model with the same (a, k) class bookkeeping.
GeometryPtr product_end_geometry(int basis_size);
/// Closed (zero-ended) model with (a, k) classes.
GeometryPtr product_closed_geometry();

struct RelKey {
  ClassKey cls;
  int chi = 0;
  std::vector<ContactMultiset> contacts;  // one per divisor end
  std::string tag = "1";                  // canonical constraint string

  auto operator<=>(const RelKey&) const = default;
};

/// Tensor product of constraint tags; "1" is the unit.
std::string combine_tags(const std::string& a, const std::string& b);

class RelSeries {
 public:
  using TermMap = std::map<RelKey, Rational>;

  RelSeries(GeometryPtr geometry, int cutoff);

  const GeometryPtr& geometry() const { return geom_; }
  int end_count() const { return geom_->end_count(); }
  int cutoff() const { return cutoff_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Validates the key against the geometry; keys above the cutoff are dropped.
  void accumulate(const RelKey& key, const Rational& c);
  Rational coefficient(const RelKey& key) const;

  RelSeries& operator+=(const RelSeries& other);
  RelSeries& operator-=(const RelSeries& other);
  RelSeries& operator*=(const Rational& c);
  bool operator==(const RelSeries& other) const;

 private:
  GeometryPtr geom_;
  int cutoff_;
  TermMap terms_;
};

RelSeries operator+(const RelSeries& a, const RelSeries& b);
RelSeries operator-(const RelSeries& a, const RelSeries& b);
RelSeries truncate(const RelSeries& s, int cutoff);

struct Gluing {
  GeometryPtr result;
  ClassMap class_map;
};

/// Gluing of a neck geometry to itself (or of anything to the neck on the
/// right) using the geometry's self_gluing map.
Gluing neck_gluing(const GeometryPtr& neck);
/// Gluing of an X-type series to a neck on its right: keeps X's geometry.
Gluing absorb_right(const GeometryPtr& x, const GeometryPtr& neck);
/// Gluing of a neck on the left of a Y-type series: keeps Y's geometry.
Gluing absorb_left(const GeometryPtr& neck, const GeometryPtr& y);

/// Disconnected counts from connected ones: TW = exp(GW). Only the trivial
/// constraint tag "1" is supported.
RelSeries tw_from_gw(const RelSeries& gw);
RelSeries gw_from_tw(const RelSeries& tw);

/// Glues the last end of x to the first end of y, summing over contact
/// multisets m with weight |m|/m! and lambda^{2 l(m)} and the Q-dual basis
/// on y's side.
RelSeries convolve(const RelSeries& x, const RelSeries& y, const IntersectionMatrix& q, const Gluing& gluing);

/// Same product computed by the bilinear operator
/// exp(sum a lambda^2 Q_ij d/dz_{a,i} d/dw_{a,j}) on the z/w generating series.
RelSeries convolve_via_operator(const RelSeries& x, const RelSeries& y, const IntersectionMatrix& q,
                                const Gluing& gluing);

/// The unit of the neck algebra: the fiber covers, with coefficient
/// m!/|m| paired through the inverse of Q.
RelSeries identity_element(const GeometryPtr& neck, const IntersectionMatrix& q, int cutoff);

/// Convolution inverse of tw_f = I + R via the alternating Neumann series.
RelSeries s_matrix(const RelSeries& tw_f, const IntersectionMatrix& q);

/// sum_{k=1}^{2N} (-1)^{k-1} C(2N,k) tw_f^{*(k-1)}.
RelSeries neck_identity(const RelSeries& tw_f, const IntersectionMatrix& q, int n);

/// n-fold convolution power in the neck algebra (power 0 is the identity).
RelSeries neck_power(const RelSeries& tw_f, const IntersectionMatrix& q, int n);

/// l - C(l,2) + C(l,3) - ... +- C(l,l).
Integer inclusion_exclusion_check(long l);

/// Real dimension -2K[A] + (chi/2)(dim X - 6) + 2n - 2(deg s - l(s)).
long moduli_dimension(const Geometry& geom, const ClassKey& cls, int chi, int n_marked, const ContactSeq& s,
                      int dim_x);

/// K_Z[A] for A glued from C_1 in X and C_2 in Y meeting V in beta points.
long sum_canonical(long k_x, long k_y, long beta);

nlohmann::json to_json(const Geometry& g);
nlohmann::json to_json(const RelSeries& s);
RelSeries rel_series_from_json(const nlohmann::json& j, GeometryPtr geometry);

}  // namespace sumkit
