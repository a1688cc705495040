#pragma once

// Curve counts in the classes s + d f of the rational elliptic surface, all as
// series in the fiber variable t of catalog::fiber_context(). The section
// marker t_s is a common factor and is not stored.

#include "sumkit/rational.hpp"
#include "sumkit/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sumkit::elliptic {

/// G(t) = sum sigma(n) t^n from the divisor sums.
Series sigma_series(int cutoff);
/// G(t) = sum_d d t^d / (1 - t^d) by series inversion.
Series sigma_series_lambert(int cutoff);
/// G'(t) through t^cutoff.
Series sigma_derivative(int cutoff);

/// Solution of t F' = 12 G F with F(0) = 1.
Series f0_via_ode(int cutoff);
/// (prod_d 1/(1 - t^d))^12.
Series f0_product(int cutoff);
/// F_0 (G')^g.
Series fg(int g, int cutoff);

struct SurfaceClassData {
  long KdotA = 0;
  long Asq = 0;
  long fdotA = 0;
};

/// A = s + d f: K = -f, A.f = 1, A^2 = 2d - 1.
SurfaceClassData section_class(long d);

/// Genus-one degree-zero invariant with one constraint: K.B / 24.
Rational ghost_torus(long KdotB);
/// (f.A)/24 (A^2 + K.A); requires K.A = -1.
Rational trr_leading_coefficient(const SurfaceClassData& data);

/// Unconstrained genus-one fiber covers GW_{kf,1} = sigma(k)/k.
Rational fiber_cover_invariant(long k);

/// Genus-one TRR assembled coefficientwise: for A = s + d f,
///   H_d = lead(A) GW_{A,0} + sum_{k=1}^{d} (f.A_2)(A_1.A_2) GW_{kf,1} GW_{A_2,0}
/// with A_1 = k f, A_2 = s + (d - k) f, and GW_{.,0} read from gw0.
Series trr_genus1(const Series& gw0, const std::function<Rational(long)>& gw_fiber = fiber_cover_invariant);

/// (1/12)(t F' - F) + F G.
Series rel1(const Series& f0, const Series& g);
/// 2 F (G - 1/24).
Series rel2(const Series& f0, const Series& g);

struct Residual {
  std::string identity;
  int genus = -1;  // -1 when not genus-indexed
  Series value;

  bool zero() const { return value.is_zero(); }
};

/// Derives F_1^V(p) = 0 from the K3 relation at g = 1, then F_g^V(p) = 0 and
/// F_g = F_{g-1} G' for g <= g_max, reporting each identity's residual.
std::vector<Residual> lsplit_suite(int g_max, int cutoff);

/// ODE vs product, the Lambert form of G, TRR vs rel1 vs rel2, and lsplit.
std::vector<Residual> identity_suite(int g_max, int cutoff);

}  // namespace sumkit::elliptic
