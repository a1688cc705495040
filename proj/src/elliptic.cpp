#include "sumkit/elliptic.hpp"

#include "sumkit/catalog.hpp"
#include "sumkit/errors.hpp"

namespace sumkit::elliptic {

namespace {

ContextPtr ctx() { return catalog::fiber_context(); }

Rational coeff(const Series& f, long n) { return coefficient(f, Monomial({static_cast<int>(n)})); }

Series t_power(int n, int cutoff, const Rational& c = 1) {
  Series s(ctx(), cutoff);
  s.accumulate(Monomial({n}), c);
  return s;
}

}  // namespace

Series sigma_series(int cutoff) { return catalog::torus_rel_series(cutoff); }

Series sigma_series_lambert(int cutoff) {
  Series g(ctx(), cutoff);
  const Series one = Series::constant(ctx(), cutoff, 1);
  for (int d = 1; d <= cutoff; ++d) g += t_power(d, cutoff, d) * inverse(one - t_power(d, cutoff));
  return g;
}

Series sigma_derivative(int cutoff) { return differentiate(sigma_series(cutoff + 1), "t"); }

Series f0_via_ode(int cutoff) {
  const Series g = sigma_series(cutoff);
  std::vector<Rational> c(static_cast<std::size_t>(cutoff) + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= cutoff; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += coeff(g, k) * c[static_cast<std::size_t>(n - k)];
    c[static_cast<std::size_t>(n)] = 12 * s / n;
  }
  Series f(ctx(), cutoff);
  for (int n = 0; n <= cutoff; ++n) f.accumulate(Monomial({n}), c[static_cast<std::size_t>(n)]);
  return f;
}

Series f0_product(int cutoff) {
  const Series one = Series::constant(ctx(), cutoff, 1);
  Series p = one;
  for (int d = 1; d <= cutoff; ++d) p = p * inverse(one - t_power(d, cutoff));
  return pow(p, 12);
}

Series fg(int g, int cutoff) {
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  return f0_via_ode(cutoff) * pow(sigma_derivative(cutoff), static_cast<unsigned>(g));
}

SurfaceClassData section_class(long d) { return {-1, 2 * d - 1, 1}; }

Rational ghost_torus(long KdotB) { return make_rational(KdotB, 24); }

Rational trr_leading_coefficient(const SurfaceClassData& data) {
  if (data.KdotA != -1) throw DomainError("the genus-one TRR form needs K.A = -1");
  return make_rational(data.fdotA * (data.Asq + data.KdotA), 24);
}

Rational fiber_cover_invariant(long k) {
  if (k < 1) throw std::invalid_argument("fiber cover degree must be >= 1");
  return coeff(sigma_series(static_cast<int>(k)), k) / k;
}

Series trr_genus1(const Series& gw0, const std::function<Rational(long)>& gw_fiber) {
  const int cutoff = gw0.cutoff();
  Series h(ctx(), cutoff);
  for (long d = 0; d <= cutoff; ++d) {
    Rational v = trr_leading_coefficient(section_class(d)) * coeff(gw0, d);
    for (long k = 1; k <= d; ++k) {
      // A_1 = k f, A_2 = s + (d - k) f: f.A_2 = 1 and A_1.A_2 = k.
      const long f_dot_a2 = 1;
      const long a1_dot_a2 = k;
      v += f_dot_a2 * a1_dot_a2 * gw_fiber(k) * coeff(gw0, d - k);
    }
    h.accumulate(Monomial({static_cast<int>(d)}), v);
  }
  return h;
}

Series rel1(const Series& f0, const Series& g) {
  return make_rational(1, 12) * (euler_operator(f0) - f0) + f0 * g;
}

Series rel2(const Series& f0, const Series& g) {
  return Rational(2) * (f0 * (g - Series::constant(ctx(), g.cutoff(), make_rational(1, 24))));
}

std::vector<Residual> lsplit_suite(int g_max, int cutoff) {
  if (g_max < 1) throw std::invalid_argument("lsplit_suite needs g_max >= 1");
  std::vector<Residual> out;
  const Series f0 = f0_via_ode(cutoff);
  const Series dg = sigma_derivative(cutoff);
  const Series f0_inv = inverse(f0);
  const Series zero(ctx(), cutoff);

  // (c) at g = 1 reads 0 = F_1^V(p) F_0 + F_0 F_1^V(p); F_0 is invertible.
  const Series two_f0 = Rational(2) * f0;
  const Series f1p = zero * inverse(two_f0);
  out.push_back({"F1V(p)", 1, f1p});
  out.push_back({"(c)", 1, f1p * f0 + f0 * f1p});

  std::vector<Series> fv_p = {zero, f1p};
  std::vector<Series> f = {f0};
  for (int g = 1; g <= g_max; ++g) {
    if (g >= 2) {
      // (c): 0 = F_g^V(p) F_0 + F_{g-1} F_1^V(p).
      fv_p.push_back(-(f[static_cast<std::size_t>(g - 1)] * f1p) * f0_inv);
      out.push_back({"FgV(p)", g, fv_p.back()});
      out.push_back({"(c)", g, fv_p.back() * f0 + f[static_cast<std::size_t>(g - 1)] * f1p});
    }
    // (a) with (b): F_g = F_g^V(p) + F_{g-1} G'.
    f.push_back(fv_p[static_cast<std::size_t>(g)] + f[static_cast<std::size_t>(g - 1)] * dg);
    const Series& fg_derived = f.back();
    out.push_back({"Fg - Fg-1*G'", g, fg_derived - f[static_cast<std::size_t>(g - 1)] * dg});
    out.push_back({"Fg/F0 - (G')^g", g, fg_derived * f0_inv - pow(dg, static_cast<unsigned>(g))});
    out.push_back({"Fg - F0*(G')^g", g, fg_derived - fg(g, cutoff)});
  }
  return out;
}

std::vector<Residual> identity_suite(int g_max, int cutoff) {
  std::vector<Residual> out;
  const Series g = sigma_series(cutoff);
  const Series f0 = f0_via_ode(cutoff);
  out.push_back({"G: divisor sums - Lambert", -1, g - sigma_series_lambert(cutoff)});
  out.push_back({"F0: ODE - product", -1, f0 - f0_product(cutoff)});
  out.push_back({"ODE: tF0' - 12 G F0", -1, euler_operator(f0) - Rational(12) * (g * f0)});
  const Series h1 = rel1(f0, g);
  out.push_back({"rel1 - rel2", -1, h1 - rel2(f0, g)});
  out.push_back({"TRR - rel1", -1, trr_genus1(f0) - h1});
  for (auto& r : lsplit_suite(g_max, cutoff)) out.push_back(std::move(r));
  return out;
}

}  // namespace sumkit::elliptic
