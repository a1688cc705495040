#include "sumkit/acceptance.hpp"

#include "sumkit/catalog.hpp"
#include "sumkit/elliptic.hpp"
#include "sumkit/hurwitz.hpp"
#include "sumkit/oracles.hpp"
#include "sumkit/random_inputs.hpp"
#include "sumkit/series.hpp"
#include "sumkit/severi.hpp"
#include "sumkit/sum_engine.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>

namespace sumkit::acceptance {

namespace {

using random_inputs::Rng;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_seconds;
  std::function<Outcome(std::uint64_t)> run;
};

Outcome severi_kontsevich(std::uint64_t) {
  const std::vector<long> expected = {1, 1, 12, 620, 87304};
  Outcome out;
  std::ostringstream msg;
  for (int d = 1; d <= 5; ++d) {
    const Integer got = severi::rational_degree(d);
    const Integer oracle = oracles::kontsevich_oracle(d);
    msg << (d > 1 ? " " : "") << got.get_str();
    if (got != oracle || got != expected[static_cast<std::size_t>(d - 1)]) {
      out.ok = false;
      msg << "(oracle " << oracle.get_str() << ")";
    }
  }
  out.detail = "N_d = " + msg.str();
  return out;
}

Outcome smooth_curves(std::uint64_t) {
  Outcome out;
  std::ostringstream msg;
  for (int d = 1; d <= 4; ++d) {
    const Integer got = severi::severi_number(d, 0, {}, severi::Profile(1, d));
    msg << (d > 1 ? " " : "") << got.get_str();
    if (got != 1) out.ok = false;
  }
  out.detail = "N^{d,0} = " + msg.str();
  return out;
}

Outcome hurwitz_oracle_equivalence(std::uint64_t) {
  Outcome out;
  long checked = 0;
  for (int d = 1; d <= 5; ++d) {
    for (const auto& alpha : hurwitz::partitions(d)) {
      for (int g = 0;; ++g) {
        const long r = hurwitz::branch_count(d, g, alpha);
        if (r > 6) break;
        if (r < 0) continue;
        ++checked;
        const Rational got = hurwitz::hurwitz_number(d, g, alpha);
        const Rational want = oracles::hurwitz_oracle(d, g, alpha);
        if (got != want) {
          out.ok = false;
          out.detail += " mismatch d=" + std::to_string(d) + " g=" + std::to_string(g);
        }
      }
    }
  }
  out.detail = std::to_string(checked) + " keys" + out.detail;
  return out;
}

Outcome cut_join(std::uint64_t) {
  Outcome out;
  for (int d = 0; d <= 4; ++d) {
    for (int r = 0; r <= 4; ++r) {
      if (!hurwitz::cut_join_residual(d, r).is_zero()) {
        out.ok = false;
        out.detail += " nonzero at d<=" + std::to_string(d) + " r<=" + std::to_string(r);
      }
    }
  }
  if (out.ok) out.detail = "residual zero for all d<=4, r<=4";
  return out;
}

Outcome elliptic_surface(std::uint64_t) {
  Outcome out;
  const int cutoff = 100;
  const Series f0 = elliptic::f0_via_ode(cutoff);
  const std::vector<long> leading = {1, 12, 90, 520, 2535};
  for (std::size_t n = 0; n < leading.size(); ++n) {
    if (coefficient(f0, Monomial({static_cast<int>(n)})) != leading[n]) {
      out.ok = false;
      out.detail += " F0 t^" + std::to_string(n) + " wrong;";
    }
  }
  long zero = 0;
  for (const auto& r : elliptic::identity_suite(3, cutoff)) {
    if (r.zero()) {
      ++zero;
    } else {
      out.ok = false;
      out.detail += " " + r.identity + (r.genus >= 0 ? " g=" + std::to_string(r.genus) : "") + " nonzero;";
    }
  }
  if (out.ok) out.detail = std::to_string(zero) + " identities zero through t^100";
  return out;
}

Outcome s_matrix_algebra(std::uint64_t seed) {
  Rng rng(seed ^ 0x5eed0006ULL);
  Outcome out;
  long exact_n = 0;
  long finite_n = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int basis = std::uniform_int_distribution<int>(1, 2)(rng);
    const int cutoff = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto neck = product_neck_geometry(basis);
    const auto q = random_inputs::pairing(rng, basis);
    const auto glue = neck_gluing(neck);
    const RelSeries unit = identity_element(neck, q, cutoff);
    // Every term of R has projected area >= 1, so R^{cutoff+1} = 0.
    const RelSeries r = random_inputs::rel_series(rng, neck, cutoff, 4, 1, {"1"});
    const RelSeries tw = unit + r;

    std::vector<RelSeries> r_pow = {unit};
    while (!r_pow.back().is_zero()) r_pow.push_back(convolve(r_pow.back(), r, q, glue));
    const int nilpotency = static_cast<int>(r_pow.size()) - 1;
    if (nilpotency > 6) {
      out.ok = false;
      out.detail += " nilpotency " + std::to_string(nilpotency) + " > 6;";
    }

    const RelSeries s = s_matrix(tw, q);
    if (!(convolve(s, tw, q, glue) == unit) || !(convolve(tw, s, q, glue) == unit)) {
      out.ok = false;
      out.detail += " trial " + std::to_string(trial) + ": S*(I+R) != I;";
    }
    for (int n = 1; n <= 5; ++n) {
      const RelSeries neck_sum = neck_identity(tw, q, n);
      if (2 * n >= nilpotency) {
        ++exact_n;
        if (!(neck_sum == s)) {
          out.ok = false;
          out.detail += " trial " + std::to_string(trial) + " N=" + std::to_string(n) + ": neck != S;";
        }
      } else {
        ++finite_n;
        const RelSeries expected = s - convolve(r_pow[static_cast<std::size_t>(2 * n)], s, q, glue);
        if (!(neck_sum == expected)) {
          out.ok = false;
          out.detail += " trial " + std::to_string(trial) + " N=" + std::to_string(n) + ": neck != S - R^2N S;";
        }
      }
    }
  }
  if (out.ok) {
    out.detail = "200 R; neck=S in " + std::to_string(exact_n) + " cases with 2N>=nilpotency, =S-R^2N*S in " +
                 std::to_string(finite_n);
  }
  return out;
}

Outcome convolution_cross_check(std::uint64_t seed) {
  Rng rng(seed ^ 0x5eed0007ULL);
  Outcome out;
  const std::vector<std::string> tags = {"1", "p", "E"};
  long nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int basis = std::uniform_int_distribution<int>(1, 2)(rng);
    const auto q = random_inputs::pairing(rng, basis);
    const auto neck = product_neck_geometry(basis);
    const auto end = product_end_geometry(basis);
    GeometryPtr gx;
    GeometryPtr gy;
    Gluing glue;
    switch (trial % 4) {
      case 0:
        gx = neck, gy = neck, glue = neck_gluing(neck);
        break;
      case 1:
        gx = end, gy = neck, glue = absorb_right(end, neck);
        break;
      case 2:
        gx = neck, gy = end, glue = absorb_left(neck, end);
        break;
      default:
        gx = end, gy = end, glue = {product_closed_geometry(), neck->self_gluing};
        break;
    }
    // Keep the fiber degrees of the two sides overlapping so that terms glue.
    const RelSeries x = random_inputs::rel_series(rng, gx, 4, 8, 0, tags);
    const RelSeries y = random_inputs::rel_series(rng, gy, 4, 8, 0, tags);
    const RelSeries direct = convolve(x, y, q, glue);
    const RelSeries via_operator = convolve_via_operator(x, y, q, glue);
    if (!direct.is_zero()) ++nonzero;
    if (!(direct == via_operator)) {
      out.ok = false;
      out.detail += " trial " + std::to_string(trial) + " differs;";
    }
  }
  if (out.ok) out.detail = "100 pairs agree (" + std::to_string(nonzero) + " with nonzero product)";
  return out;
}

Outcome catalog_consistency(std::uint64_t) {
  Outcome out;
  const auto rep = catalog::dimension_consistency(3, 3, 5, 2);
  for (const auto& f : rep.failures) out.detail += " " + f + ";";
  if (!rep.failures.empty()) out.ok = false;
  for (int d = 1; d <= 10; ++d) {
    if (catalog::p1_self_gluing(d) != make_rational(1, d)) {
      out.ok = false;
      out.detail += " self-gluing d=" + std::to_string(d) + " wrong;";
    }
  }
  const Series g = catalog::torus_rel_series(40);
  for (int n = 1; n <= 40; ++n) {
    if (coefficient(g, Monomial({n})) != Rational(oracles::divisor_sum(n))) {
      out.ok = false;
      out.detail += " torus t^" + std::to_string(n) + " != sigma;";
    }
  }
  const RelSeries p1_tw = tw_from_gw(catalog::p1_series(8));
  if (!(p1_tw == identity_element(catalog::p1_geometry(), IntersectionMatrix::identity(1), 8))) {
    out.ok = false;
    out.detail += " exp(P^1 series) != identity;";
  }
  if (out.ok) {
    out.detail = std::to_string(rep.nonzero) + " nonzero of " + std::to_string(rep.checked) +
                 " values pass the dimension filter; P^1 self-gluing = 1/d for d<=10";
  }
  return out;
}

Outcome series_properties(std::uint64_t seed) {
  Rng rng(seed ^ 0x5eed0009ULL);
  Outcome out;
  const auto ctx = random_inputs::property_context();
  const int cutoff = 30;
  long failures = 0;
  auto check = [&](bool cond, const char* what) {
    if (!cond && failures++ < 5) out.detail += std::string(" ") + what + ";";
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Series a = random_inputs::series(rng, ctx, cutoff, 5, 0, true);
    const Series b = random_inputs::series(rng, ctx, cutoff, 5, 0, true);
    const Series c = random_inputs::series(rng, ctx, cutoff, 5, 0, true);
    const Series zero(ctx, cutoff);
    const Series one = Series::constant(ctx, cutoff, 1);
    check(a + b == b + a, "a+b != b+a");
    check((a + b) + c == a + (b + c), "+ not associative");
    check(a * b == b * a, "ab != ba");
    check((a * b) * c == a * (b * c), "* not associative");
    check(a * (b + c) == a * b + a * c, "not distributive");
    check(a * one == a && a + zero == a && a - a == zero, "units");
    check(differentiate(a * b, "x") == differentiate(a, "x") * truncate(b, cutoff - 1) +
                                          truncate(a, cutoff - 1) * differentiate(b, "x"),
          "Leibniz");
    // exp/log on lambda-free inputs without a grading-0 part.
    const Series f = random_inputs::series(rng, ctx, cutoff, 3, 1, false);
    check(log(exp(f)) == f, "log(exp f) != f");
    check(exp(log(one + f)) == one + f, "exp(log(1+f)) != 1+f");
  }
  out.ok = failures == 0;
  if (out.ok) out.detail = "500 random triples: ring axioms, Leibniz, exp/log roundtrip";
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"Severi/Kontsevich agreement d<=5", 10, severi_kontsevich},
      {"Smooth-curve sanity N^{d,0}=1, d<=4", 1, smooth_curves},
      {"Hurwitz oracle equivalence d<=5, r<=6", 60, hurwitz_oracle_equivalence},
      {"Cut-join residual d<=4, r<=4", 10, cut_join},
      {"Elliptic surface identities through t^100", 5, elliptic_surface},
      {"S-matrix algebra on 200 random R", 30, s_matrix_algebra},
      {"Convolution vs operator form on 100 pairs", 30, convolution_cross_check},
      {"Catalog dimension consistency", 5, catalog_consistency},
      {"Series-core properties on 500 samples", 30, series_properties},
  };
  return list;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  CriterionResult r;
  r.id = id;
  r.name = c.name;
  r.limit_seconds = c.limit_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = c.run(seed);
    r.ok = o.ok;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.ok && r.seconds >= r.limit_seconds) r.detail += " (over time budget)";
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "(%.2f s / %.0f s)", r.seconds, r.limit_seconds);
  return std::string(r.pass() ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.name + "  " + timing +
         "  " + r.detail;
}

}  // namespace sumkit::acceptance
