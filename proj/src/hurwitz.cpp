#include "sumkit/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sumkit::hurwitz {

std::vector<Partition> partitions(int d) {
  std::vector<Partition> out;
  if (d < 0) return out;
  Partition current;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int a = std::min(left, max_part); a >= 1; --a) {
      current.push_back(a);
      rec(left - a, a);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

long branch_count(int d, int g, const Partition& alpha) {
  long ramification = 0;
  for (int a : alpha) ramification += a - 1;
  return 2L * d + 2L * g - 2 - ramification;
}

ContextPtr generating_context(int d_max) {
  std::vector<Variable> vars = {{"t", 1, false}, {"u", 0, false}, {"lambda", 0, true}};
  for (int a = 1; a <= d_max; ++a) vars.push_back({"z" + std::to_string(a), 0, false});
  return make_context(std::move(vars));
}

namespace {

std::string z_name(int a) { return "z" + std::to_string(a); }

// Cut-join operator on the u-free pieces: `prev` is the u^{r-1} piece and
// `lower[k]` the u^k pieces for k < r, so that the result is the u^{r-1}
// coefficient of the right-hand side.
Series cut_join_piece(const std::vector<Series>& lower, int d_max) {
  const Series& prev = lower.back();
  const ContextPtr& ctx = prev.context();
  const int cutoff = prev.cutoff();
  const Series lambda2 = Series::monomial(ctx, cutoff, {{"lambda", 2}});
  Series out(ctx, cutoff);
  const std::size_t top = lower.size() - 1;
  for (int i = 1; i <= d_max; ++i) {
    for (int j = 1; i + j <= d_max; ++j) {
      const Series zij = Series::variable(ctx, cutoff, z_name(i + j));
      Series quadratic = differentiate(differentiate(prev, z_name(i)), z_name(j));
      for (std::size_t a = 0; a <= top; ++a) {
        quadratic += differentiate(lower[a], z_name(i)) * differentiate(lower[top - a], z_name(j));
      }
      out += Rational(i * j) * (lambda2 * zij * quadratic);
      const Series zz = Series::variable(ctx, cutoff, z_name(i)) * Series::variable(ctx, cutoff, z_name(j));
      out += Rational(i + j) * (zz * differentiate(prev, z_name(i + j)));
    }
  }
  out *= make_rational(1, 2);
  return out;
}

// u^r pieces of G (without the u), built level by level.
class Levels {
 public:
  const Series& get(int d, int r) {
    std::lock_guard lock(mutex_);
    if (d > d_max_) {
      d_max_ = std::max(d, 5);
      levels_.clear();
    }
    if (levels_.empty()) {
      const ContextPtr ctx = generating_context(d_max_);
      levels_.push_back(Series::monomial(ctx, d_max_, {{"z1", 1}, {"t", 1}, {"lambda", -2}}));
    }
    while (static_cast<int>(levels_.size()) <= r) {
      const int next = static_cast<int>(levels_.size());
      Series piece = cut_join_piece(levels_, d_max_);
      piece *= make_rational(1, next);
      levels_.push_back(std::move(piece));
    }
    return levels_[static_cast<std::size_t>(r)];
  }

 private:
  std::mutex mutex_;
  int d_max_ = 0;
  std::vector<Series> levels_;
};

Levels& levels() {
  static Levels l;
  return l;
}

bool valid_key(int d, int g, const Partition& alpha) {
  if (d < 1 || g < 0) return false;
  long total = 0;
  for (int a : alpha) {
    if (a < 1) return false;
    total += a;
  }
  return total == d && branch_count(d, g, alpha) >= 0;
}

}  // namespace

Rational hurwitz_number(int d, int g, const Partition& alpha) {
  if (!valid_key(d, g, alpha)) return 0;
  const long r = branch_count(d, g, alpha);
  const Series& level = levels().get(d, static_cast<int>(r));
  const ContextPtr& ctx = level.context();
  Monomial m = Monomial::one(ctx->size());
  m[ctx->index("t")] = d;
  m[ctx->index("lambda")] = 2 * g - 2;
  std::map<int, int> mult;
  for (int a : alpha) ++mult[a];
  for (const auto& [a, c] : mult) m[ctx->index(z_name(a))] = c;
  return coefficient(level, m) * factorial(static_cast<unsigned>(r));
}

Series generating_series(int d_max, int r_max) {
  const ContextPtr ctx = generating_context(std::max(d_max, 0));
  Series g(ctx, std::max(d_max, 0));
  for (int d = 1; d <= d_max; ++d) {
    for (const auto& alpha : partitions(d)) {
      long ramification = 0;
      std::map<int, int> mult;
      for (int a : alpha) {
        ramification += a - 1;
        ++mult[a];
      }
      for (int r = 0; r <= r_max; ++r) {
        const long twice_g = r - 2L * d + 2 + ramification;
        if (twice_g < 0 || twice_g % 2 != 0) continue;
        const int genus = static_cast<int>(twice_g / 2);
        const Rational n = hurwitz_number(d, genus, alpha);
        if (n == 0) continue;
        Monomial m = Monomial::one(ctx->size());
        m[ctx->index("t")] = d;
        m[ctx->index("u")] = r;
        m[ctx->index("lambda")] = 2 * genus - 2;
        for (const auto& [a, c] : mult) m[ctx->index(z_name(a))] = c;
        g.accumulate(m, n / Rational(factorial(static_cast<unsigned>(r))));
      }
    }
  }
  return g;
}

Series cut_join_residual(int d_max, int r_max) {
  const Series g = generating_series(d_max, r_max);
  const ContextPtr& ctx = g.context();
  const int cutoff = g.cutoff();
  const Series lambda2 = Series::monomial(ctx, cutoff, {{"lambda", 2}});
  Series rhs(ctx, cutoff);
  for (int i = 1; i <= d_max; ++i) {
    for (int j = 1; i + j <= d_max; ++j) {
      const Series zij = Series::variable(ctx, cutoff, z_name(i + j));
      const Series di = differentiate(g, z_name(i));
      const Series dj = differentiate(g, z_name(j));
      const Series join = differentiate(di, z_name(j)) + di * dj;
      rhs += Rational(i * j) * (lambda2 * zij * join);
      const Series zz = Series::variable(ctx, cutoff, z_name(i)) * Series::variable(ctx, cutoff, z_name(j));
      rhs += Rational(i + j) * (zz * differentiate(g, z_name(i + j)));
    }
  }
  rhs *= make_rational(1, 2);
  const Series diff = differentiate(g, "u") - rhs;
  const std::size_t u = ctx->index("u");
  Series out(ctx, cutoff);
  for (const auto& [m, c] : diff.terms()) {
    if (m[u] < r_max) out.accumulate(m, c);
  }
  return out;
}

}  // namespace sumkit::hurwitz
