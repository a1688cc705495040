#include "sumkit/severi.hpp"

#include "sumkit/errors.hpp"
#include "sumkit/series.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace sumkit::severi {

Profile make_profile(std::vector<long> counts) {
  for (long c : counts) {
    if (c < 0) throw std::invalid_argument("profile entries must be >= 0");
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

Profile parse_profile(const std::string& text) {
  std::vector<long> counts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("profile item '" + item + "' is not k:c");
    std::size_t used_k = 0;
    std::size_t used_c = 0;
    long k = 0;
    long c = 0;
    try {
      const std::string ks = item.substr(0, colon);
      const std::string cs = item.substr(colon + 1);
      k = std::stol(ks, &used_k);
      c = std::stol(cs, &used_c);
      if (used_k != ks.size() || used_c != cs.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw std::invalid_argument("profile item '" + item + "' is not k:c");
    }
    if (k < 1 || c < 0) throw std::invalid_argument("profile item '" + item + "' out of range");
    if (counts.size() < static_cast<std::size_t>(k)) counts.resize(static_cast<std::size_t>(k), 0);
    counts[static_cast<std::size_t>(k - 1)] += c;
  }
  return make_profile(std::move(counts));
}

std::string to_string(const Profile& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(k + 1) + ':' + std::to_string(p[k]);
  }
  return out;
}

long weighted_sum(const Profile& p) {
  long s = 0;
  for (std::size_t k = 0; k < p.size(); ++k) s += static_cast<long>(k + 1) * p[k];
  return s;
}

long count(const Profile& p) {
  long s = 0;
  for (long c : p) s += c;
  return s;
}

Profile unit(int k) {
  Profile p(static_cast<std::size_t>(k), 0);
  p[static_cast<std::size_t>(k - 1)] = 1;
  return p;
}

long genus_of(int d, int delta) { return static_cast<long>(d - 1) * (d - 2) / 2 - delta; }

long point_count(int d, long g, const Profile& alpha, const Profile& beta) {
  if (weighted_sum(alpha) + weighted_sum(beta) != d) {
    throw std::invalid_argument("tangency profile does not match the degree");
  }
  return 2L * d + g - 1 + count(beta);
}

namespace {

long at(const Profile& p, std::size_t k) { return k < p.size() ? p[k] : 0; }

bool nonnegative(const Profile& p) {
  for (long c : p) {
    if (c < 0) return false;
  }
  return true;
}

std::string memo_key(int d, int delta, const Profile& alpha, const Profile& beta) {
  return std::to_string(d) + '|' + std::to_string(delta) + '|' + to_string(alpha) + '|' + to_string(beta);
}

class Memo {
 public:
  bool find(const std::string& key, Integer& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void store(const std::string& key, const Integer& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, Integer> table_;
};

Memo& tw_memo() {
  static Memo memo;
  return memo;
}

Memo& connected_memo() {
  static Memo memo;
  return memo;
}

// All profiles gamma with weighted sum exactly w.
void for_each_profile_of_weight(long w, const std::function<void(const Profile&)>& fn) {
  Profile current(static_cast<std::size_t>(std::max(w, 0L)), 0);
  std::function<void(long, long)> rec = [&](long k, long left) {
    if (left == 0) {
      fn(make_profile(current));
      return;
    }
    if (k > left) return;
    for (long c = 0; c * k <= left; ++c) {
      current[static_cast<std::size_t>(k - 1)] = c;
      rec(k + 1, left - c * k);
    }
    current[static_cast<std::size_t>(k - 1)] = 0;
  };
  if (w >= 0) rec(1, w);
}

// All profiles p with 0 <= p <= bound componentwise.
void for_each_subprofile(const Profile& bound, const std::function<void(const Profile&)>& fn) {
  Profile current(bound.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == bound.size()) {
      fn(make_profile(current));
      return;
    }
    for (long c = 0; c <= bound[k]; ++c) {
      current[k] = c;
      rec(k + 1);
    }
    current[k] = 0;
  };
  rec(0);
}

Integer tw_compute(int d, int delta, const Profile& alpha, const Profile& beta) {
  const long g = genus_of(d, delta);
  const long r = 2L * d + g - 1 + count(beta);
  // Every component of a curve imposes at least one point condition.
  if (r < 1) return 0;
  if (d == 1) {
    const bool fixed = alpha == unit(1) && beta.empty();
    const bool moving = alpha.empty() && beta == unit(1);
    return (delta == 0 && (fixed || moving)) ? Integer(1) : Integer(0);
  }
  Integer total = 0;
  // A moving contact of order k becomes fixed.
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    Profile a2 = alpha;
    if (a2.size() <= k) a2.resize(k + 1, 0);
    a2[k] += 1;
    Profile b2 = beta;
    b2[k] -= 1;
    total += static_cast<long>(k + 1) * tw_severi_number(d, delta, make_profile(a2), make_profile(b2));
  }
  // The curve degenerates to the line plus a degree d-1 curve meeting it
  // in the old fixed contacts alpha' and the new contacts gamma = beta' - beta.
  for_each_subprofile(alpha, [&](const Profile& a1) {
    const long left = d - 1 - weighted_sum(a1) - weighted_sum(beta);
    for_each_profile_of_weight(left, [&](const Profile& gamma) {
      Profile b1(std::max(beta.size(), gamma.size()), 0);
      Integer weight = 1;
      for (std::size_t k = 0; k < b1.size(); ++k) {
        b1[k] = at(beta, k) + at(gamma, k);
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), k + 1, static_cast<unsigned long>(at(gamma, k)));
        weight *= pw * binomial(b1[k], at(beta, k));
      }
      for (std::size_t k = 0; k < alpha.size(); ++k) weight *= binomial(alpha[k], at(a1, k));
      const long g1 = g - count(gamma) + 1;
      const long delta1 = static_cast<long>(d - 2) * (d - 3) / 2 - g1;
      if (delta1 < 0) return;
      total += weight * tw_severi_number(d - 1, static_cast<int>(delta1), a1, make_profile(b1));
    });
  });
  return total;
}

}  // namespace

Integer tw_severi_number(int d, int delta, const Profile& alpha_in, const Profile& beta_in) {
  if (d < 1 || delta < 0 || !nonnegative(alpha_in) || !nonnegative(beta_in)) return 0;
  const Profile alpha = make_profile(alpha_in);
  const Profile beta = make_profile(beta_in);
  if (weighted_sum(alpha) + weighted_sum(beta) != d) return 0;
  const std::string key = memo_key(d, delta, alpha, beta);
  Integer value;
  if (tw_memo().find(key, value)) return value;
  value = tw_compute(d, delta, alpha, beta);
  tw_memo().store(key, value);
  return value;
}

namespace {

Integer connected_compute(int d, int delta, const Profile& alpha, const Profile& beta) {
  const long g = genus_of(d, delta);
  if (g < 0) return 0;
  const long r = 2L * d + g - 1 + count(beta);
  if (r < 1) return 0;

  // Generating series sum TW t^d lambda^{2g-2} p^r/r! x^alpha/alpha! y^beta.
  const std::size_t width = static_cast<std::size_t>(d);
  std::vector<Variable> vars = {{"t", 1, false}, {"lambda", 0, true}, {"p", 0, false}};
  for (std::size_t k = 1; k <= width; ++k) vars.push_back({"x" + std::to_string(k), 0, false});
  for (std::size_t k = 1; k <= width; ++k) vars.push_back({"y" + std::to_string(k), 0, false});
  const ContextPtr ctx = make_context(std::move(vars));
  auto monomial = [&](long dd, long gg, long rr, const Profile& a, const Profile& b) {
    Monomial m = Monomial::one(ctx->size());
    m[0] = static_cast<int>(dd);
    m[1] = static_cast<int>(2 * gg - 2);
    m[2] = static_cast<int>(rr);
    for (std::size_t k = 0; k < width; ++k) {
      m[3 + k] = static_cast<int>(at(a, k));
      m[3 + width + k] = static_cast<int>(at(b, k));
    }
    return m;
  };
  auto profile_factorial = [](const Profile& p) {
    Integer f = 1;
    for (long c : p) f *= factorial(static_cast<unsigned>(c));
    return f;
  };

  Series tw = Series::constant(ctx, d, 1);
  for_each_subprofile(alpha, [&](const Profile& a1) {
    for_each_subprofile(beta, [&](const Profile& b1) {
      const long d1 = weighted_sum(a1) + weighted_sum(b1);
      if (d1 < 1) return;
      const long g_max = (d1 - 1) * (d1 - 2) / 2;
      for (long g1 = 2 - 2 * d1 - count(b1); g1 <= g_max; ++g1) {
        const long r1 = 2 * d1 + g1 - 1 + count(b1);
        if (r1 > r) break;
        const Integer n = tw_severi_number(static_cast<int>(d1), static_cast<int>(g_max - g1), a1, b1);
        if (n == 0) continue;
        tw.accumulate(monomial(d1, g1, r1, a1, b1),
                      make_rational(n, factorial(static_cast<unsigned>(r1)) * profile_factorial(a1)));
      }
    });
  });
  const Series gw = log(tw);
  const Rational c = coefficient(gw, monomial(d, g, r, alpha, beta)) * factorial(static_cast<unsigned>(r)) *
                     profile_factorial(alpha);
  if (!is_integer(c)) throw DomainError("irreducible Severi count is not an integer");
  return c.get_num();
}

}  // namespace

Integer severi_number(int d, int delta, const Profile& alpha_in, const Profile& beta_in) {
  if (d < 1 || delta < 0 || !nonnegative(alpha_in) || !nonnegative(beta_in)) return 0;
  const Profile alpha = make_profile(alpha_in);
  const Profile beta = make_profile(beta_in);
  if (weighted_sum(alpha) + weighted_sum(beta) != d) return 0;
  const std::string key = memo_key(d, delta, alpha, beta);
  Integer value;
  if (connected_memo().find(key, value)) return value;
  value = connected_compute(d, delta, alpha, beta);
  connected_memo().store(key, value);
  return value;
}

Integer rational_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  Profile beta(1, d);
  return severi_number(d, static_cast<int>(genus_of(d, 0)), {}, beta);
}

std::vector<TableRow> severi_table(int d_max, int delta_max) {
  std::vector<TableRow> rows;
  for (int d = 1; d <= d_max; ++d) {
    const long top = std::min<long>(delta_max, genus_of(d, 0));
    for (int delta = 0; delta <= top; ++delta) {
      const Profile beta(1, d);
      const long r = point_count(d, genus_of(d, delta), {}, beta);
      rows.push_back({d, delta, r, severi_number(d, delta, {}, beta)});
    }
  }
  return rows;
}

}  // namespace sumkit::severi
