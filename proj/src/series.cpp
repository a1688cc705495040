#include "sumkit/series.hpp"

#include "sumkit/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace sumkit {

VariableContext::VariableContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& v = vars_[i];
    if (v.name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v.name).second) throw std::invalid_argument("duplicate variable " + v.name);
    if (v.weight < 0) throw std::invalid_argument("negative grading weight on " + v.name);
    if (v.laurent) {
      if (laurent_) throw std::invalid_argument("at most one laurent variable");
      if (v.weight != 0) throw std::invalid_argument("laurent variable must have weight 0");
      laurent_ = i;
    }
  }
}

std::optional<std::size_t> VariableContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VariableContext::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable " + std::string(name));
  return *i;
}

ContextPtr make_context(std::vector<Variable> vars) {
  return std::make_shared<const VariableContext>(std::move(vars));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

namespace {

void require_same_context(const Series& a, const Series& b) {
  if (a.context() == b.context()) return;
  if (*a.context() == *b.context()) return;
  throw ContextMismatch("series over different variable contexts");
}

// Terms bucketed by weighted grading 0..cutoff.
using Piece = std::vector<std::pair<Monomial, Rational>>;

std::vector<Piece> graded_pieces(const Series& f) {
  std::vector<Piece> pieces(static_cast<std::size_t>(f.cutoff()) + 1);
  for (const auto& [m, c] : f.terms()) pieces[static_cast<std::size_t>(f.grading(m))].emplace_back(m, c);
  return pieces;
}

void accumulate_product(Series::TermMap& out, const Piece& a, const Piece& b, const Rational& scale) {
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Rational c = ca * cb * scale;
      auto [it, inserted] = out.try_emplace(ma * mb, c);
      if (!inserted) it->second += c;
    }
  }
}

Piece to_piece(Series::TermMap&& m) {
  Piece p;
  p.reserve(m.size());
  for (auto& [k, v] : m) {
    if (v != 0) p.emplace_back(k, std::move(v));
  }
  return p;
}

}  // namespace

Series::Series(ContextPtr ctx, int cutoff) : ctx_(std::move(ctx)), cutoff_(cutoff) {
  if (!ctx_) throw std::invalid_argument("null variable context");
  if (cutoff_ < 0) throw std::invalid_argument("negative cutoff");
}

Series Series::constant(ContextPtr ctx, int cutoff, const Rational& c) {
  Series s(std::move(ctx), cutoff);
  s.accumulate(Monomial::one(s.ctx_->size()), c);
  return s;
}

Series Series::variable(ContextPtr ctx, int cutoff, std::string_view name) {
  return monomial(std::move(ctx), cutoff, {{name, 1}});
}

Series Series::monomial(ContextPtr ctx, int cutoff,
                        std::initializer_list<std::pair<std::string_view, int>> powers,
                        const Rational& c) {
  Series s(std::move(ctx), cutoff);
  Monomial m = Monomial::one(s.ctx_->size());
  for (const auto& [name, e] : powers) m[s.ctx_->index(name)] += e;
  s.accumulate(m, c);
  return s;
}

Series Series::from_terms(ContextPtr ctx, int cutoff, TermMap terms) {
  Series s(std::move(ctx), cutoff);
  for (auto& [m, c] : terms) s.accumulate(m, c);
  return s;
}

int Series::grading(const Monomial& m) const {
  int g = 0;
  for (std::size_t i = 0; i < m.size(); ++i) g += (*ctx_)[i].weight * m[i];
  return g;
}

void Series::accumulate(const Monomial& m, const Rational& c) {
  if (m.size() != ctx_->size()) throw std::invalid_argument("monomial length does not match context");
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 && !(*ctx_)[i].laurent) {
      throw std::invalid_argument("negative exponent on non-laurent variable " + (*ctx_)[i].name);
    }
  }
  if (c == 0 || grading(m) > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
    return;
  }
  if (auto li = ctx_->laurent_index()) floor_ = std::min(floor_, m[*li]);
}

void Series::lower_floor(int floor) { floor_ = std::min(floor_, floor); }

Series& Series::operator+=(const Series& other) {
  require_same_context(*this, other);
  if (other.cutoff_ < cutoff_) *this = truncate(*this, other.cutoff_);
  for (const auto& [m, c] : other.terms_) accumulate(m, c);
  floor_ = std::min(floor_, other.floor_);
  return *this;
}

Series& Series::operator-=(const Series& other) { return *this += -other; }

Series& Series::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

bool Series::operator==(const Series& other) const {
  return cutoff_ == other.cutoff_ && *ctx_ == *other.ctx_ && terms_ == other.terms_;
}

Series operator+(const Series& a, const Series& b) {
  Series r = a;
  r += b;
  return r;
}

Series operator-(const Series& a, const Series& b) {
  Series r = a;
  r -= b;
  return r;
}

Series operator-(const Series& a) {
  Series r = a;
  r *= Rational(-1);
  return r;
}

Series operator*(const Rational& c, const Series& a) {
  Series r = a;
  r *= c;
  return r;
}

Series operator*(const Series& a, const Series& b) { return mul(a, b); }

Series add(const Series& a, const Series& b) { return a + b; }

Series mul(const Series& a, const Series& b) {
  require_same_context(a, b);
  const int cutoff = std::min(a.cutoff(), b.cutoff());
  auto pa = graded_pieces(truncate(a, cutoff));
  auto pb = graded_pieces(truncate(b, cutoff));
  Series::TermMap out;
  for (int i = 0; i <= cutoff; ++i) {
    for (int j = 0; i + j <= cutoff; ++j) {
      accumulate_product(out, pa[static_cast<std::size_t>(i)], pb[static_cast<std::size_t>(j)], 1);
    }
  }
  Series r = Series::from_terms(a.context(), cutoff, std::move(out));
  r.lower_floor(a.laurent_floor() + b.laurent_floor());
  return r;
}

Series pow(const Series& a, unsigned n) {
  Series result = Series::constant(a.context(), a.cutoff(), 1);
  Series base = a;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

// exp and log run the Euler-operator recurrences theta(E) = E * theta(f) and
// theta(f) = f * theta(L), one graded piece at a time.
Series exp(const Series& f) {
  auto pieces = graded_pieces(f);
  if (!pieces[0].empty()) throw DomainError("exp: argument has a nonzero grading-0 part");
  const int cutoff = f.cutoff();
  std::vector<Piece> e(pieces.size());
  e[0].emplace_back(Monomial::one(f.context()->size()), Rational(1));
  for (int n = 1; n <= cutoff; ++n) {
    Series::TermMap acc;
    for (int k = 1; k <= n; ++k) {
      accumulate_product(acc, pieces[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(n - k)],
                         make_rational(k, n));
    }
    e[static_cast<std::size_t>(n)] = to_piece(std::move(acc));
  }
  Series r(f.context(), cutoff);
  for (auto& piece : e) {
    for (auto& [m, c] : piece) r.accumulate(m, c);
  }
  r.lower_floor(f.laurent_floor() * cutoff);
  return r;
}

Series log(const Series& f) {
  auto pieces = graded_pieces(f);
  const Monomial unit = Monomial::one(f.context()->size());
  if (pieces[0].size() != 1 || pieces[0][0].first != unit || pieces[0][0].second != 1) {
    throw DomainError("log: grading-0 part must be exactly 1");
  }
  const int cutoff = f.cutoff();
  // theta_l[n] holds n * L_n.
  std::vector<Piece> theta_l(pieces.size());
  for (int n = 1; n <= cutoff; ++n) {
    Series::TermMap acc;
    for (const auto& [m, c] : pieces[static_cast<std::size_t>(n)]) acc[m] += c * n;
    for (int k = 1; k < n; ++k) {
      accumulate_product(acc, pieces[static_cast<std::size_t>(k)], theta_l[static_cast<std::size_t>(n - k)], -1);
    }
    theta_l[static_cast<std::size_t>(n)] = to_piece(std::move(acc));
  }
  Series r(f.context(), cutoff);
  for (int n = 1; n <= cutoff; ++n) {
    for (auto& [m, c] : theta_l[static_cast<std::size_t>(n)]) r.accumulate(m, c / n);
  }
  r.lower_floor(f.laurent_floor() * cutoff);
  return r;
}

Series inverse(const Series& f) {
  auto pieces = graded_pieces(f);
  const Monomial unit = Monomial::one(f.context()->size());
  if (pieces[0].size() != 1 || pieces[0][0].first != unit) {
    throw DomainError("inverse: grading-0 part must be a nonzero constant");
  }
  const Rational c0 = pieces[0][0].second;
  const Rational neg_inv = -1 / c0;
  const int cutoff = f.cutoff();
  std::vector<Piece> g(pieces.size());
  g[0].emplace_back(unit, 1 / c0);
  for (int n = 1; n <= cutoff; ++n) {
    Series::TermMap acc;
    for (int k = 1; k <= n; ++k) {
      accumulate_product(acc, pieces[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(n - k)], neg_inv);
    }
    g[static_cast<std::size_t>(n)] = to_piece(std::move(acc));
  }
  Series r(f.context(), cutoff);
  for (auto& piece : g) {
    for (auto& [m, c] : piece) r.accumulate(m, c);
  }
  r.lower_floor(f.laurent_floor() * cutoff);
  return r;
}

Series differentiate(const Series& f, std::string_view var) {
  const std::size_t v = f.context()->index(var);
  const int w = (*f.context())[v].weight;
  if (f.cutoff() < w) throw DomainError("differentiate: cutoff below the variable's weight");
  Series r(f.context(), f.cutoff() - w);
  for (const auto& [m, c] : f.terms()) {
    if (m[v] == 0) continue;
    Monomial d = m;
    d[v] -= 1;
    r.accumulate(d, c * m[v]);
  }
  r.lower_floor(f.laurent_floor() - ((*f.context())[v].laurent ? 1 : 0));
  return r;
}

Series euler_operator(const Series& f) {
  Series r(f.context(), f.cutoff());
  for (const auto& [m, c] : f.terms()) r.accumulate(m, c * f.grading(m));
  r.lower_floor(f.laurent_floor());
  return r;
}

Series truncate(const Series& f, int cutoff) {
  if (cutoff >= f.cutoff()) {
    if (cutoff == f.cutoff()) return f;
    throw DomainError("truncate: cannot raise the cutoff of a truncated series");
  }
  Series r(f.context(), cutoff);
  for (const auto& [m, c] : f.terms()) r.accumulate(m, c);
  r.lower_floor(f.laurent_floor());
  return r;
}

Rational coefficient(const Series& f, const Monomial& mono) {
  if (mono.size() != f.context()->size()) throw std::invalid_argument("monomial length does not match context");
  if (f.grading(mono) > f.cutoff()) {
    throw CutoffExceeded("coefficient requested beyond cutoff " + std::to_string(f.cutoff()));
  }
  auto it = f.terms().find(mono);
  return it == f.terms().end() ? Rational(0) : it->second;
}

Rational coefficient(const Series& f, std::initializer_list<std::pair<std::string_view, int>> powers) {
  Monomial m = Monomial::one(f.context()->size());
  for (const auto& [name, e] : powers) m[f.context()->index(name)] += e;
  return coefficient(f, m);
}

std::string to_text(const Series& f) {
  std::ostringstream out;
  const auto& ctx = *f.context();
  for (const auto& [m, c] : f.terms()) {
    out << to_fraction_string(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) out << ' ' << ctx[i].name << '^' << m[i];
    }
    out << '\n';
  }
  return out.str();
}

Series from_text(ContextPtr ctx, int cutoff, std::string_view text) {
  Series s(ctx, cutoff);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string coeff;
    fields >> coeff;
    Monomial m = Monomial::one(ctx->size());
    std::string factor;
    while (fields >> factor) {
      auto caret = factor.find('^');
      if (caret == std::string::npos) throw std::invalid_argument("malformed factor " + factor);
      int e = 0;
      const char* first = factor.data() + caret + 1;
      const char* last = factor.data() + factor.size();
      auto [ptr, ec] = std::from_chars(first, last, e);
      if (ec != std::errc{} || ptr != last) throw std::invalid_argument("malformed exponent in " + factor);
      m[ctx->index(factor.substr(0, caret))] += e;
    }
    s.accumulate(m, parse_rational(coeff));
  }
  return s;
}

}  // namespace sumkit
