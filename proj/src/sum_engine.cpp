#include "sumkit/sum_engine.hpp"

#include "sumkit/errors.hpp"
#include "sumkit/series.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sumkit {

long LinearForm::operator()(const ClassKey& a) const {
  if (a.size() != coeffs.size()) throw std::invalid_argument("class key has the wrong dimension");
  long r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += coeffs[i] * a[i];
  return r;
}

ClassKey class_add(const ClassKey& a, const ClassKey& b) {
  if (a.size() != b.size()) throw std::invalid_argument("class keys of different dimension");
  ClassKey r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

namespace {

ClassKey product_glue(const ClassKey& x, const ClassKey& y) {
  // (a1, k) # (a2, k) = (a1 + a2, k); the engine only pairs equal k.
  return {x.at(0) + y.at(0), x.at(1)};
}

}  // namespace

GeometryPtr product_neck_geometry(int basis_size) {
  auto g = std::make_shared<Geometry>();
  g->name = "product-neck";
  g->class_dim = 2;
  g->end_degree = {LinearForm{{0, 1}}, LinearForm{{0, 1}}};
  g->canonical = LinearForm{{0, 0}};
  g->grading = LinearForm{{1, 1}};
  g->projected_area = LinearForm{{1, 0}};
  g->basis_size = basis_size;
  g->fiber_class = [](long d) { return ClassKey{0, d}; };
  g->self_gluing = product_glue;
  return g;
}

GeometryPtr product_end_geometry(int basis_size) {
  auto g = std::make_shared<Geometry>();
  g->name = "product-end";
  g->class_dim = 2;
  g->end_degree = {LinearForm{{0, 1}}};
  g->canonical = LinearForm{{0, 0}};
  g->grading = LinearForm{{1, 1}};
  g->projected_area = LinearForm{{1, 0}};
  g->basis_size = basis_size;
  return g;
}

GeometryPtr product_closed_geometry() {
  auto g = std::make_shared<Geometry>();
  g->name = "product-closed";
  g->class_dim = 2;
  g->canonical = LinearForm{{0, 0}};
  g->grading = LinearForm{{1, 1}};
  g->projected_area = LinearForm{{1, 0}};
  return g;
}

std::string combine_tags(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + ";" + b;
}

RelSeries::RelSeries(GeometryPtr geometry, int cutoff) : geom_(std::move(geometry)), cutoff_(cutoff) {
  if (!geom_) throw std::invalid_argument("null geometry");
  if (cutoff_ < 0) throw std::invalid_argument("negative cutoff");
}

void RelSeries::accumulate(const RelKey& key, const Rational& c) {
  if (static_cast<int>(key.cls.size()) != geom_->class_dim) {
    throw std::invalid_argument("class key dimension does not match geometry " + geom_->name);
  }
  if (static_cast<int>(key.contacts.size()) != end_count()) {
    throw std::invalid_argument("contact data for " + std::to_string(key.contacts.size()) + " ends, geometry has " +
                                std::to_string(end_count()));
  }
  if (key.chi % 2 != 0) throw std::invalid_argument("Euler characteristic must be even");
  if (c == 0) return;
  for (int e = 0; e < end_count(); ++e) {
    const auto& m = key.contacts[static_cast<std::size_t>(e)];
    if (m.degree() != geom_->end_degree[static_cast<std::size_t>(e)](key.cls)) {
      throw std::invalid_argument("contact degree " + std::to_string(m.degree()) + " differs from A.V at end " +
                                  std::to_string(e));
    }
    if (m.max_index() >= geom_->basis_size) throw std::invalid_argument("contact class index out of range");
  }
  const long g = geom_->grading(key.cls);
  if (g < 0) throw std::invalid_argument("class with negative grading");
  if (g > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational RelSeries::coefficient(const RelKey& key) const {
  if (static_cast<int>(key.cls.size()) == geom_->class_dim && geom_->grading(key.cls) > cutoff_) {
    throw CutoffExceeded("relative coefficient requested beyond cutoff");
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

RelSeries& RelSeries::operator+=(const RelSeries& other) {
  if (geom_ != other.geom_ && geom_->end_count() != other.end_count()) {
    throw ContextMismatch("adding relative series with different ends");
  }
  if (other.cutoff_ < cutoff_) *this = truncate(*this, other.cutoff_);
  for (const auto& [k, c] : other.terms_) accumulate(k, c);
  return *this;
}

RelSeries& RelSeries::operator-=(const RelSeries& other) {
  RelSeries neg = other;
  neg *= Rational(-1);
  return *this += neg;
}

RelSeries& RelSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool RelSeries::operator==(const RelSeries& other) const {
  return cutoff_ == other.cutoff_ && end_count() == other.end_count() && terms_ == other.terms_;
}

RelSeries operator+(const RelSeries& a, const RelSeries& b) {
  RelSeries r = a;
  r += b;
  return r;
}

RelSeries operator-(const RelSeries& a, const RelSeries& b) {
  RelSeries r = a;
  r -= b;
  return r;
}

RelSeries truncate(const RelSeries& s, int cutoff) {
  RelSeries r(s.geometry(), std::min(cutoff, s.cutoff()));
  for (const auto& [k, c] : s.terms()) r.accumulate(k, c);
  return r;
}

Gluing neck_gluing(const GeometryPtr& neck) {
  if (!neck->self_gluing) throw std::invalid_argument("geometry " + neck->name + " is not a neck");
  return {neck, neck->self_gluing};
}

Gluing absorb_right(const GeometryPtr& x, const GeometryPtr& neck) {
  if (!neck->self_gluing) throw std::invalid_argument("geometry " + neck->name + " is not a neck");
  return {x, neck->self_gluing};
}

Gluing absorb_left(const GeometryPtr& neck, const GeometryPtr& y) {
  if (!neck->self_gluing) throw std::invalid_argument("geometry " + neck->name + " is not a neck");
  return {y, [glue = neck->self_gluing](const ClassKey& n, const ClassKey& b) { return glue(b, n); }};
}

// ---------------------------------------------------------------------------
// exp / log between connected and disconnected counts.

namespace {

struct GeneratingLayout {
  ContextPtr ctx;
  std::size_t lambda = 0;
  std::map<std::tuple<int, int, int>, std::size_t> z;  // (end, a, i) -> variable
};

GeneratingLayout generating_layout(const RelSeries& s) {
  const auto& g = *s.geometry();
  std::vector<Variable> vars;
  for (int c = 0; c < g.class_dim; ++c) {
    const long w = g.grading.coeffs[static_cast<std::size_t>(c)];
    if (w < 0) throw DomainError("class grading with negative weight");
    vars.push_back({"t" + std::to_string(c), static_cast<int>(w), false});
  }
  GeneratingLayout layout;
  layout.lambda = vars.size();
  vars.push_back({"lambda", 0, true});
  std::set<std::tuple<int, int, int>> used;
  for (const auto& [k, c] : s.terms()) {
    for (std::size_t e = 0; e < k.contacts.size(); ++e) {
      for (const auto& [ai, n] : k.contacts[e].counts()) used.emplace(static_cast<int>(e), ai.first, ai.second);
    }
  }
  for (const auto& [e, a, i] : used) {
    layout.z[{e, a, i}] = vars.size();
    vars.push_back({"z" + std::to_string(e) + "_" + std::to_string(a) + "_" + std::to_string(i), 0, false});
  }
  layout.ctx = make_context(std::move(vars));
  return layout;
}

Integer contact_factorials(const RelKey& k) {
  Integer f = 1;
  for (const auto& m : k.contacts) f *= multiset_stats(m).factorial;
  return f;
}

Series to_generating_series(const RelSeries& s, const GeneratingLayout& layout) {
  const auto& g = *s.geometry();
  Series out(layout.ctx, s.cutoff());
  for (const auto& [k, c] : s.terms()) {
    if (k.tag != "1") throw DomainError("exp/log of relative series needs the trivial constraint tag");
    Monomial m = Monomial::one(layout.ctx->size());
    for (int i = 0; i < g.class_dim; ++i) {
      if (k.cls[static_cast<std::size_t>(i)] < 0) throw DomainError("exp/log needs nonnegative class keys");
      m[static_cast<std::size_t>(i)] = static_cast<int>(k.cls[static_cast<std::size_t>(i)]);
    }
    m[layout.lambda] = -k.chi;
    for (std::size_t e = 0; e < k.contacts.size(); ++e) {
      for (const auto& [ai, n] : k.contacts[e].counts()) {
        m[layout.z.at({static_cast<int>(e), ai.first, ai.second})] = n;
      }
    }
    out.accumulate(m, c / contact_factorials(k));
  }
  return out;
}

RelSeries from_generating_series(const Series& f, const GeneratingLayout& layout, const GeometryPtr& geom,
                                 int cutoff) {
  RelSeries out(geom, cutoff);
  for (const auto& [m, c] : f.terms()) {
    RelKey k;
    for (int i = 0; i < geom->class_dim; ++i) k.cls.push_back(m[static_cast<std::size_t>(i)]);
    k.chi = -m[layout.lambda];
    k.contacts.assign(static_cast<std::size_t>(geom->end_count()), ContactMultiset{});
    for (const auto& [eai, var] : layout.z) {
      const auto& [e, a, i] = eai;
      if (m[var] != 0) k.contacts[static_cast<std::size_t>(e)].add(a, i, m[var]);
    }
    out.accumulate(k, c * contact_factorials(k));
  }
  return out;
}

}  // namespace

RelSeries tw_from_gw(const RelSeries& gw) {
  for (const auto& [k, c] : gw.terms()) {
    if (gw.geometry()->grading(k.cls) == 0) {
      throw DomainError("tw_from_gw: connected series has a grading-0 term");
    }
  }
  auto layout = generating_layout(gw);
  return from_generating_series(exp(to_generating_series(gw, layout)), layout, gw.geometry(), gw.cutoff());
}

RelSeries gw_from_tw(const RelSeries& tw) {
  auto layout = generating_layout(tw);
  Series f = to_generating_series(tw, layout);
  return from_generating_series(log(f), layout, tw.geometry(), tw.cutoff());
}

// ---------------------------------------------------------------------------
// Convolution.

namespace {

struct SideKey {
  ClassKey cls;
  int chi;
  std::vector<ContactMultiset> outer;
  std::string tag;

  auto operator<=>(const SideKey&) const = default;
};

using SideGroups = std::map<SideKey, std::map<ContactMultiset, Rational>>;

// Splits every key into (outer data, contact multiset at the glued end).
SideGroups group_by_glued_end(const RelSeries& s, bool glued_is_last) {
  SideGroups out;
  for (const auto& [k, c] : s.terms()) {
    SideKey sk{k.cls, k.chi, {}, k.tag};
    const std::size_t n = k.contacts.size();
    const std::size_t glued = glued_is_last ? n - 1 : 0;
    for (std::size_t e = 0; e < n; ++e) {
      if (e != glued) sk.outer.push_back(k.contacts[e]);
    }
    out[std::move(sk)][k.contacts[glued]] = c;
  }
  return out;
}

void check_gluable(const RelSeries& x, const RelSeries& y, const IntersectionMatrix& q, const Gluing& gluing) {
  if (x.end_count() < 1 || y.end_count() < 1) throw ContextMismatch("convolution needs a divisor end on each side");
  if (x.geometry()->basis_size != y.geometry()->basis_size) {
    throw ContextMismatch("glued ends have different bases of H_*(V)");
  }
  if (static_cast<int>(q.size()) != x.geometry()->basis_size) {
    throw ContextMismatch("pairing matrix does not match the basis of H_*(V)");
  }
  if (!gluing.result || !gluing.class_map) throw std::invalid_argument("incomplete gluing data");
  if (gluing.result->end_count() != x.end_count() + y.end_count() - 2) {
    throw ContextMismatch("result geometry has the wrong number of ends");
  }
}

std::vector<ContactMultiset> concat(const std::vector<ContactMultiset>& a, const std::vector<ContactMultiset>& b) {
  std::vector<ContactMultiset> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

RelSeries convolve(const RelSeries& x, const RelSeries& y, const IntersectionMatrix& q, const Gluing& gluing) {
  check_gluable(x, y, q, gluing);
  const int cutoff = std::min(x.cutoff(), y.cutoff());
  RelSeries out(gluing.result, cutoff);
  const auto xs = group_by_glued_end(x, true);
  const auto ys = group_by_glued_end(y, false);
  const auto& x_deg = x.geometry()->end_degree.back();
  const auto& y_deg = y.geometry()->end_degree.front();
  const int basis = x.geometry()->basis_size;

  std::map<long, std::vector<ContactMultiset>> multisets;
  std::map<ContactMultiset, MultisetCombination> duals;

  for (const auto& [xk, xvals] : xs) {
    const long deg = x_deg(xk.cls);
    auto ms = multisets.find(deg);
    if (ms == multisets.end()) ms = multisets.emplace(deg, enumerate_multisets(static_cast<int>(deg), basis)).first;
    for (const auto& [yk, yvals] : ys) {
      if (y_deg(yk.cls) != deg) continue;
      const ClassKey cls = gluing.class_map(xk.cls, yk.cls);
      if (gluing.result->grading(cls) > cutoff) continue;
      for (const auto& m : ms->second) {
        auto xv = xvals.find(m);
        if (xv == xvals.end()) continue;
        auto dual = duals.find(m);
        if (dual == duals.end()) dual = duals.emplace(m, dual_multiset(m, q)).first;
        Rational yv = 0;
        for (const auto& [n, w] : dual->second) {
          auto it = yvals.find(n);
          if (it != yvals.end()) yv += w * it->second;
        }
        if (yv == 0) continue;
        const auto st = multiset_stats(m);
        RelKey key{cls, xk.chi + yk.chi - 2 * static_cast<int>(st.length), concat(xk.outer, yk.outer),
                   combine_tags(xk.tag, yk.tag)};
        out.accumulate(key, Rational(st.product) / Rational(st.factorial) * xv->second * yv);
      }
    }
  }
  return out;
}

RelSeries convolve_via_operator(const RelSeries& x, const RelSeries& y, const IntersectionMatrix& q,
                                const Gluing& gluing) {
  check_gluable(x, y, q, gluing);
  const int cutoff = std::min(x.cutoff(), y.cutoff());
  RelSeries out(gluing.result, cutoff);
  const int basis = x.geometry()->basis_size;

  int max_a = 0;
  for (const auto* s : {&x, &y}) {
    for (const auto& [k, c] : s->terms()) {
      for (const auto& m : k.contacts) {
        for (const auto& [ai, n] : m.counts()) max_a = std::max(max_a, ai.first);
      }
    }
  }

  // Variables z_{a,i} (x side), w_{a,j} (y side) and the laurent lambda.
  std::vector<Variable> vars;
  auto z_index = [&](int a, int i) { return static_cast<std::size_t>((a - 1) * basis + i); };
  auto w_index = [&](int a, int j) { return static_cast<std::size_t>(max_a * basis + (a - 1) * basis + j); };
  for (int a = 1; a <= max_a; ++a) {
    for (int i = 0; i < basis; ++i) vars.push_back({"z" + std::to_string(a) + "_" + std::to_string(i), 0, false});
  }
  for (int a = 1; a <= max_a; ++a) {
    for (int j = 0; j < basis; ++j) vars.push_back({"w" + std::to_string(a) + "_" + std::to_string(j), 0, false});
  }
  const std::size_t lambda = vars.size();
  vars.push_back({"lambda", 0, true});
  const auto ctx = make_context(std::move(vars));

  // Outer data without chi: chi rides on lambda^{-chi}.
  struct Outer {
    ClassKey cls;
    std::vector<ContactMultiset> outer;
    std::string tag;
    auto operator<=>(const Outer&) const = default;
  };
  auto build = [&](const RelSeries& s, bool glued_last) {
    std::map<Outer, Series> groups;
    for (const auto& [k, c] : s.terms()) {
      const std::size_t n = k.contacts.size();
      const std::size_t glued = glued_last ? n - 1 : 0;
      Outer o{k.cls, {}, k.tag};
      for (std::size_t e = 0; e < n; ++e) {
        if (e != glued) o.outer.push_back(k.contacts[e]);
      }
      Monomial mono = Monomial::one(ctx->size());
      mono[lambda] = -k.chi;
      for (const auto& [ai, cnt] : k.contacts[glued].counts()) {
        mono[glued_last ? z_index(ai.first, ai.second) : w_index(ai.first, ai.second)] = cnt;
      }
      auto it = groups.try_emplace(o, Series(ctx, 0)).first;
      it->second.accumulate(mono, c / multiset_stats(k.contacts[glued]).factorial);
    }
    return groups;
  };
  const auto xs = build(x, true);
  const auto ys = build(y, false);

  const Series lambda_sq = Series::monomial(ctx, 0, {{"lambda", 2}});
  auto apply_d = [&](const Series& f) {
    Series r(ctx, 0);
    for (int a = 1; a <= max_a; ++a) {
      for (int i = 0; i < basis; ++i) {
        const Series dz = differentiate(f, (*ctx)[z_index(a, i)].name);
        if (dz.is_zero()) continue;
        for (int j = 0; j < basis; ++j) {
          const Rational& qij = q(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          if (qij == 0) continue;
          Series term = differentiate(dz, (*ctx)[w_index(a, j)].name);
          if (term.is_zero()) continue;
          r += Rational(a * qij) * (lambda_sq * term);
        }
      }
    }
    return r;
  };

  for (const auto& [xo, px] : xs) {
    for (const auto& [yo, py] : ys) {
      const ClassKey cls = gluing.class_map(xo.cls, yo.cls);
      if (gluing.result->grading(cls) > cutoff) continue;
      Series term = px * py;
      Series total = term;
      for (int k = 1; !term.is_zero(); ++k) {
        term = Rational(1, k) * apply_d(term);
        total += term;
      }
      for (const auto& [mono, c] : total.terms()) {
        bool closed = true;
        for (std::size_t v = 0; v < lambda; ++v) closed = closed && mono[v] == 0;
        if (!closed) continue;
        RelKey key{cls, -mono[lambda], concat(xo.outer, yo.outer), combine_tags(xo.tag, yo.tag)};
        out.accumulate(key, c);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Neck algebra.

RelSeries identity_element(const GeometryPtr& neck, const IntersectionMatrix& q, int cutoff) {
  if (!neck->fiber_class || neck->end_count() != 2) {
    throw std::invalid_argument("identity element needs a two-ended neck geometry");
  }
  if (static_cast<int>(q.size()) != neck->basis_size) throw ContextMismatch("pairing does not match neck basis");
  const IntersectionMatrix q_inv = q.inverse();
  RelSeries out(neck, cutoff);
  for (long d = 0;; ++d) {
    const ClassKey cls = neck->fiber_class(d);
    const long g = neck->grading(cls);
    if (g < d) throw DomainError("fiber classes must have grading at least their degree");
    if (g > cutoff) break;
    for (const auto& n : enumerate_multisets(static_cast<int>(d), neck->basis_size)) {
      for (const auto& [m, w] : dual_multiset(n, q_inv)) {
        const auto st = multiset_stats(m);
        out.accumulate(RelKey{cls, 2 * static_cast<int>(st.length), {n, m}, "1"},
                       w * Rational(st.factorial) / Rational(st.product));
      }
    }
  }
  return out;
}

namespace {

RelSeries nontrivial_part(const RelSeries& tw_f, const RelSeries& unit) {
  RelSeries r = tw_f - unit;
  for (const auto& [k, c] : r.terms()) {
    if (tw_f.geometry()->projected_area(k.cls) <= 0) {
      throw DomainError("neck series: unit part differs from the identity");
    }
  }
  return r;
}

}  // namespace

RelSeries neck_power(const RelSeries& tw_f, const IntersectionMatrix& q, int n) {
  if (n < 0) throw std::invalid_argument("negative convolution power");
  const auto glue = neck_gluing(tw_f.geometry());
  RelSeries p = identity_element(tw_f.geometry(), q, tw_f.cutoff());
  for (int i = 0; i < n; ++i) p = convolve(p, tw_f, q, glue);
  return p;
}

RelSeries s_matrix(const RelSeries& tw_f, const IntersectionMatrix& q) {
  const auto glue = neck_gluing(tw_f.geometry());
  const RelSeries unit = identity_element(tw_f.geometry(), q, tw_f.cutoff());
  const RelSeries r = nontrivial_part(tw_f, unit);
  RelSeries s = unit;
  RelSeries term = unit;
  // Each factor of R adds at least one unit of projected area, which the
  // grading bounds, so the loop ends once the area exceeds the cutoff.
  for (int m = 1;; ++m) {
    term = convolve(term, r, q, glue);
    term *= Rational(-1);
    if (term.is_zero()) break;
    if (m > tw_f.cutoff()) throw DomainError("s_matrix: R is not nilpotent within the cutoff");
    s += term;
  }
  return s;
}

RelSeries neck_identity(const RelSeries& tw_f, const IntersectionMatrix& q, int n) {
  if (n < 1) throw std::invalid_argument("neck identity needs N >= 1");
  const auto glue = neck_gluing(tw_f.geometry());
  const RelSeries unit = identity_element(tw_f.geometry(), q, tw_f.cutoff());
  (void)nontrivial_part(tw_f, unit);
  RelSeries sum(tw_f.geometry(), tw_f.cutoff());
  RelSeries power = unit;  // tw_f^{*(k-1)}
  for (int k = 1; k <= 2 * n; ++k) {
    RelSeries term = power;
    Rational c(binomial(2 * n, k));
    if (k % 2 == 0) c = -c;
    term *= c;
    sum += term;
    if (k < 2 * n) power = convolve(power, tw_f, q, glue);
  }
  return sum;
}

Integer inclusion_exclusion_check(long l) {
  if (l < 1) throw std::invalid_argument("inclusion-exclusion needs l >= 1");
  Integer total = 0;
  for (long k = 1; k <= l; ++k) {
    if (k % 2 == 1) {
      total += binomial(l, k);
    } else {
      total -= binomial(l, k);
    }
  }
  return total;
}

long moduli_dimension(const Geometry& geom, const ClassKey& cls, int chi, int n_marked, const ContactSeq& s,
                      int dim_x) {
  const auto st = seq_stats(s);
  return -2 * geom.canonical(cls) + (static_cast<long>(chi) * (dim_x - 6)) / 2 + 2L * n_marked -
         2 * (st.degree - st.length);
}

long sum_canonical(long k_x, long k_y, long beta) { return k_x + k_y + 2 * beta; }

// ---------------------------------------------------------------------------
// JSON.

nlohmann::json to_json(const Geometry& g) {
  nlohmann::json ends = nlohmann::json::array();
  for (const auto& f : g.end_degree) ends.push_back(f.coeffs);
  return {{"name", g.name},
          {"class_dim", g.class_dim},
          {"end_degree", ends},
          {"canonical", g.canonical.coeffs},
          {"grading", g.grading.coeffs},
          {"projected_area", g.projected_area.coeffs},
          {"basis_size", g.basis_size}};
}

nlohmann::json to_json(const RelSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : s.terms()) {
    nlohmann::json contacts = nlohmann::json::array();
    for (const auto& m : k.contacts) contacts.push_back(m.to_string());
    terms.push_back({{"class", k.cls},
                     {"chi", k.chi},
                     {"contacts", contacts},
                     {"tag", k.tag},
                     {"coeff", to_fraction_string(c)}});
  }
  return {{"geometry", to_json(*s.geometry())}, {"cutoff", s.cutoff()}, {"terms", terms}};
}

RelSeries rel_series_from_json(const nlohmann::json& j, GeometryPtr geometry) {
  RelSeries s(std::move(geometry), j.at("cutoff").get<int>());
  for (const auto& t : j.at("terms")) {
    RelKey k;
    k.cls = t.at("class").get<ClassKey>();
    k.chi = t.at("chi").get<int>();
    for (const auto& m : t.at("contacts")) k.contacts.push_back(ContactMultiset::parse(m.get<std::string>()));
    k.tag = t.at("tag").get<std::string>();
    s.accumulate(k, parse_rational(t.at("coeff").get<std::string>()));
  }
  return s;
}

}  // namespace sumkit
