#include "sumkit/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace sumkit::catalog {

namespace {

long degree_of(const ContactSeq& s) { return seq_stats(s).degree; }

ContactSeq to_seq(const ContactMultiset& m) {
  ContactSeq out;
  for (const auto& [key, count] : m.counts()) {
    for (int c = 0; c < count; ++c) out.push_back({key.first, key.second});
  }
  return out;
}

ContactSeq concat(ContactSeq a, const ContactSeq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long count_fixed(const ContactSeq& s) {
  long n = 0;
  for (const auto& c : s) n += c.index == kPointClass ? 1 : 0;
  return n;
}

void check_p1_degrees(int d, const ContactSeq& s, const ContactSeq& s2) {
  if (d < 1) throw std::invalid_argument("P^1 cover degree must be >= 1");
  if (degree_of(s) != d || degree_of(s2) != d) {
    throw std::invalid_argument("contact degrees must both equal the cover degree");
  }
}

ContactMultiset single(int a, int index) {
  ContactMultiset m;
  m.add(a, index);
  return m;
}

}  // namespace

GeometryPtr p1_geometry() {
  static const GeometryPtr geom = [] {
    auto g = std::make_shared<Geometry>();
    g->name = "p1";
    g->class_dim = 1;
    g->end_degree = {LinearForm{{1}}, LinearForm{{1}}};
    g->canonical = LinearForm{{-2}};
    g->grading = LinearForm{{1}};
    g->projected_area = LinearForm{{0}};
    g->basis_size = 1;
    g->fiber_class = [](long d) { return ClassKey{d}; };
    g->self_gluing = [](const ClassKey& x, const ClassKey&) { return x; };
    return GeometryPtr(g);
  }();
  return geom;
}

Rational p1_rel(int d, int g, const ContactSeq& s, const ContactSeq& s2) {
  check_p1_degrees(d, s, s2);
  if (g != 0 || s.size() != 1 || s2.size() != 1) return 0;
  return make_rational(1, d);
}

Rational p1_rel_branch(int d, int g, const ContactSeq& s, const ContactSeq& s2) {
  check_p1_degrees(d, s, s2);
  if (g != 0 || s.size() + s2.size() != 3) return 0;
  return 1;
}

RelSeries p1_series(int cutoff, bool with_branch) {
  RelSeries out(p1_geometry(), cutoff);
  for (int d = 1; d <= cutoff; ++d) {
    out.accumulate({{d}, 2, {single(d, 0), single(d, 0)}, "1"}, make_rational(1, d));
    if (!with_branch) continue;
    for (int a = 1; 2 * a <= d; ++a) {
      ContactMultiset pair;
      pair.add(a, 0);
      pair.add(d - a, 0);
      out.accumulate({{d}, 2, {single(d, 0), pair}, "b"}, 1);
      out.accumulate({{d}, 2, {pair, single(d, 0)}, "b"}, 1);
    }
  }
  return out;
}

ContextPtr fiber_context() {
  static const ContextPtr ctx = make_context({{"t", 1, false}});
  return ctx;
}

Series torus_rel_series(int cutoff) {
  // Each d-fold cover of the fiber is counted once per divisor d of n.
  Series g(fiber_context(), cutoff);
  for (int d = 1; d <= cutoff; ++d) {
    for (int n = d; n <= cutoff; n += d) g.accumulate(Monomial({n}), d);
  }
  return g;
}

Series t2s2_series(T2S2Family family, int cutoff) {
  const Series g = torus_rel_series(cutoff);
  // Marked-point count d on the d-fold fiber cover: d sigma(d) t^d = t G'(t).
  Series marked(fiber_context(), cutoff);
  for (const auto& [m, c] : g.terms()) marked.accumulate(m, c * m[0]);
  switch (family) {
    case T2S2Family::DfAbsolute: return Rational(2) * g;
    case T2S2Family::DfRelF: return g;
    case T2S2Family::SdfAbsolute: return Rational(2) * marked;
    case T2S2Family::SdfRelF: return marked;
  }
  throw std::invalid_argument("unknown T^2 x S^2 family");
}

bool t2s2_two_fiber_supported(T2S2Family family) {
  return family == T2S2Family::SdfAbsolute || family == T2S2Family::SdfRelF;
}

T2S2Family parse_t2s2_family(const std::string& name) {
  if (name == "df-absolute") return T2S2Family::DfAbsolute;
  if (name == "df-relF") return T2S2Family::DfRelF;
  if (name == "s+df-absolute") return T2S2Family::SdfAbsolute;
  if (name == "s+df-relF") return T2S2Family::SdfRelF;
  throw std::invalid_argument("unknown T^2 x S^2 family '" + name + "'");
}

std::string to_string(T2S2Family family) {
  switch (family) {
    case T2S2Family::DfAbsolute: return "df-absolute";
    case T2S2Family::DfRelF: return "df-relF";
    case T2S2Family::SdfAbsolute: return "s+df-absolute";
    case T2S2Family::SdfRelF: return "s+df-relF";
  }
  return "?";
}

GeometryPtr ruled_geometry(int n) {
  if (n < 0) throw std::invalid_argument("ruled surface index must be >= 0");
  auto g = std::make_shared<Geometry>();
  g->name = "ruled:" + std::to_string(n);
  g->class_dim = 2;
  g->end_degree = {LinearForm{{0, 1}}, LinearForm{{n, 1}}};
  g->canonical = LinearForm{{-n - 2, -2}};
  g->grading = LinearForm{{1, 1}};
  g->projected_area = LinearForm{{1, 0}};
  g->basis_size = 2;
  return g;
}

RuledValue ruled_rel(int n, int a, int b, int g, const ContactSeq& s, const ContactSeq& s2,
                     RuledConstraint constraint) {
  if (degree_of(s) != b || degree_of(s2) != b + static_cast<long>(n) * a) {
    throw std::invalid_argument("contact degrees must be b on E and b + n a on S");
  }
  for (const auto& c : concat(s, s2)) {
    if (c.index != kPointClass && c.index != kFundamentalClass) {
      throw std::invalid_argument("contact class index must be 0 (point) or 1 (fundamental)");
    }
  }
  const bool single_fiber = a == 0 && g == 0 && b > 0 && s.size() == 1 && s2.size() == 1;
  if (constraint == RuledConstraint::None) {
    if (single_fiber) return {make_rational(1, b), true};
    return {0, false};
  }
  if (single_fiber) return {1, false};
  if (a == 1 && g == 0 && b >= 0) return {1, false};
  return {0, false};
}

Rational ruled_rel_indexed(int n, int a, int b, int g, const ContactSeq& s, const ContactSeq& s2,
                           RuledConstraint constraint) {
  const RuledValue v = ruled_rel(n, a, b, g, s, s2, constraint);
  if (v.value == 0) return 0;
  if (v.divisor_tensor) {
    const int i = s[0].index;
    const int j = s2[0].index;
    return i != j ? v.value : Rational(0);
  }
  const long fixed = count_fixed(s) + count_fixed(s2);
  const long total = static_cast<long>(s.size() + s2.size());
  if (a == 0) return fixed == 0 ? v.value : Rational(0);
  return fixed == total ? v.value : Rational(0);
}

RelSeries ruled_series(int n, int cutoff, bool with_point) {
  RelSeries out(ruled_geometry(n), cutoff);
  for (int b = 1; b <= cutoff; ++b) {
    out.accumulate({{0, b}, 2, {single(b, kPointClass), single(b, kFundamentalClass)}, "1"}, make_rational(1, b));
    out.accumulate({{0, b}, 2, {single(b, kFundamentalClass), single(b, kPointClass)}, "1"}, make_rational(1, b));
    if (with_point) {
      out.accumulate({{0, b}, 2, {single(b, kFundamentalClass), single(b, kFundamentalClass)}, "p"}, 1);
    }
  }
  if (!with_point) return out;
  for (int b = 0; 1 + b <= cutoff; ++b) {
    for (const auto& m : enumerate_multisets(b, 1)) {
      for (const auto& m2 : enumerate_multisets(b + n, 1)) out.accumulate({{1, b}, 2, {m, m2}, "p"}, 1);
    }
  }
  return out;
}

bool vanishing_filter(int a, int g, int deg_alpha) { return 2 * a + g <= 1 + deg_alpha; }

CatalogEntry parse_entry(const std::string& name) {
  if (name == "p1" || name == "torus" || name == "t2xs2") return {name, {}};
  const std::string prefix = "ruled:";
  if (name.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    const std::string rest = name.substr(prefix.size());
    int n = -1;
    try {
      n = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && !rest.empty() && n >= 0) return {"ruled", {n}};
  }
  throw std::invalid_argument("unknown catalog entry '" + name + "' (expected p1, torus, t2xs2, ruled:n)");
}

ConsistencyReport dimension_consistency(int max_n, int max_a, int max_b, int max_g) {
  ConsistencyReport rep;
  auto fail = [&](const std::string& what) { rep.failures.push_back(what); };

  // F_n relative to S + E: the cycle left after the point constraints must
  // have the dimension of the contact constraint it pairs with.
  for (int n = 0; n <= max_n; ++n) {
    const auto geom = ruled_geometry(n);
    for (int a = 0; a <= max_a; ++a) {
      for (int b = 0; b <= max_b; ++b) {
        if (a == 0 && b == 0) continue;
        for (int g = 0; g <= max_g; ++g) {
          for (const auto& ms : enumerate_multisets(b, 2)) {
            for (const auto& ms2 : enumerate_multisets(b + n * a, 2)) {
              const ContactSeq s = to_seq(ms);
              const ContactSeq s2 = to_seq(ms2);
              for (auto constraint : {RuledConstraint::None, RuledConstraint::Point}) {
                ++rep.checked;
                const Rational v = ruled_rel_indexed(n, a, b, g, s, s2, constraint);
                if (v == 0) continue;
                ++rep.nonzero;
                const int points = constraint == RuledConstraint::Point ? 1 : 0;
                const long dim = moduli_dimension(*geom, {a, b}, 2 - 2 * g, points, concat(s, s2), 4);
                const long cycle = dim / 2 - 2L * points;
                const long fixed = count_fixed(s) + count_fixed(s2);
                if (!vanishing_filter(a, g, points) || cycle != fixed) {
                  std::ostringstream out;
                  out << "ruled:" << n << " a=" << a << " b=" << b << " g=" << g << " points=" << points
                      << " s=" << ms.to_string() << " s'=" << ms2.to_string() << " cycle=" << cycle
                      << " fixed=" << fixed;
                  fail(out.str());
                }
              }
            }
          }
        }
      }
    }
  }

  // P^1 relative to two points: V is a point, so the cycle must be
  // zero-dimensional after the optional fixed branch point.
  const auto p1 = p1_geometry();
  for (int d = 1; d <= max_b; ++d) {
    for (int g = 0; g <= max_g; ++g) {
      for (const auto& ms : enumerate_multisets(d, 1)) {
        for (const auto& ms2 : enumerate_multisets(d, 1)) {
          const ContactSeq s = to_seq(ms);
          const ContactSeq s2 = to_seq(ms2);
          const long half = moduli_dimension(*p1, {d}, 2 - 2 * g, 0, concat(s, s2), 2) / 2;
          rep.checked += 2;
          if (p1_rel(d, g, s, s2) != 0) {
            ++rep.nonzero;
            if (half != 0) fail("p1 d=" + std::to_string(d) + " g=" + std::to_string(g) + " s=" + ms.to_string());
          }
          if (p1_rel_branch(d, g, s, s2) != 0) {
            ++rep.nonzero;
            if (half - 1 != 0) {
              fail("p1 branch d=" + std::to_string(d) + " g=" + std::to_string(g) + " s=" + ms.to_string());
            }
          }
        }
      }
    }
  }

  // T^2 x S^2 with classes (s-coefficient, d): genus one, the point and fixed
  // contact constraints of each family cut the moduli space to points.
  auto t2s2 = std::make_shared<Geometry>();
  t2s2->name = "t2xs2";
  t2s2->class_dim = 2;
  t2s2->canonical = LinearForm{{-2, 0}};
  t2s2->grading = LinearForm{{1, 1}};
  t2s2->projected_area = LinearForm{{0, 0}};
  struct FamilyShape {
    T2S2Family family;
    long s_coeff;
    int points;
    ContactSeq contacts;
  };
  const std::vector<FamilyShape> shapes = {
      {T2S2Family::DfAbsolute, 0, 0, {}},
      {T2S2Family::DfRelF, 0, 0, {}},
      {T2S2Family::SdfAbsolute, 1, 2, {}},
      {T2S2Family::SdfRelF, 1, 1, {{1, kPointClass}}},
  };
  for (const auto& shape : shapes) {
    const Series series = t2s2_series(shape.family, max_b);
    for (const auto& [m, c] : series.terms()) {
      ++rep.checked;
      if (c == 0) continue;
      ++rep.nonzero;
      const long dim = moduli_dimension(*t2s2, {shape.s_coeff, m[0]}, 0, shape.points, shape.contacts, 4);
      const long cut = dim - 4L * shape.points - 2 * count_fixed(shape.contacts);
      if (cut != 0) fail("t2xs2 " + to_string(shape.family) + " d=" + std::to_string(m[0]));
    }
  }
  return rep;
}

Rational p1_self_gluing(int d) {
  const RelSeries p1 = p1_series(d);
  const RelSeries glued = convolve(p1, p1, IntersectionMatrix::identity(1), neck_gluing(p1_geometry()));
  return glued.coefficient({{d}, 2, {single(d, 0), single(d, 0)}, "1"});
}

}  // namespace sumkit::catalog
