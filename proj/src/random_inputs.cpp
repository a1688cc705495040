#include "sumkit/random_inputs.hpp"

#include "sumkit/errors.hpp"

namespace sumkit::random_inputs {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational small_rational(Rng& rng, int max_num, int max_den) {
  int p = 0;
  while (p == 0) p = uniform(rng, -max_num, max_num);
  return make_rational(p, uniform(rng, 1, max_den));
}

ContextPtr property_context() {
  static const ContextPtr ctx = make_context({{"x", 1, false}, {"y", 2, false}, {"lambda", 0, true}});
  return ctx;
}

Series series(Rng& rng, const ContextPtr& ctx, int cutoff, int max_terms, int min_grading, bool with_lambda) {
  Series s(ctx, cutoff);
  const auto lambda = ctx->laurent_index();
  const int n = uniform(rng, 1, max_terms);
  for (int t = 0; t < n; ++t) {
    const int target = uniform(rng, min_grading, cutoff);
    Monomial m = Monomial::one(ctx->size());
    // Fill the grading from the weighted variables in random order.
    int left = target;
    for (int tries = 0; left > 0 && tries < 8; ++tries) {
      const auto v = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ctx->size()) - 1));
      const int w = (*ctx)[v].weight;
      if (w == 0 || w > left) continue;
      const int e = uniform(rng, 1, left / w);
      m[v] += e;
      left -= e * w;
    }
    for (std::size_t v = 0; v < ctx->size() && left > 0; ++v) {
      const int w = (*ctx)[v].weight;
      if (w == 1) {
        m[v] += left;
        left = 0;
      }
    }
    if (lambda && with_lambda) m[*lambda] = uniform(rng, -2, 2);
    s.accumulate(m, small_rational(rng));
  }
  return s;
}

RelSeries rel_series(Rng& rng, const GeometryPtr& geom, int cutoff, int max_terms, int min_area,
                     const std::vector<std::string>& tags) {
  RelSeries s(geom, cutoff);
  const int n = uniform(rng, 1, max_terms);
  for (int t = 0; t < n; ++t) {
    const int a = uniform(rng, min_area, cutoff);
    const int k = uniform(rng, 0, cutoff - a);
    const ClassKey cls{a, k};
    RelKey key{cls, 2 * uniform(rng, -2, 1), {}, tags[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(tags.size()) - 1))]};
    for (const auto& form : geom->end_degree) {
      const auto choices = enumerate_multisets(static_cast<int>(form(cls)), geom->basis_size);
      key.contacts.push_back(choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choices.size()) - 1))]);
    }
    s.accumulate(key, small_rational(rng));
  }
  return s;
}

IntersectionMatrix pairing(Rng& rng, int size) {
  while (true) {
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(size),
                                            std::vector<Rational>(static_cast<std::size_t>(size), 0));
    for (int i = 0; i < size; ++i) {
      for (int j = i; j < size; ++j) {
        const Rational v = uniform(rng, -2, 2);
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      }
    }
    IntersectionMatrix q(std::move(rows));
    try {
      (void)q.inverse();
      return q;
    } catch (const DomainError&) {
    }
  }
}

}  // namespace sumkit::random_inputs
