#pragma once

// Seeded random inputs for the property checks.

#include "sumkit/contact.hpp"
#include "sumkit/series.hpp"
#include "sumkit/sum_engine.hpp"

#include <random>
#include <string>
#include <vector>

namespace sumkit::random_inputs {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_num, 1 <= q <= max_den.
Rational small_rational(Rng& rng, int max_num = 5, int max_den = 4);

/// The context {x (weight 1), y (weight 2), lambda (Laurent)}.
ContextPtr property_context();

/// Up to max_terms random monomials with grading in [min_grading, cutoff];
/// lambda exponents in [-2, 2] unless with_lambda is false.
Series series(Rng& rng, const ContextPtr& ctx, int cutoff, int max_terms, int min_grading, bool with_lambda);

/// Random terms on the given geometry with classes (a, k), a >= min_area,
/// a + k <= cutoff, chi even in [-4, 2] and tags drawn from `tags`.
RelSeries rel_series(Rng& rng, const GeometryPtr& geom, int cutoff, int max_terms, int min_area,
                     const std::vector<std::string>& tags);

/// Symmetric nonsingular pairing of the given size.
IntersectionMatrix pairing(Rng& rng, int size);

}  // namespace sumkit::random_inputs
