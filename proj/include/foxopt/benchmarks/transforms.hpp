#pragma once

#include <functional>
#include <vector>

#include "foxopt/rng.hpp"

namespace foxopt::bench {

using Objective = std::function<double(const Vec&)>;
using Matrix = std::vector<Vec>; // row-major, square

/// Shift and/or rotation applied to a base function's argument:
/// f'(x) = f(R * (x - shift)). Either part may be empty (skipped).
/// Construct through make_transform, which validates orthogonality.
struct TransformSpec {
    Vec shift;       // empty = no shift
    Matrix rotation; // empty = no rotation
};

/// Validates that rotation is orthogonal (R^T R = I within 1e-9) and shapes
/// agree; throws std::invalid_argument otherwise.
TransformSpec make_transform(Vec shift, Matrix rotation);

double apply_transform(const TransformSpec& spec, const Objective& base, const Vec& x);

/// Wraps a base function with a transform, returning a callable.
Objective transformed(TransformSpec spec, Objective base);

/// Weighted sum of transformed bases: f(x) = sum_k w_k * base_k(R_k (x - s_k)).
/// Weights must be non-negative and sum to 1.
struct CompositeSpec {
    std::vector<double> weights;
    std::vector<TransformSpec> transforms;
    std::vector<Objective> bases;
};

CompositeSpec make_composite(std::vector<double> weights, std::vector<TransformSpec> transforms,
                             std::vector<Objective> bases);

double evaluate_composite(const CompositeSpec& spec, const Vec& x);

/// Haar-ish random orthogonal matrix via Gram-Schmidt on a Gaussian matrix.
Matrix random_rotation(RngStream& rng, std::size_t dim);

} // namespace foxopt::bench
