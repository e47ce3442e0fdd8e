#include "foxopt/benchmarks/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace foxopt::bench {

namespace {

void check_orthogonal(const Matrix& r) {
    const std::size_t n = r.size();
    for (const Vec& row : r) {
        if (row.size() != n) {
            throw std::invalid_argument("rotation: matrix not square");
        }
    }
    // R^T R = I within 1e-9, checked entrywise.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                dot += r[k][i] * r[k][j];
            }
            const double expect = i == j ? 1.0 : 0.0;
            if (std::fabs(dot - expect) > 1e-9) {
                throw std::invalid_argument("rotation: matrix not orthogonal");
            }
        }
    }
}

Vec mat_vec(const Matrix& r, const Vec& x) {
    Vec out(r.size(), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            acc += r[i][j] * x[j];
        }
        out[i] = acc;
    }
    return out;
}

} // namespace

TransformSpec make_transform(Vec shift, Matrix rotation) {
    if (!rotation.empty()) {
        check_orthogonal(rotation);
        if (!shift.empty() && shift.size() != rotation.size()) {
            throw std::invalid_argument("transform: shift/rotation size mismatch");
        }
    }
    return TransformSpec{std::move(shift), std::move(rotation)};
}

double apply_transform(const TransformSpec& spec, const Objective& base, const Vec& x) {
    Vec z = x;
    if (!spec.shift.empty()) {
        if (spec.shift.size() != z.size()) {
            throw std::invalid_argument("transform: shift/input size mismatch");
        }
        for (std::size_t i = 0; i < z.size(); ++i) {
            z[i] -= spec.shift[i];
        }
    }
    if (!spec.rotation.empty()) {
        if (spec.rotation.size() != z.size()) {
            throw std::invalid_argument("transform: rotation/input size mismatch");
        }
        z = mat_vec(spec.rotation, z);
    }
    return base(z);
}

Objective transformed(TransformSpec spec, Objective base) {
    return [spec = std::move(spec), base = std::move(base)](const Vec& x) {
        return apply_transform(spec, base, x);
    };
}

CompositeSpec make_composite(std::vector<double> weights, std::vector<TransformSpec> transforms,
                             std::vector<Objective> bases) {
    if (weights.empty() || weights.size() != transforms.size() || weights.size() != bases.size()) {
        throw std::invalid_argument("composite: component count mismatch");
    }
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) {
            throw std::invalid_argument("composite: negative weight");
        }
        sum += w;
    }
    if (std::fabs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("composite: weights must sum to 1");
    }
    return CompositeSpec{std::move(weights), std::move(transforms), std::move(bases)};
}

double evaluate_composite(const CompositeSpec& spec, const Vec& x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < spec.weights.size(); ++k) {
        acc += spec.weights[k] * apply_transform(spec.transforms[k], spec.bases[k], x);
    }
    return acc;
}

Matrix random_rotation(RngStream& rng, std::size_t dim) {
    Matrix m(dim, Vec(dim));
    for (Vec& row : m) {
        for (double& v : row) {
            v = rng.normal();
        }
    }
    // Modified Gram-Schmidt over rows.
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                dot += m[i][k] * m[j][k];
            }
            for (std::size_t k = 0; k < dim; ++k) {
                m[i][k] -= dot * m[j][k];
            }
        }
        double norm = 0.0;
        for (double v : m[i]) {
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            // Degenerate draw; restart the row with a fresh sample.
            for (double& v : m[i]) {
                v = rng.normal();
            }
            --i;
            continue;
        }
        for (double& v : m[i]) {
            v /= norm;
        }
    }
    return m;
}

} // namespace foxopt::bench
