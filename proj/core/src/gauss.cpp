#include "probsent/gauss.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace probsent {

namespace {
constexpr double kLog2Pi = 1.8378770664093453;  // log(2*pi)
}

DiagonalGaussian standard_gaussian(int dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    DiagonalGaussian g;
    g.mean.assign(static_cast<size_t>(dim), 0.0);
    g.var.assign(static_cast<size_t>(dim), 1.0);
    return g;
}

double entropy(const DiagonalGaussian& g) {
    const int k = g.dim();
    double log_det = 0.0;
    for (double v : g.var) log_det += std::log(std::max(v, kVarFloor));
    return 0.5 * k * (kLog2Pi + 1.0) + 0.5 * log_det;
}

double kl_to_standard(const DiagonalGaussian& g) {
    double acc = 0.0;
    for (size_t j = 0; j < g.var.size(); ++j) {
        const double v = g.var[j];
        const double m = g.mean[j];
        acc += v + m * m - 1.0 - std::log(std::max(v, kVarFloor));
    }
    return 0.5 * acc;
}

double expected_log_inner_product(const DiagonalGaussian& g1,
                                  const DiagonalGaussian& g2) {
    if (g1.dim() != g2.dim())
        throw std::invalid_argument("dimension mismatch between Gaussians");
    const int k = g1.dim();
    double acc = 0.0;
    for (int j = 0; j < k; ++j) {
        const double s = std::max(g1.var[j] + g2.var[j], kVarFloor);
        const double d = g1.mean[j] - g2.mean[j];
        acc += -0.5 * std::log(s) - 0.5 * d * d / s;
    }
    return acc - 0.5 * k * kLog2Pi;
}

double cosine(std::span<const double> a, std::span<const double> b,
              bool* degenerate) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch between vectors");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (size_t j = 0; j < a.size(); ++j) {
        dot += a[j] * b[j];
        na += a[j] * a[j];
        nb += b[j] * b[j];
    }
    na = std::sqrt(na);
    nb = std::sqrt(nb);
    if (na < kNormGuard || nb < kNormGuard) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return dot / (na * nb);
}

}  // namespace probsent
