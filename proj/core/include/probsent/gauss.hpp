// Closed-form math for diagonal Gaussians plus plain vector cosine.
#pragma once

#include <span>
#include <vector>

namespace probsent {

// Floor applied to every variance that enters a log or a division.
inline constexpr double kVarFloor = 1e-8;

// Norm guard below which cosine reports a degenerate vector.
inline constexpr double kNormGuard = 1e-12;

// Multivariate normal with diagonal covariance, stored as mean and
// per-dimension variance. var[j] must be > 0 once the floor is applied.
struct DiagonalGaussian {
    std::vector<double> mean;
    std::vector<double> var;

    int dim() const { return static_cast<int>(mean.size()); }
};

// N(0, I_k).
DiagonalGaussian standard_gaussian(int dim);

// Differential entropy in nats: (k/2)*log(2*pi*e) + (1/2)*sum_j log var[j].
double entropy(const DiagonalGaussian& g);

// KL(g || N(0, I)) = (1/2)*sum_j (var[j] + mean[j]^2 - 1 - log var[j]).
double kl_to_standard(const DiagonalGaussian& g);

// Log of the expected inner product of two Gaussians: the log-density of
// N(0; m1 - m2, v1 + v2). Symmetric in its arguments.
double expected_log_inner_product(const DiagonalGaussian& g1,
                                  const DiagonalGaussian& g2);

// <a, b> / (|a| * |b|). If either norm falls under the guard, returns 0 and
// sets *degenerate when provided.
double cosine(std::span<const double> a, std::span<const double> b,
              bool* degenerate = nullptr);

}  // namespace probsent
