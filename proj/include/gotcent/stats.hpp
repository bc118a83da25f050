#pragma once

#include <optional>
#include <span>
#include <vector>

namespace gotcent::stats {

enum class KendallVariant { tau_a, tau_b };

/// Fractional ranks (1-based). Tied values receive the mean of the rank
/// positions they occupy, so ranks always sum to s*(s+1)/2.
std::vector<double> rank(std::span<const double> values);

/// Product-moment correlation coefficient. Returns nullopt when either
/// variable is constant (the coefficient is undefined, not zero).
std::optional<double> pearson(std::span<const double> a, std::span<const double> b);

/// Pearson correlation of the fractional ranks. On tie-free input this equals
/// the classic 1 - 6*sum(d_i^2)/(s*(s^2-1)) form exactly.
std::optional<double> spearman(std::span<const double> a, std::span<const double> b);

/// Kendall rank correlation in O(s log s) by merge-sort inversion counting.
/// tau_a divides (concordant - discordant) by s*(s-1)/2; tau_b applies the
/// tie correction to the denominator and is nullopt when either variable is
/// fully tied.
std::optional<double> kendall(std::span<const double> a, std::span<const double> b,
                              KendallVariant variant = KendallVariant::tau_b);

}  // namespace gotcent::stats
