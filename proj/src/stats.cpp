#include "gotcent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gotcent::stats {

namespace {

void check_sample(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("paired sample: length mismatch");
    }
    if (a.size() < 2) {
        throw std::invalid_argument("paired sample: need at least 2 observations");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isfinite(a[i]) || !std::isfinite(b[i])) {
            throw std::invalid_argument("paired sample: entries must be finite");
        }
    }
}

// Pairs (i, j), i < j, with tied values, counted per tied group: t*(t-1)/2.
std::int64_t tie_pairs(std::vector<double> sorted_values) {
    std::sort(sorted_values.begin(), sorted_values.end());
    std::int64_t pairs = 0;
    std::size_t i = 0;
    while (i < sorted_values.size()) {
        std::size_t j = i;
        while (j < sorted_values.size() && sorted_values[j] == sorted_values[i]) {
            ++j;
        }
        const std::int64_t t = static_cast<std::int64_t>(j - i);
        pairs += t * (t - 1) / 2;
        i = j;
    }
    return pairs;
}

// Number of pairs i < j with values[i] > values[j] (strict), via merge sort.
std::int64_t count_inversions(std::vector<double>& values, std::vector<double>& scratch,
                              std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) {
        return 0;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t inversions = count_inversions(values, scratch, lo, mid) +
                              count_inversions(values, scratch, mid, hi);
    std::size_t left = lo, right = mid, out = lo;
    while (left < mid && right < hi) {
        if (values[right] < values[left]) {
            inversions += static_cast<std::int64_t>(mid - left);
            scratch[out++] = values[right++];
        } else {
            scratch[out++] = values[left++];
        }
    }
    while (left < mid) {
        scratch[out++] = values[left++];
    }
    while (right < hi) {
        scratch[out++] = values[right++];
    }
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              values.begin() + static_cast<std::ptrdiff_t>(lo));
    return inversions;
}

}  // namespace

std::vector<double> rank(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("rank: empty input");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("rank: entries must be finite");
        }
    }
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) {
            ++j;
        }
        // Positions i..j-1 (0-based) share the mean of ranks i+1..j.
        const double mean_rank = static_cast<double>(i + 1 + j) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = mean_rank;
        }
        i = j;
    }
    return ranks;
}

std::optional<double> pearson(std::span<const double> a, std::span<const double> b) {
    check_sample(a, b);
    const std::size_t n = a.size();
    double mean_a = 0.0, mean_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_a += a[i];
        mean_b += b[i];
    }
    mean_a /= static_cast<double>(n);
    mean_b /= static_cast<double>(n);

    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa == 0.0 || sbb == 0.0) {
        return std::nullopt;  // constant variable
    }
    return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> a, std::span<const double> b) {
    check_sample(a, b);
    const std::vector<double> ra = rank(a);
    const std::vector<double> rb = rank(b);
    return pearson(ra, rb);
}

std::optional<double> kendall(std::span<const double> a, std::span<const double> b,
                              KendallVariant variant) {
    check_sample(a, b);
    const std::size_t n = a.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (a[i] != a[j]) {
            return a[i] < a[j];
        }
        return b[i] < b[j];
    });

    // Tie bookkeeping over the (a, b)-sorted sequence: n1 = pairs tied in a,
    // n3 = pairs tied in both.
    std::int64_t n1 = 0, n3 = 0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j < n && a[order[j]] == a[order[i]]) {
                ++j;
            }
            const std::int64_t t = static_cast<std::int64_t>(j - i);
            n1 += t * (t - 1) / 2;
            std::size_t k = i;
            while (k < j) {
                std::size_t m = k;
                while (m < j && b[order[m]] == b[order[k]]) {
                    ++m;
                }
                const std::int64_t u = static_cast<std::int64_t>(m - k);
                n3 += u * (u - 1) / 2;
                k = m;
            }
            i = j;
        }
    }

    // With b ascending inside each tied-a group, strict inversions of the
    // b sequence are exactly the discordant pairs.
    std::vector<double> b_sorted(n);
    for (std::size_t i = 0; i < n; ++i) {
        b_sorted[i] = b[order[i]];
    }
    const std::int64_t n2 = tie_pairs(b_sorted);
    std::vector<double> scratch(n);
    const std::int64_t discordant = count_inversions(b_sorted, scratch, 0, n);

    const std::int64_t n0 = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
    const std::int64_t numerator = n0 - n1 - n2 + n3 - 2 * discordant;  // s_c - s_d

    if (variant == KendallVariant::tau_a) {
        return static_cast<double>(numerator) / static_cast<double>(n0);
    }
    if (n0 == n1 || n0 == n2) {
        return std::nullopt;  // a fully tied variable: tau_b denominator is 0
    }
    const double denom = std::sqrt(static_cast<double>(n0 - n1)) *
                         std::sqrt(static_cast<double>(n0 - n2));
    return std::clamp(static_cast<double>(numerator) / denom, -1.0, 1.0);
}

}  // namespace gotcent::stats
