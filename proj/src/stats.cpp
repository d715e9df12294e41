#include "qkl/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "qkl/errors.hpp"

namespace qkl {
namespace stats {

Interval wilson(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) return Interval{0.0, 1.0};
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (p + z2 / (2.0 * n)) / denom;
    double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    Interval out;
    out.lo = std::max(0.0, center - half);
    out.hi = std::min(1.0, center + half);
    return out;
}

double binomial_sigma(uint64_t successes, uint64_t trials) {
    if (trials == 0) return 0.5;
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    return std::sqrt(std::max(p * (1.0 - p), 1.0 / n) / n);
}

double chi_square_p_value(double statistic, uint64_t df) {
    if (df == 0) throw bad_parameter_error("chi_square_p_value: df must be >= 1");
    if (statistic <= 0) return 1.0;
    boost::math::chi_squared dist(static_cast<double>(df));
    return boost::math::cdf(boost::math::complement(dist, statistic));
}

double chi_square_uniform_p(const std::vector<uint64_t> &observed) {
    if (observed.size() < 2) throw bad_parameter_error("chi_square_uniform_p: need >= 2 cells");
    uint64_t total = 0;
    for (uint64_t c : observed) total += c;
    if (total == 0) return 1.0;
    double expected = static_cast<double>(total) / static_cast<double>(observed.size());
    double stat = 0.0;
    for (uint64_t c : observed) {
        double d = static_cast<double>(c) - expected;
        stat += d * d / expected;
    }
    return chi_square_p_value(stat, observed.size() - 1);
}

double two_proportion_p_value(uint64_t s1, uint64_t n1, uint64_t s2, uint64_t n2) {
    if (n1 == 0 || n2 == 0) throw bad_parameter_error("two_proportion_p_value: empty sample");
    double p1 = static_cast<double>(s1) / n1;
    double p2 = static_cast<double>(s2) / n2;
    double pooled = static_cast<double>(s1 + s2) / static_cast<double>(n1 + n2);
    double var = pooled * (1.0 - pooled) * (1.0 / n1 + 1.0 / n2);
    if (var == 0.0) return 1.0;
    double z = (p1 - p2) / std::sqrt(var);
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

uint64_t hoeffding_samples(double eps, double delta) {
    if (eps <= 0 || eps >= 1 || delta <= 0 || delta >= 1)
        throw bad_parameter_error("hoeffding_samples: eps, delta must be in (0,1)");
    return static_cast<uint64_t>(std::ceil(std::log(2.0 / delta) / (2.0 * eps * eps)));
}

}  // namespace stats
}  // namespace qkl
