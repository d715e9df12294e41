#pragma once

#include <cstdint>
#include <vector>

namespace qkl {
namespace stats {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

// Wilson score interval for a binomial proportion (default 95%).
Interval wilson(uint64_t successes, uint64_t trials, double z = 1.959963984540054);

// Three-sigma binomial band around an observed rate.
double binomial_sigma(uint64_t successes, uint64_t trials);

// Upper-tail p-value of a chi-square statistic with `df` degrees of freedom.
double chi_square_p_value(double statistic, uint64_t df);

// Pearson chi-square test of observed counts against equal cell expectation.
double chi_square_uniform_p(const std::vector<uint64_t> &observed);

// Two-proportion z-test p-value (two-sided), pooled variance.
double two_proportion_p_value(uint64_t s1, uint64_t n1, uint64_t s2, uint64_t n2);

// Hoeffding sample count: n with P(|mean - p| >= eps) <= delta.
uint64_t hoeffding_samples(double eps, double delta);

}  // namespace stats
}  // namespace qkl
