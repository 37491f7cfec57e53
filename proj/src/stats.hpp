#ifndef LXBBSCA_STATS_HPP
#define LXBBSCA_STATS_HPP

#include <span>
#include <string>

#include "core.hpp"

namespace lxb {

/// Descriptive statistics of one sample of trial outcomes.
struct TrialSummary {
    double min = 0.0;
    double max = 0.0;
    double std = 0.0; // sample standard deviation, n-1 denominator
    double average = 0.0;
    double median = 0.0;
    int n = 0;
};

struct TTestResult {
    double mean_diff = 0.0;
    double std_diff = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0; // 95% confidence interval for the mean difference
    double ci_high = 0.0;
    double p = 1.0; // two-sided
    std::string label; // "a+", "a" or "b"
};

enum class WilcoxonMode { SignedRank, RankSum };

struct WilcoxonResult {
    double z = 0.0;
    double p = 1.0; // two-sided
    char sign = '-'; // '+' when the first sample is smaller, '-' otherwise
    WilcoxonMode mode = WilcoxonMode::SignedRank;
};

/// min/max exact, arithmetic mean, n-1 standard deviation, midpoint median
/// for even n. Throws on an empty sample.
TrialSummary summarize(std::span<const double> samples);

/// Paired two-sided t test on a - b with a 95% confidence interval.
/// Degenerate zero-variance differences map to p = 0 (nonzero mean) or
/// p = 1 (zero mean).
TTestResult paired_t_test(std::span<const double> a, std::span<const double> b);

/// "a+" for p <= 0.001, "a" for 0.001 < p <= 0.05, "b" for p > 0.05.
std::string significance_label(double p);

/// Signed-rank (paired, the default) or rank-sum Wilcoxon test. Midranks
/// resolve ties; zero differences are dropped; samples of effective size
/// below 5 use exact enumeration instead of the normal approximation.
WilcoxonResult wilcoxon_test(std::span<const double> a, std::span<const double> b,
                             WilcoxonMode mode = WilcoxonMode::SignedRank);

namespace detail {

/// I_x(a, b) by Lentz continued fraction, ~1e-14 relative accuracy.
double regularized_incomplete_beta(double a, double b, double x);
double normal_cdf(double z);
double student_t_cdf(double t, double df);
/// Two-sided tail mass of |T| >= |t|.
double student_t_two_sided_p(double t, double df);
/// Inverse CDF for p in (0, 1).
double student_t_quantile(double p, double df);
/// Exact P(rank sum of `a` <= observed) under the null, by enumeration.
double rank_sum_exact_p_leq(std::span<const double> a, std::span<const double> b);

} // namespace detail

} // namespace lxb

#endif
