#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace lxb {

namespace detail {

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    constexpr double eps = 1e-15;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 500;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

// Midranks of `values` (average rank across ties), 1-based.
std::vector<double> midranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

double tie_term(const std::vector<double>& values) {
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        total += t * t * t - t;
        i = j + 1;
    }
    return total;
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw StructuralError("incomplete beta needs a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                                  a * std::log(x) + b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double student_t_cdf(double t, double df) {
    if (df <= 0.0) throw StructuralError("t distribution needs df > 0");
    const double x = df / (df + t * t);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_two_sided_p(double t, double df) {
    const double x = df / (df + t * t);
    return regularized_incomplete_beta(0.5 * df, 0.5, x);
}

double student_t_quantile(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) throw StructuralError("t quantile needs p in (0, 1)");
    if (p == 0.5) return 0.0;
    // Symmetric, so solve on the upper half and mirror.
    const bool upper = p > 0.5;
    const double target = upper ? p : 1.0 - p;
    double lo = 0.0, hi = 1.0;
    while (student_t_cdf(hi, df) < target) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, df) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double q = 0.5 * (lo + hi);
    return upper ? q : -q;
}

double rank_sum_exact_p_leq(std::span<const double> a, std::span<const double> b) {
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    if (n1 == 0 || n2 == 0) throw StructuralError("rank-sum needs non-empty samples");
    std::vector<double> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(all);
    const double observed =
        std::accumulate(ranks.begin(), ranks.begin() + static_cast<long>(n1), 0.0);

    // Walk all C(N, n1) subsets with an odometer over sorted rank indices.
    const std::size_t N = n1 + n2;
    std::vector<std::size_t> idx(n1);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    long long leq = 0, total = 0;
    while (true) {
        double w = 0.0;
        for (std::size_t i : idx) w += ranks[i];
        ++total;
        if (w <= observed + 1e-9) ++leq;

        std::size_t pos = n1;
        while (pos > 0) {
            --pos;
            if (idx[pos] != pos + N - n1) break;
            if (pos == 0) {
                pos = n1;
                break;
            }
        }
        if (pos == n1) break;
        ++idx[pos];
        for (std::size_t k = pos + 1; k < n1; ++k) idx[k] = idx[k - 1] + 1;
    }
    return static_cast<double>(leq) / static_cast<double>(total);
}

} // namespace detail

TrialSummary summarize(std::span<const double> samples) {
    if (samples.empty()) throw StructuralError("summarize needs at least one sample");
    TrialSummary s;
    s.n = static_cast<int>(samples.size());
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    const double mean =
        std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(s.n);
    s.average = mean;
    if (s.n > 1) {
        double ss = 0.0;
        for (double v : sorted) ss += (v - mean) * (v - mean);
        s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
    }
    const std::size_t half = sorted.size() / 2;
    s.median = sorted.size() % 2 == 1 ? sorted[half] : 0.5 * (sorted[half - 1] + sorted[half]);
    return s;
}

TTestResult paired_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw StructuralError("paired t test needs equal lengths");
    if (a.size() < 2) throw StructuralError("paired t test needs n >= 2");
    const int n = static_cast<int>(a.size());
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : d) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1));

    TTestResult r;
    r.mean_diff = mean;
    r.std_diff = sd;
    if (sd == 0.0) {
        // Identical-variance degenerate cases: a pure shift or identical data.
        r.std_error = 0.0;
        r.ci_low = r.ci_high = mean;
        r.p = mean == 0.0 ? 1.0 : 0.0;
        r.label = significance_label(r.p);
        return r;
    }
    const double df = n - 1;
    r.std_error = sd / std::sqrt(static_cast<double>(n));
    const double t = mean / r.std_error;
    r.p = detail::student_t_two_sided_p(t, df);
    const double tq = detail::student_t_quantile(0.975, df);
    r.ci_low = mean - tq * r.std_error;
    r.ci_high = mean + tq * r.std_error;
    r.label = significance_label(r.p);
    return r;
}

std::string significance_label(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw StructuralError("p-value outside [0, 1]");
    if (p > 0.05) return "b";
    if (p > 0.001) return "a";
    return "a+";
}

namespace {

WilcoxonResult signed_rank_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw StructuralError("signed-rank test needs equal lengths");
    if (a.empty()) throw StructuralError("signed-rank test needs non-empty samples");

    std::vector<double> abs_d;
    std::vector<int> sign_d;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) {
            abs_d.push_back(std::abs(d));
            sign_d.push_back(d > 0.0 ? 1 : -1);
        }
    }
    WilcoxonResult r;
    r.mode = WilcoxonMode::SignedRank;
    const std::size_t n = abs_d.size();
    if (n == 0) return r; // all differences zero: p = 1, sign '-'

    const std::vector<double> ranks = detail::midranks(abs_d);
    double w_plus = 0.0, w_minus = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        (sign_d[i] > 0 ? w_plus : w_minus) += ranks[i];
    }
    const double t_stat = std::min(w_plus, w_minus);
    const double mu = n * (n + 1) / 4.0;
    const double var = n * (n + 1) * (2.0 * n + 1.0) / 24.0 - detail::tie_term(abs_d) / 48.0;
    r.z = var > 0.0 ? (t_stat - mu) / std::sqrt(var) : 0.0;
    r.sign = w_plus < w_minus ? '+' : '-';

    if (n < 5) {
        // Exact null distribution of W+ over all sign assignments.
        long long leq = 0, geq = 0;
        const long long patterns = 1LL << n;
        for (long long mask = 0; mask < patterns; ++mask) {
            double w = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1LL << i)) w += ranks[i];
            }
            if (w <= w_plus + 1e-9) ++leq;
            if (w >= w_plus - 1e-9) ++geq;
        }
        const double p1 = static_cast<double>(std::min(leq, geq)) / static_cast<double>(patterns);
        r.p = std::min(1.0, 2.0 * p1);
    } else {
        r.p = std::min(1.0, 2.0 * detail::normal_cdf(-std::abs(r.z)));
    }
    return r;
}

WilcoxonResult rank_sum_test(std::span<const double> a, std::span<const double> b) {
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    if (n1 == 0 || n2 == 0) throw StructuralError("rank-sum test needs non-empty samples");
    std::vector<double> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    const std::vector<double> ranks = detail::midranks(all);
    const double w =
        std::accumulate(ranks.begin(), ranks.begin() + static_cast<long>(n1), 0.0);
    const double N = static_cast<double>(n1 + n2);
    const double mu = n1 * (N + 1.0) / 2.0;
    const double tie = detail::tie_term(all);
    const double var = n1 * n2 / 12.0 * ((N + 1.0) - tie / (N * (N - 1.0)));

    WilcoxonResult r;
    r.mode = WilcoxonMode::RankSum;
    r.z = var > 0.0 ? (w - mu) / std::sqrt(var) : 0.0;
    r.sign = w < mu ? '+' : '-';
    if (std::min(n1, n2) < 5) {
        const double p_leq = detail::rank_sum_exact_p_leq(a, b);
        std::vector<double> neg_a(a.begin(), a.end());
        // P(W >= w) by symmetry of the enumeration on negated data.
        for (double& v : neg_a) v = -v;
        std::vector<double> neg_b(b.begin(), b.end());
        for (double& v : neg_b) v = -v;
        const double p_geq = detail::rank_sum_exact_p_leq(neg_a, neg_b);
        r.p = std::min(1.0, 2.0 * std::min(p_leq, p_geq));
    } else if (var == 0.0) {
        r.p = 1.0;
    } else {
        r.p = std::min(1.0, 2.0 * detail::normal_cdf(-std::abs(r.z)));
    }
    return r;
}

} // namespace

WilcoxonResult wilcoxon_test(std::span<const double> a, std::span<const double> b,
                             WilcoxonMode mode) {
    return mode == WilcoxonMode::SignedRank ? signed_rank_test(a, b) : rank_sum_test(a, b);
}

} // namespace lxb
