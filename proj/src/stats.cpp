#include "scl/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace scl::stats {

namespace {

// Average ranks (1-based) over the pooled sample.
std::vector<double> average_ranks(const std::vector<double>& pooled,
                                  std::vector<double>* tie_counts) {
    const std::size_t n = pooled.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        if (tie_counts && j > i) tie_counts->push_back(static_cast<double>(j - i + 1));
        i = j + 1;
    }
    return ranks;
}

// Exact two-sided p over all C(n1+n2, n1) rank assignments, tie-free case.
double exact_p(std::size_t n1, std::size_t n2, double u_obs) {
    const std::size_t n = n1 + n2;
    std::vector<std::size_t> comb(n1);
    std::iota(comb.begin(), comb.end(), 0);
    std::size_t total = 0, cnt_le = 0, cnt_ge = 0;
    const double eps = 1e-9;
    while (true) {
        double rank_sum = 0.0;
        for (std::size_t c : comb) rank_sum += static_cast<double>(c + 1);
        const double u = rank_sum - 0.5 * static_cast<double>(n1 * (n1 + 1));
        ++total;
        if (u <= u_obs + eps) ++cnt_le;
        if (u >= u_obs - eps) ++cnt_ge;
        // next combination
        std::size_t i = n1;
        while (i > 0 && comb[i - 1] == n - n1 + i - 1) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t k = i; k < n1; ++k) comb[k] = comb[k - 1] + 1;
    }
    const double p = 2.0 * static_cast<double>(std::min(cnt_le, cnt_ge)) /
                     static_cast<double>(total);
    return std::min(1.0, p);
}

} // namespace

UTestResult mann_whitney_u(std::span<const double> xs, std::span<const double> ys) {
    if (xs.empty() || ys.empty()) {
        throw DegenerateInput("mann_whitney_u requires nonempty samples");
    }
    const std::size_t n1 = xs.size();
    const std::size_t n2 = ys.size();
    std::vector<double> pooled(xs.begin(), xs.end());
    pooled.insert(pooled.end(), ys.begin(), ys.end());

    std::vector<double> tie_counts;
    const std::vector<double> ranks = average_ranks(pooled, &tie_counts);
    double r1 = 0.0;
    for (std::size_t i = 0; i < n1; ++i) r1 += ranks[i];
    const double u = r1 - 0.5 * static_cast<double>(n1 * (n1 + 1));

    UTestResult res;
    res.u = u;
    res.n1 = n1;
    res.n2 = n2;

    const bool all_identical =
        std::all_of(pooled.begin(), pooled.end(),
                    [&](double v) { return v == pooled.front(); });
    if (all_identical) {
        res.method = UMethod::normal_approx;
        res.degenerate = true;
        res.p_two_sided = 1.0;
        return res;
    }

    if (n1 + n2 <= 12 && tie_counts.empty()) {
        res.method = UMethod::exact;
        res.p_two_sided = exact_p(n1, n2, u);
        return res;
    }

    res.method = UMethod::normal_approx;
    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dn = dn1 + dn2;
    double tie_term = 0.0;
    for (double t : tie_counts) tie_term += t * t * t - t;
    const double var =
        dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    if (var <= 0.0) {
        res.degenerate = true;
        res.p_two_sided = 1.0;
        return res;
    }
    const double mu = 0.5 * dn1 * dn2;
    double num = u - mu;
    // continuity correction toward the mean
    if (num > 0.5) {
        num -= 0.5;
    } else if (num < -0.5) {
        num += 0.5;
    } else {
        num = 0.0;
    }
    const double z = num / std::sqrt(var);
    res.p_two_sided = std::min(1.0, std::erfc(std::abs(z) / std::sqrt(2.0)));
    return res;
}

std::map<std::string, MeanSe>
group_means(const std::map<std::string, std::vector<double>>& groups) {
    std::map<std::string, MeanSe> out;
    for (const auto& [name, values] : groups) {
        if (values.empty()) throw EmptyGroup("group '" + name + "' is empty");
        MeanSe ms;
        ms.n = values.size();
        const double n = static_cast<double>(values.size());
        double acc = 0.0;
        for (double v : values) acc += v;
        ms.mean = acc / n;
        if (values.size() > 1) {
            double ss = 0.0;
            for (double v : values) ss += (v - ms.mean) * (v - ms.mean);
            ms.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
        }
        out.emplace(name, ms);
    }
    return out;
}

const char* method_name(UMethod m) {
    return m == UMethod::exact ? "exact" : "normal_approx";
}

} // namespace scl::stats
