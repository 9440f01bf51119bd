#pragma once
// Mann-Whitney U test and small summary helpers for the overlap and
// ablation comparisons.

#include "scl/common.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace scl::stats {

SCL_DEFINE_ERROR(DegenerateInput);
SCL_DEFINE_ERROR(EmptyGroup);

enum class UMethod { exact, normal_approx };

struct UTestResult {
    double u = 0.0;          // U statistic of the first sample
    double p_two_sided = 1.0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    UMethod method = UMethod::exact;
    bool degenerate = false; // all pooled values identical
};

// Two-sided Mann-Whitney U. Average ranks for ties. Exact permutation
// p-value when n1+n2 <= 12 and the pooled sample is tie-free, otherwise
// a normal approximation with tie-corrected variance and continuity
// correction. All-identical input is flagged degenerate with p = 1.
UTestResult mann_whitney_u(std::span<const double> xs, std::span<const double> ys);

struct MeanSe {
    double mean = 0.0;
    double se = 0.0; // sample sd / sqrt(n); 0 for n == 1
    std::size_t n = 0;
};

std::map<std::string, MeanSe>
group_means(const std::map<std::string, std::vector<double>>& groups);

const char* method_name(UMethod m);

} // namespace scl::stats
