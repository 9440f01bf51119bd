#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scl/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace scl::stats;

namespace {

// Independent oracle: U by direct pairwise counting.
double u_by_counting(const std::vector<double>& xs, const std::vector<double>& ys) {
    double u = 0.0;
    for (double x : xs) {
        for (double y : ys) {
            if (x > y) u += 1.0;
            else if (x == y) u += 0.5;
        }
    }
    return u;
}

// Independent oracle: exact two-sided p by enumerating every subset mask
// (which pooled positions belong to sample 1), tie-free inputs only.
double exact_p_by_masks(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> pooled(xs);
    pooled.insert(pooled.end(), ys.begin(), ys.end());
    const std::size_t n = pooled.size();
    const std::size_t n1 = xs.size();
    const double u_obs = u_by_counting(xs, ys);
    std::size_t total = 0, le = 0, ge = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != n1) continue;
        std::vector<double> a, b;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) a.push_back(pooled[i]);
            else b.push_back(pooled[i]);
        }
        const double u = u_by_counting(a, b);
        ++total;
        if (u <= u_obs + 1e-9) ++le;
        if (u >= u_obs - 1e-9) ++ge;
    }
    return std::min(1.0, 2.0 * static_cast<double>(std::min(le, ge)) /
                             static_cast<double>(total));
}

} // namespace

TEST_CASE("frozen example: clean separation") {
    const std::vector<double> xs{1, 2, 3}, ys{4, 5, 6};
    const auto r = mann_whitney_u(xs, ys);
    CHECK(r.u == doctest::Approx(0.0));
    CHECK(r.method == UMethod::exact);
    CHECK(r.p_two_sided == doctest::Approx(0.1));
}

TEST_CASE("single tied pair is degenerate") {
    const std::vector<double> xs{5}, ys{5};
    const auto r = mann_whitney_u(xs, ys);
    CHECK(r.u == doctest::Approx(0.5));
    CHECK(r.p_two_sided == doctest::Approx(1.0));
    CHECK(r.degenerate);
}

TEST_CASE("empty sample throws") {
    const std::vector<double> xs{}, ys{1.0};
    CHECK_THROWS_AS(mann_whitney_u(xs, ys), DegenerateInput);
}

TEST_CASE("swap symmetry: U maps to n1*n2 - U with identical p") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(0.0, 10.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> xs(4 + rep % 5), ys(3 + rep % 6);
        for (auto& v : xs) v = d(rng);
        for (auto& v : ys) v = d(rng);
        const auto a = mann_whitney_u(xs, ys);
        const auto b = mann_whitney_u(ys, xs);
        CHECK(a.u + b.u == doctest::Approx(double(xs.size() * ys.size())));
        CHECK(a.p_two_sided == doctest::Approx(b.p_two_sided));
    }
}

TEST_CASE("U agrees with pairwise-counting oracle under ties") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> d(0, 4); // heavy ties
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> xs(5), ys(7);
        for (auto& v : xs) v = d(rng);
        for (auto& v : ys) v = d(rng);
        const auto r = mann_whitney_u(xs, ys);
        CHECK(r.u == doctest::Approx(u_by_counting(xs, ys)));
    }
}

TEST_CASE("exact p matches mask-enumeration oracle, tie-free, n1+n2 <= 10") {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n1 = 1 + rep % 5;
        const std::size_t n2 = 1 + (rep / 5) % 5;
        // distinct values via shuffled integers
        std::vector<double> all(n1 + n2);
        std::iota(all.begin(), all.end(), 0.0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<double> xs(all.begin(), all.begin() + n1);
        std::vector<double> ys(all.begin() + n1, all.end());
        const auto r = mann_whitney_u(xs, ys);
        REQUIRE(r.method == UMethod::exact);
        CHECK(r.p_two_sided == doctest::Approx(exact_p_by_masks(xs, ys)));
    }
}

TEST_CASE("normal approximation within 0.02 of exact for n1=n2=6, tie-free") {
    // Approximation computed here, exact p from the library path.
    auto approx_p = [](double u, double n1, double n2) {
        const double mu = 0.5 * n1 * n2;
        const double sd = std::sqrt(n1 * n2 * (n1 + n2 + 1.0) / 12.0);
        double num = u - mu;
        if (num > 0.5) num -= 0.5;
        else if (num < -0.5) num += 0.5;
        else num = 0.0;
        return std::min(1.0, std::erfc(std::abs(num / sd) / std::sqrt(2.0)));
    };
    std::mt19937_64 rng(44);
    for (int rep = 0; rep < 30; ++rep) {
        std::vector<double> all(12);
        std::iota(all.begin(), all.end(), 0.0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<double> xs(all.begin(), all.begin() + 6);
        std::vector<double> ys(all.begin() + 6, all.end());
        const auto ex = mann_whitney_u(xs, ys);
        REQUIRE(ex.method == UMethod::exact);
        CHECK(std::abs(ex.p_two_sided - approx_p(ex.u, 6.0, 6.0)) < 0.02);
    }
}

TEST_CASE("invariance under strictly monotone transforms") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> d(0.1, 5.0);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<double> xs(6), ys(8);
        for (auto& v : xs) v = d(rng);
        for (auto& v : ys) v = d(rng);
        const auto base = mann_whitney_u(xs, ys);
        auto tf = [](double v) { return std::exp(2.0 * v) + 1.0; };
        std::vector<double> xs2(xs), ys2(ys);
        for (auto& v : xs2) v = tf(v);
        for (auto& v : ys2) v = tf(v);
        const auto mapped = mann_whitney_u(xs2, ys2);
        CHECK(base.u == doctest::Approx(mapped.u));
        CHECK(base.p_two_sided == doctest::Approx(mapped.p_two_sided));
    }
}

TEST_CASE("group means and standard errors") {
    std::map<std::string, std::vector<double>> g;
    g["const"] = {2, 2, 2};
    g["pair"] = {0, 2};
    const auto m = group_means(g);
    CHECK(m.at("const").mean == doctest::Approx(2.0));
    CHECK(m.at("const").se == doctest::Approx(0.0));
    CHECK(m.at("pair").mean == doctest::Approx(1.0));
    CHECK(m.at("pair").se == doctest::Approx(1.0));

    std::map<std::string, std::vector<double>> bad;
    bad["empty"] = {};
    CHECK_THROWS_AS(group_means(bad), EmptyGroup);
}

TEST_CASE("group means match brute-force recomputation") {
    std::mt19937_64 rng(66);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    std::map<std::string, std::vector<double>> g;
    for (int i = 0; i < 5; ++i) {
        std::vector<double> v(3 + i * 2);
        for (auto& x : v) x = d(rng);
        g["g" + std::to_string(i)] = v;
    }
    const auto m = group_means(g);
    for (const auto& [name, values] : g) {
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= double(values.size());
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        const double se = std::sqrt(ss / double(values.size() - 1)) /
                          std::sqrt(double(values.size()));
        CHECK(m.at(name).mean == doctest::Approx(mean));
        CHECK(m.at(name).se == doctest::Approx(se));
    }
}
