#include "scl/kernels.hpp"

#include <cmath>

// Reference kernels. Plain sequential loops, no manual unrolling: this is
// the semantics the SIMD variants are tested against. Rows with a zero
// coefficient are skipped in the accumulating kernels; metric backward
// passes feed mostly-zero vectors through them.

namespace scl::kernels {
namespace {

double dot_s(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_s(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_s(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void vadd_s(const double* a, const double* b, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = a[i] + b[i];
}

double sum_s(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

void matvec_s(const double* w, const double* x, const double* bias,
              double* y, std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        double acc = bias ? bias[r] : 0.0;
        const double* row = w + r * cols;
        for (std::size_t c = 0; c < cols; ++c) acc += row[c] * x[c];
        y[r] = acc;
    }
}

void matvec_t_acc_s(const double* w, const double* dy, double* dx,
                    std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double g = dy[r];
        if (g == 0.0) continue;
        const double* row = w + r * cols;
        for (std::size_t c = 0; c < cols; ++c) dx[c] += row[c] * g;
    }
}

void ger_acc_s(const double* dy, const double* x, double* dw,
               std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double g = dy[r];
        if (g == 0.0) continue;
        double* row = dw + r * cols;
        for (std::size_t c = 0; c < cols; ++c) row[c] += g * x[c];
    }
}

void adam_s(double* p, const double* g, double* m, double* v, std::size_t n,
            double lr, double beta1, double beta2, double bias1, double bias2,
            double eps) {
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = g[i];
        m[i] = beta1 * m[i] + (1.0 - beta1) * gi;
        v[i] = beta2 * v[i] + (1.0 - beta2) * gi * gi;
        const double mhat = m[i] * bias1;
        const double vhat = v[i] * bias2;
        p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
    }
}

} // namespace

const KernelOps& scalar() {
    static const KernelOps ops{
        "scalar", dot_s,    axpy_s,         scal_s,    vadd_s,
        sum_s,    matvec_s, matvec_t_acc_s, ger_acc_s, adam_s,
    };
    return ops;
}

} // namespace scl::kernels
