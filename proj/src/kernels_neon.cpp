#include "scl/kernels.hpp"

#include <arm_neon.h>
#include <cmath>

// NEON variants, 2-wide double (aarch64). Same structure as the AVX2
// file: paired accumulators for the reductions, scalar tails.

namespace scl::kernels {
namespace {

double dot_v(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_v(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_v(double alpha, double* x, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(x + i, vmulq_f64(va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

void vadd_v(const double* a, const double* b, double* y, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    for (; i < n; ++i) y[i] = a[i] + b[i];
}

double sum_v(const double* a, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc0 = vaddq_f64(acc0, vld1q_f64(a + i));
    double acc = vaddvq_f64(acc0);
    for (; i < n; ++i) acc += a[i];
    return acc;
}

void matvec_v(const double* w, const double* x, const double* bias,
              double* y, std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        y[r] = dot_v(w + r * cols, x, cols) + (bias ? bias[r] : 0.0);
    }
}

void matvec_t_acc_v(const double* w, const double* dy, double* dx,
                    std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        if (dy[r] == 0.0) continue;
        axpy_v(dy[r], w + r * cols, dx, cols);
    }
}

void ger_acc_v(const double* dy, const double* x, double* dw,
               std::size_t rows, std::size_t cols) {
    for (std::size_t r = 0; r < rows; ++r) {
        if (dy[r] == 0.0) continue;
        axpy_v(dy[r], x, dw + r * cols, cols);
    }
}

void adam_v(double* p, const double* g, double* m, double* v, std::size_t n,
            double lr, double beta1, double beta2, double bias1, double bias2,
            double eps) {
    for (std::size_t i = 0; i < n; ++i) {
        const double gi = g[i];
        m[i] = beta1 * m[i] + (1.0 - beta1) * gi;
        v[i] = beta2 * v[i] + (1.0 - beta2) * gi * gi;
        p[i] -= lr * (m[i] * bias1) / (std::sqrt(v[i] * bias2) + eps);
    }
}

} // namespace

const KernelOps* neon_ops_impl() {
    static const KernelOps ops{
        "neon",   dot_v,    axpy_v,         scal_v,    vadd_v,
        sum_v,    matvec_v, matvec_t_acc_v, ger_acc_v, adam_v,
    };
    return &ops;
}

} // namespace scl::kernels
