#pragma once
// Double-precision inner loops used by the transformer forward/backward
// passes and the optimizer. A scalar reference implementation always
// exists; AVX2 (x86-64) and NEON (aarch64) variants are selected at
// runtime and equivalence-tested against the reference.
//
// SIMD variants may reassociate additions, so results can differ from
// the scalar reference in the last few ulps. Within one process the
// selected variant is fixed, which keeps runs reproducible.

#include <cstddef>

namespace scl::kernels {

struct KernelOps {
    const char* name;

    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[i] += alpha * x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // x[i] *= alpha
    void (*scal)(double alpha, double* x, std::size_t n);
    // y[i] = a[i] + b[i]
    void (*vadd)(const double* a, const double* b, double* y, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    // y = W x + bias, W row-major [rows x cols]; bias may be null
    void (*matvec)(const double* w, const double* x, const double* bias,
                   double* y, std::size_t rows, std::size_t cols);
    // dx[c] += sum_r W[r,c] * dy[r]
    void (*matvec_t_acc)(const double* w, const double* dy, double* dx,
                         std::size_t rows, std::size_t cols);
    // dW[r,c] += dy[r] * x[c]
    void (*ger_acc)(const double* dy, const double* x, double* dw,
                    std::size_t rows, std::size_t cols);
    // Adam step with externally precomputed bias corrections.
    void (*adam_update)(double* p, const double* g, double* m, double* v,
                        std::size_t n, double lr, double beta1, double beta2,
                        double bias1, double bias2, double eps);
};

// Scalar reference, always available.
const KernelOps& scalar();

// SIMD variants; nullptr when unsupported by the build or the CPU.
const KernelOps* avx2();
const KernelOps* neon();

// Variant chosen at first use: the SCL_KERNELS environment variable
// ("scalar", "avx2", "neon") forces one, otherwise the best supported
// variant wins. The choice is latched for the whole process.
const KernelOps& active();

} // namespace scl::kernels
