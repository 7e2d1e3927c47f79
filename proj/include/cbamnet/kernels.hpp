#pragma once

#include <cstddef>
#include <string_view>

namespace cbamnet::kernels {

// Hot inner loops over contiguous double buffers, behind a runtime-dispatched
// table. The scalar table is the reference semantics; SIMD variants are
// required to match it bit-for-bit for every element-parallel kernel (same
// per-element operation order, no FMA). dot/sum are reductions whose
// accumulation order differs between variants, so they only match within
// rounding tolerance; each variant is still deterministic on its own.
struct Ops {
    const char* name;

    void (*add)(double* out, const double* a, const double* b, std::size_t n);
    void (*mul)(double* out, const double* a, const double* b, std::size_t n);
    // y[i] += a[i] * b[i]
    void (*mul_acc)(double* y, const double* a, const double* b, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double* y, double a, const double* x, std::size_t n);
    // out[i] = a * x[i]; out may alias x
    void (*scale)(double* out, double a, const double* x, std::size_t n);
    // out[i] = x[i] + a
    void (*shift)(double* out, double a, const double* x, std::size_t n);
    // y[i] += x[i]
    void (*acc)(double* y, const double* x, std::size_t n);
    void (*relu)(double* out, const double* x, std::size_t n);
    // gx[i] += gy[i] where x[i] > 0
    void (*relu_backward)(double* gx, const double* gy, const double* x, std::size_t n);
    // One Adam step with precomputed bias corrections bc1 = 1-beta1^t,
    // bc2 = 1-beta2^t:  m,v updated in place, theta -= lr*mhat/(sqrt(vhat)+eps).
    void (*adam_update)(double* theta, double* m, double* v, const double* g, std::size_t n,
                        double lr, double beta1, double beta2, double eps, double bc1, double bc2);

    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
};

enum class Backend { kAuto, kScalar, kAvx2 };

const Ops& scalar();
// Null when the binary lacks the variant or the CPU does not support it.
const Ops* avx2();

// Currently selected table. select() must not race against running kernels;
// it is meant for process startup and tests.
const Ops& active();
bool select(Backend b);
bool select_by_name(std::string_view name);  // "auto" | "scalar" | "avx2"

}  // namespace cbamnet::kernels
