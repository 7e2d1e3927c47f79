#include "cbamnet/kernels.hpp"

#include <cmath>

namespace cbamnet::kernels {

namespace {

void add_s(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void mul_s(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_acc_s(double* y, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a[i] * b[i];
}

void axpy_s(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_s(double* out, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i];
}

void shift_s(double* out, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + a;
}

void acc_s(double* y, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void relu_s(double* out, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_s(double* gx, const double* gy, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (x[i] > 0.0) gx[i] += gy[i];
}

void adam_update_s(double* theta, double* m, double* v, const double* g, std::size_t n,
                   double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    for (std::size_t i = 0; i < n; ++i) {
        double gi = g[i];
        m[i] = beta1 * m[i] + (1.0 - beta1) * gi;
        v[i] = beta2 * v[i] + (1.0 - beta2) * (gi * gi);
        double mhat = m[i] / bc1;
        double vhat = v[i] / bc2;
        theta[i] -= lr * (mhat / (std::sqrt(vhat) + eps));
    }
}

double dot_s(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

double sum_s(const double* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

constexpr Ops kScalar = {
    "scalar", add_s,  mul_s,          mul_acc_s,     axpy_s, scale_s, shift_s,
    acc_s,    relu_s, relu_backward_s, adam_update_s, dot_s,  sum_s,
};

const Ops* pick_default() {
    if (const Ops* v = avx2()) return v;
    return &kScalar;
}

const Ops* g_active = nullptr;

}  // namespace

const Ops& scalar() { return kScalar; }

#if CBAMNET_HAVE_AVX2
namespace detail {
const Ops& avx2_table();
}
const Ops* avx2() {
    return __builtin_cpu_supports("avx2") ? &detail::avx2_table() : nullptr;
}
#else
const Ops* avx2() { return nullptr; }
#endif

const Ops& active() {
    if (!g_active) g_active = pick_default();
    return *g_active;
}

bool select(Backend b) {
    switch (b) {
        case Backend::kAuto:
            g_active = pick_default();
            return true;
        case Backend::kScalar:
            g_active = &kScalar;
            return true;
        case Backend::kAvx2:
            if (const Ops* v = avx2()) {
                g_active = v;
                return true;
            }
            return false;
    }
    return false;
}

bool select_by_name(std::string_view name) {
    if (name == "auto") return select(Backend::kAuto);
    if (name == "scalar") return select(Backend::kScalar);
    if (name == "avx2") return select(Backend::kAvx2);
    return false;
}

}  // namespace cbamnet::kernels
