// AVX2 variants of the kernel table. Element-parallel kernels perform the
// exact scalar operation sequence per element (mul then add, no FMA), so they
// round identically to the scalar reference; the equivalence tests assert
// bitwise equality. dot/sum use vector accumulators and match the scalar
// reference only within rounding tolerance.

#include <immintrin.h>

#include "cbamnet/kernels.hpp"

namespace cbamnet::kernels::detail {

namespace {

void add_v(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}

void mul_v(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_acc_v(double* y, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
    }
    for (; i < n; ++i) y[i] += a[i] * b[i];
}

void axpy_v(double* y, double a, const double* x, std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d p0 = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        __m256d p1 = _mm256_mul_pd(va, _mm256_loadu_pd(x + i + 4));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p0));
        _mm256_storeu_pd(y + i + 4, _mm256_add_pd(_mm256_loadu_pd(y + i + 4), p1));
    }
    for (; i + 4 <= n; i += 4) {
        __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale_v(double* out, double a, const double* x, std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = a * x[i];
}

void shift_v(double* out, double a, const double* x, std::size_t n) {
    __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(x + i), va));
    for (; i < n; ++i) out[i] = x[i] + a;
}

void acc_v(double* y, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] += x[i];
}

void relu_v(double* out, const double* x, std::size_t n) {
    // max_pd(x, 0) returns +0.0 for x in {-0.0, NaN}, same as the scalar
    // `x > 0 ? x : 0`, so the result is bitwise identical.
    __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
    for (; i < n; ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_backward_v(double* gx, const double* gy, const double* x, std::size_t n) {
    __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
        __m256d g = _mm256_and_pd(mask, _mm256_loadu_pd(gy + i));
        _mm256_storeu_pd(gx + i, _mm256_add_pd(_mm256_loadu_pd(gx + i), g));
    }
    for (; i < n; ++i)
        if (x[i] > 0.0) gx[i] += gy[i];
}

void adam_update_v(double* theta, double* m, double* v, const double* g, std::size_t n,
                   double lr, double beta1, double beta2, double eps, double bc1, double bc2) {
    __m256d vb1 = _mm256_set1_pd(beta1), vc1 = _mm256_set1_pd(1.0 - beta1);
    __m256d vb2 = _mm256_set1_pd(beta2), vc2 = _mm256_set1_pd(1.0 - beta2);
    __m256d vlr = _mm256_set1_pd(lr), veps = _mm256_set1_pd(eps);
    __m256d vbc1 = _mm256_set1_pd(bc1), vbc2 = _mm256_set1_pd(bc2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d gi = _mm256_loadu_pd(g + i);
        __m256d mi = _mm256_add_pd(_mm256_mul_pd(vb1, _mm256_loadu_pd(m + i)), _mm256_mul_pd(vc1, gi));
        __m256d g2 = _mm256_mul_pd(gi, gi);
        __m256d vi = _mm256_add_pd(_mm256_mul_pd(vb2, _mm256_loadu_pd(v + i)), _mm256_mul_pd(vc2, g2));
        _mm256_storeu_pd(m + i, mi);
        _mm256_storeu_pd(v + i, vi);
        __m256d mhat = _mm256_div_pd(mi, vbc1);
        __m256d vhat = _mm256_div_pd(vi, vbc2);
        __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), veps);
        __m256d step = _mm256_mul_pd(vlr, _mm256_div_pd(mhat, denom));
        _mm256_storeu_pd(theta + i, _mm256_sub_pd(_mm256_loadu_pd(theta + i), step));
    }
    if (i < n) scalar().adam_update(theta + i, m + i, v + i, g + i, n - i, lr, beta1, beta2, eps, bc1, bc2);
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double dot_v(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    double r = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) r += a[i] * b[i];
    return r;
}

double sum_v(const double* a, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(a + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(a + i));
    double r = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) r += a[i];
    return r;
}

constexpr Ops kAvx2 = {
    "avx2", add_v,  mul_v,           mul_acc_v,     axpy_v, scale_v, shift_v,
    acc_v,  relu_v, relu_backward_v, adam_update_v, dot_v,  sum_v,
};

}  // namespace

const Ops& avx2_table() { return kAvx2; }

}  // namespace cbamnet::kernels::detail
