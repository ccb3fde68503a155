#include "irspilot/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace irspilot::kernels {

namespace {

// Layout notes: std::complex<double> is a (re,im) pair, so one __m256d holds
// two consecutive complex entries [re0 im0 re1 im1].

__attribute__((target("avx2,fma")))
inline __m256d cmul_acc(__m256d acc, __m256d s_re, __m256d s_im, __m256d b) {
    // acc + s*b per complex lane: even = re(s)re(b) - im(s)im(b), odd = re(s)im(b) + im(s)re(b)
    const __m256d b_swap = _mm256_shuffle_pd(b, b, 0b0101);
    const __m256d t = _mm256_mul_pd(s_im, b_swap);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(s_re, b, t));
}

__attribute__((target("avx2,fma")))
void gemm_nn_acc_avx2(const cplx* a, const cplx* b, cplx* c,
                      std::size_t m, std::size_t k, std::size_t n, cplx alpha) {
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        cplx* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx s = alpha * arow[l];
            if (s == cplx{}) continue;
            const cplx* brow = b + l * n;
            const __m256d s_re = _mm256_set1_pd(s.real());
            const __m256d s_im = _mm256_set1_pd(s.imag());
            std::size_t j = 0;
            for (; j < n2; j += 2) {
                const __m256d bv = _mm256_loadu_pd(reinterpret_cast<const double*>(brow + j));
                const __m256d cv = _mm256_loadu_pd(reinterpret_cast<double*>(crow + j));
                _mm256_storeu_pd(reinterpret_cast<double*>(crow + j),
                                 cmul_acc(cv, s_re, s_im, bv));
            }
            for (; j < n; ++j) crow[j] += s * brow[j];
        }
    }
}

__attribute__((target("avx2,fma")))
void gemm_nh_acc_avx2(const cplx* a, const cplx* b, cplx* c,
                      std::size_t m, std::size_t k, std::size_t n, cplx alpha) {
    const std::size_t k2 = k & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx* brow = b + j * k;
            // x * conj(y): re = xr*yr + xi*yi, im = xi*yr - xr*yi.
            // accP pairs (xr*yr, xi*yi), accQ pairs (xi*yr, xr*yi).
            __m256d acc_p = _mm256_setzero_pd();
            __m256d acc_q = _mm256_setzero_pd();
            std::size_t l = 0;
            for (; l < k2; l += 2) {
                const __m256d x = _mm256_loadu_pd(reinterpret_cast<const double*>(arow + l));
                const __m256d y = _mm256_loadu_pd(reinterpret_cast<const double*>(brow + l));
                const __m256d x_swap = _mm256_shuffle_pd(x, x, 0b0101);
                acc_p = _mm256_fmadd_pd(x, y, acc_p);
                acc_q = _mm256_fmadd_pd(x_swap, y, acc_q);
            }
            alignas(32) double p[4];
            alignas(32) double q[4];
            _mm256_store_pd(p, acc_p);
            _mm256_store_pd(q, acc_q);
            cplx acc{(p[0] + p[1]) + (p[2] + p[3]), (q[0] - q[1]) + (q[2] - q[3])};
            for (; l < k; ++l) acc += arow[l] * std::conj(brow[l]);
            crow[j] += alpha * acc;
        }
    }
}

bool cpu_has_avx2_fma() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

} // namespace

const Table* avx2_table() {
    static const Table table{gemm_nn_acc_avx2, gemm_nh_acc_avx2, "avx2"};
    return cpu_has_avx2_fma() ? &table : nullptr;
}

} // namespace irspilot::kernels

#else

namespace irspilot::kernels {

const Table* avx2_table() { return nullptr; }

} // namespace irspilot::kernels

#endif
