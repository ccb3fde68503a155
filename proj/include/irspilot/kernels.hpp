#pragma once

#include <complex>
#include <cstddef>

namespace irspilot::kernels {

using cplx = std::complex<double>;

// Raw row-major kernels behind the ComplexMatrix products. Two variants of
// each op exist: a scalar reference and an AVX2+FMA implementation; the table
// in use is picked once at startup (see active()). SIMD results may differ
// from scalar in the last bits (FMA contraction); the equivalence tests bound
// the difference.

/// c(m x n) += alpha * a(m x k) * b(k x n)
using GemmNNFn = void (*)(const cplx* a, const cplx* b, cplx* c,
                          std::size_t m, std::size_t k, std::size_t n, cplx alpha);

/// c(m x n) += alpha * a(m x k) * conj(b(n x k))^T
using GemmNHFn = void (*)(const cplx* a, const cplx* b, cplx* c,
                          std::size_t m, std::size_t k, std::size_t n, cplx alpha);

struct Table {
    GemmNNFn gemm_nn_acc;
    GemmNHFn gemm_nh_acc;
    const char* name;
};

/// Scalar reference kernels; always available.
const Table& scalar_table();

/// AVX2+FMA kernels, or nullptr when the build or the CPU lacks them.
const Table* avx2_table();

/// The table selected for this process: honours IRSPILOT_KERNEL=scalar|avx2|auto
/// (default auto = best the CPU supports), decided once on first use.
const Table& active();

} // namespace irspilot::kernels
