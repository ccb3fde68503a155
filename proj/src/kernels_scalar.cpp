#include "irspilot/kernels.hpp"

namespace irspilot::kernels {

namespace {

void gemm_nn_acc_scalar(const cplx* a, const cplx* b, cplx* c,
                        std::size_t m, std::size_t k, std::size_t n, cplx alpha) {
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        cplx* crow = c + i * n;
        for (std::size_t l = 0; l < k; ++l) {
            const cplx s = alpha * arow[l];
            if (s == cplx{}) continue;
            const cplx* brow = b + l * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += s * brow[j];
        }
    }
}

void gemm_nh_acc_scalar(const cplx* a, const cplx* b, cplx* c,
                        std::size_t m, std::size_t k, std::size_t n, cplx alpha) {
    for (std::size_t i = 0; i < m; ++i) {
        const cplx* arow = a + i * k;
        cplx* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) {
            const cplx* brow = b + j * k;
            cplx acc{};
            for (std::size_t l = 0; l < k; ++l) acc += arow[l] * std::conj(brow[l]);
            crow[j] += alpha * acc;
        }
    }
}

} // namespace

const Table& scalar_table() {
    static const Table table{gemm_nn_acc_scalar, gemm_nh_acc_scalar, "scalar"};
    return table;
}

} // namespace irspilot::kernels
