#include "riordan/kernels.hpp"

#include <cassert>
#include <cstdint>

namespace riordan::kernels {

namespace {

inline void convolve_at(const Rat* a, std::size_t na, const Rat* b,
                        std::size_t nb, Rat& out, std::size_t n) {
    Rat sum = 0;
    const std::size_t k_lo = (n + 1 > nb) ? n + 1 - nb : 0;
    const std::size_t k_hi = (n + 1 < na) ? n + 1 : na;
    for (std::size_t k = k_lo; k < k_hi; ++k) sum += a[k] * b[n - k];
    out = std::move(sum);
}

inline void row_product(const TriRows& a, const TriRows& b,
                        std::vector<Rat>& out, std::size_t i) {
    out.resize(i + 1);
    for (std::size_t j = 0; j <= i; ++j) {
        Rat sum = 0;
        for (std::size_t k = j; k <= i; ++k) sum += a[i][k] * b[k][j];
        out[j] = std::move(sum);
    }
}

}  // namespace

void cauchy_product_serial(const Rat* a, std::size_t na, const Rat* b,
                           std::size_t nb, Rat* out, std::size_t out_size) {
    for (std::size_t n = 0; n < out_size; ++n) convolve_at(a, na, b, nb, out[n], n);
}

void cauchy_product_parallel(const Rat* a, std::size_t na, const Rat* b,
                             std::size_t nb, Rat* out, std::size_t out_size) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t n = 0; n < static_cast<std::int64_t>(out_size); ++n)
        convolve_at(a, na, b, nb, out[n], static_cast<std::size_t>(n));
}

void cauchy_product(const Rat* a, std::size_t na, const Rat* b, std::size_t nb,
                    Rat* out, std::size_t out_size) {
    if (out_size >= parallel_threshold)
        cauchy_product_parallel(a, na, b, nb, out, out_size);
    else
        cauchy_product_serial(a, na, b, nb, out, out_size);
}

TriRows tri_matmul_serial(const TriRows& a, const TriRows& b) {
    assert(a.size() == b.size());
    TriRows c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) row_product(a, b, c[i], i);
    return c;
}

TriRows tri_matmul_parallel(const TriRows& a, const TriRows& b) {
    assert(a.size() == b.size());
    TriRows c(a.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(a.size()); ++i)
        row_product(a, b, c[i], static_cast<std::size_t>(i));
    return c;
}

TriRows tri_matmul(const TriRows& a, const TriRows& b) {
    return a.size() >= parallel_threshold ? tri_matmul_parallel(a, b)
                                          : tri_matmul_serial(a, b);
}

std::vector<Rat> tri_matvec(const TriRows& a, const std::vector<Rat>& v) {
    assert(a.size() == v.size());
    std::vector<Rat> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rat sum = 0;
        for (std::size_t j = 0; j <= i; ++j) sum += a[i][j] * v[j];
        out[i] = std::move(sum);
    }
    return out;
}

}  // namespace riordan::kernels
