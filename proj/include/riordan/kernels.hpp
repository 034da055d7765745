#pragma once

#include <cstddef>
#include <vector>

#include "riordan/rational.hpp"

// Data-parallel inner loops shared by the series and matrix layers. Each
// kernel comes as a serial reference (the ground truth the tests pin the
// OpenMP variant against) and an OpenMP variant; the unsuffixed entry point
// dispatches on problem size. bench/bench_kernels compares the two.
namespace riordan::kernels {

// below this many output values the dispatcher stays serial
inline constexpr std::size_t parallel_threshold = 96;

// out[n] = sum_{k<=n, k<na, n-k<nb} a[k]*b[n-k], n = 0..out_size-1
void cauchy_product_serial(const Rat* a, std::size_t na, const Rat* b,
                           std::size_t nb, Rat* out, std::size_t out_size);
void cauchy_product_parallel(const Rat* a, std::size_t na, const Rat* b,
                             std::size_t nb, Rat* out, std::size_t out_size);
void cauchy_product(const Rat* a, std::size_t na, const Rat* b,
                    std::size_t nb, Rat* out, std::size_t out_size);

// Lower-triangular matrices stored as jagged rows: rows[i] has i+1 entries.
using TriRows = std::vector<std::vector<Rat>>;

TriRows tri_matmul_serial(const TriRows& a, const TriRows& b);
TriRows tri_matmul_parallel(const TriRows& a, const TriRows& b);
TriRows tri_matmul(const TriRows& a, const TriRows& b);

std::vector<Rat> tri_matvec(const TriRows& a, const std::vector<Rat>& v);

}  // namespace riordan::kernels
