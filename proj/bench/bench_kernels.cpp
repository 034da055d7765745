// Times the serial reference kernels against their OpenMP variants and the
// size dispatcher. Data is deterministic and mildly fractional so the mpq
// arithmetic does real normalization work.
#include <chrono>
#include <cstdio>
#include <vector>

#include "riordan/derived.hpp"
#include "riordan/kernels.hpp"
#include "riordan/rational.hpp"

using namespace riordan;
using kernels::TriRows;

namespace {

std::vector<Rat> random_values(std::size_t n, std::uint64_t seed) {
    SmallCoeffRng rng(seed);
    std::vector<Rat> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = Rat(rng.next());
        if (i % 3 == 0) v[i] /= rng.next_nonzero();
    }
    return v;
}

TriRows random_tri(std::size_t n, std::uint64_t seed) {
    SmallCoeffRng rng(seed);
    TriRows rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(i + 1);
        for (std::size_t j = 0; j <= i; ++j) {
            rows[i][j] = Rat(rng.next());
            if ((i + j) % 4 == 0) rows[i][j] /= rng.next_nonzero();
        }
    }
    return rows;
}

template <typename F>
double best_of_three(F&& f) {
    double best = 0;
    for (int rep = 0; rep < 3; ++rep) {
        auto start = std::chrono::steady_clock::now();
        f();
        double t =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (rep == 0 || t < best) best = t;
    }
    return best;
}

}  // namespace

int main() {
    std::printf("cauchy product, n output coefficients\n");
    std::printf("%8s %12s %12s %12s %9s\n", "n", "serial", "parallel", "dispatch", "speedup");
    for (std::size_t n : {std::size_t{64}, std::size_t{128}, std::size_t{256}, std::size_t{512}}) {
        std::vector<Rat> a = random_values(n, 2 * n + 1);
        std::vector<Rat> b = random_values(n, 2 * n + 2);
        std::vector<Rat> out(n);
        double ts = best_of_three(
            [&] { kernels::cauchy_product_serial(a.data(), n, b.data(), n, out.data(), n); });
        double tp = best_of_three(
            [&] { kernels::cauchy_product_parallel(a.data(), n, b.data(), n, out.data(), n); });
        double td = best_of_three(
            [&] { kernels::cauchy_product(a.data(), n, b.data(), n, out.data(), n); });
        std::printf("%8zu %11.3fms %11.3fms %11.3fms %8.2fx\n", n, ts * 1e3, tp * 1e3, td * 1e3,
                    tp > 0 ? ts / tp : 0.0);
    }

    std::printf("\ntriangular matrix product, n rows\n");
    std::printf("%8s %12s %12s %12s %9s\n", "n", "serial", "parallel", "dispatch", "speedup");
    for (std::size_t n : {std::size_t{32}, std::size_t{64}, std::size_t{96}, std::size_t{128}}) {
        TriRows a = random_tri(n, 3 * n + 1);
        TriRows b = random_tri(n, 3 * n + 2);
        double ts = best_of_three([&] { kernels::tri_matmul_serial(a, b); });
        double tp = best_of_three([&] { kernels::tri_matmul_parallel(a, b); });
        double td = best_of_three([&] { kernels::tri_matmul(a, b); });
        std::printf("%8zu %11.3fms %11.3fms %11.3fms %8.2fx\n", n, ts * 1e3, tp * 1e3, td * 1e3,
                    tp > 0 ? ts / tp : 0.0);
    }

    std::printf("\ntriangular matrix-vector product, n rows\n");
    std::printf("%8s %12s\n", "n", "time");
    for (std::size_t n : {std::size_t{128}, std::size_t{256}, std::size_t{512}}) {
        TriRows a = random_tri(n, 5 * n + 1);
        std::vector<Rat> v = random_values(n, 5 * n + 2);
        double t = best_of_three([&] { kernels::tri_matvec(a, v); });
        std::printf("%8zu %11.3fms\n", n, t * 1e3);
    }
    return 0;
}
