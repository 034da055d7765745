#include "riordan/derived.hpp"

#include <stdexcept>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

long long pow2(int n) { return n >= 62 ? (1LL << 62) : (1LL << n); }

}  // namespace

bool finite_membership(const FiniteRiordanMatrix& m, int n) {
    if (n < 0) throw std::invalid_argument("derived level must be >= 0");
    const int k = m.size_parameter();
    if (k == 0) return n == 0 || m.at(0, 0) == 1;
    RiordanPair p = extract_pair(m);
    if (n == 0) return true;
    if (p.d()[0] != 1) return false;
    const long long d_window = pow2(n) - n - 1;
    for (int i = 1; i <= k && i <= d_window; ++i)
        if (p.d()[i] != 0) return false;
    if (p.h()[1] != 1) return false;
    const long long h_window = pow2(n) - 1;
    for (int i = 2; i <= k && i <= h_window; ++i)
        if (p.h()[i] != 0) return false;
    return true;
}

int derived_length(int k) {
    if (k < 0) throw std::invalid_argument("block size must be >= 0");
    int n = 1;
    while (pow2(n) - n <= k) ++n;
    return n;
}

DerivedLengthTable derived_table(int max_k) {
    if (max_k < 0) throw std::invalid_argument("block size must be >= 0");
    DerivedLengthTable table{max_k, {}};
    table.values.reserve(static_cast<std::size_t>(max_k) + 1);
    for (int k = 0; k <= max_k; ++k) table.values.push_back(derived_length(k));
    return table;
}

RiordanPair sample_derived(int n, int trunc_order, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("derived level must be >= 0");
    if (n > 30 || pow2(n) > trunc_order)
        throw TruncationTooShort("sampling at level " + std::to_string(n) +
                                 " needs window 2^" + std::to_string(n));
    SmallCoeffRng rng(seed);
    std::vector<Rat> d(static_cast<std::size_t>(trunc_order) + 1, Rat(0));
    std::vector<Rat> h(static_cast<std::size_t>(trunc_order) + 1, Rat(0));
    if (n == 0) {
        d[0] = rng.next_nonzero();
        for (int i = 1; i <= trunc_order; ++i) d[static_cast<std::size_t>(i)] = rng.next();
        h[1] = rng.next_nonzero();
        for (int i = 2; i <= trunc_order; ++i) h[static_cast<std::size_t>(i)] = rng.next();
    } else {
        const int d_from = (1 << n) - n;
        const int h_from = 1 << n;
        d[0] = 1;
        for (int i = d_from; i <= trunc_order; ++i) d[static_cast<std::size_t>(i)] = rng.next();
        h[1] = 1;
        for (int i = h_from; i <= trunc_order; ++i) h[static_cast<std::size_t>(i)] = rng.next();
    }
    return RiordanPair(Series(std::move(d)), Series(std::move(h)));
}

RiordanPair sample_gk(int k, int trunc_order, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("gk sampling needs k >= 2");
    if (k > trunc_order)
        throw TruncationTooShort("sampling in G_" + std::to_string(k) + " needs window " +
                                 std::to_string(k));
    SmallCoeffRng rng(seed);
    std::vector<Rat> h(static_cast<std::size_t>(trunc_order) + 1, Rat(0));
    h[1] = 1;
    for (int i = k; i <= trunc_order; ++i) h[static_cast<std::size_t>(i)] = rng.next();
    return RiordanPair(Series::one(trunc_order), Series(std::move(h)));
}

}  // namespace riordan
