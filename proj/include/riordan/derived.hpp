#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "riordan/riordan.hpp"

namespace riordan {

// phi(0..max_k): derived lengths of the finite matrix groups by size
struct DerivedLengthTable {
    int max_k;
    std::vector<int> values;
};

// True iff the block is the size-k projection of some member of the level-n
// derived window: the generating pair is recovered from columns 0 and 1 and
// the coefficient windows are clipped to k. Throws NotRiordanShape when the
// block is not column-geometric.
bool finite_membership(const FiniteRiordanMatrix& m, int n);

// Least n >= 1 with 2^n - n > k: at that level the clipped windows admit
// only the identity block.
int derived_length(int k);

DerivedLengthTable derived_table(int max_k);

// Deterministic stream of small integer coefficients in {-3..3}, identical
// on every platform for a given seed.
class SmallCoeffRng {
public:
    explicit SmallCoeffRng(std::uint64_t seed) : eng_(seed) {}
    int next() { return static_cast<int>(eng_() % 7) - 3; }
    int next_nonzero() {
        int c = next();
        while (c == 0) c = next();
        return c;
    }

private:
    std::mt19937_64 eng_;
};

// Pseudorandom member of the level-n derived window at the given truncation:
// d in 1 + x^{2^n - n} K[[x]], h in x + x^{2^n} K[[x]] (n = 0 gives an
// unconstrained pair). Throws TruncationTooShort when trunc_order < 2^n.
RiordanPair sample_derived(int n, int trunc_order, std::uint64_t seed);

// Pseudorandom member of G_k. Throws TruncationTooShort when trunc_order < k.
RiordanPair sample_gk(int k, int trunc_order, std::uint64_t seed);

}  // namespace riordan
