#pragma once

#include <variant>

#include "riordan/series.hpp"

namespace riordan {

// The eigenvector problem d*u(h) = lambda*u for the matrix of (d, h). A
// solution with u_0 = 1 forces lambda = d(0), so the problem is normalized
// once by dividing both sides by d_0.
struct SchroederProblem {
    Series d;
    Series h;
    Rat lambda;
    bool normalized;  // d_0 = 1 and lambda = 1
};

// Builds the normalized problem (d/d_0, h, lambda = 1). Components are
// truncated to a common window. Throws ZeroConstantTerm when d_0 = 0 and
// NotInvertibleForComposition when ord(h) != 1.
SchroederProblem normalize(const Series& d, const Series& h);

enum class SchroederCase {
    UnitMultiplier,  // h_1 not a root of unity: forward substitution
    Parabolic,       // h = x + h_k x^k + ...: shifted recurrence
};

struct SchroederSolution {
    Series u;  // u_0 = 1, truncated at the degree through which it is exact
    SchroederCase case_used;
    // shift index k of the parabolic case; 0 when h = x through the whole
    // window (then u = 1 and the equation is d = 1); unused in case 1
    int k;
};

// The parabolic case is solvable iff d lies in 1 + x^k K[[x]]; this carries
// the first index 1 <= i < k with d_i != 0.
struct NoSolution {
    int violating_index;
};

using SchroederResult = std::variant<SchroederSolution, NoSolution>;

// Solves the normalized problem. Case 1 (h_1 not 0, 1 or -1) determines u
// through the full window N; case 2 (h_1 = 1) through N-k+1. h_1 = -1 is
// not covered by either case and throws UnsupportedNegativeUnit. Matrix
// rows are consumed lazily via the A-sequence recurrence, one row at a time.
SchroederResult solve(const SchroederProblem& prob);

// d*u(h) - lambda*u through the common window; zero certifies a solution.
Series residual(const SchroederProblem& prob, const Series& u);

// Parabolic-case law: ord(u-1) >= i iff ord(d-1) >= i+k-1. Returns whether
// the equivalence holds for this solution; throws TruncationTooShort when
// either window is too small to decide it.
bool order_correspondence(const SchroederSolution& sol, const SchroederProblem& prob, int i);

}  // namespace riordan
