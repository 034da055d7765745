#include "riordan/schroeder.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/riordan.hpp"

namespace riordan {

namespace {

// Rows of the matrix of (d, h), produced one at a time through the
// A-sequence recurrence; keeps O(N) live state instead of a projection.
class RowWalker {
public:
    RowWalker(const Series& d, const Series& h)
        : d_(d), a_(a_sequence(RiordanPair(d, h))), row_{d[0]}, index_(0) {}

    const std::vector<Rat>& row() const { return row_; }
    int index() const { return index_; }

    void advance() {
        const int i = index_ + 1;
        std::vector<Rat> next(static_cast<std::size_t>(i) + 1);
        next[0] = d_[i];
        for (int j = 1; j <= i; ++j) {
            Rat s(0);
            for (int k = 0; k <= i - j; ++k)
                s += a_[k] * row_[static_cast<std::size_t>(j - 1 + k)];
            next[static_cast<std::size_t>(j)] = std::move(s);
        }
        row_ = std::move(next);
        index_ = i;
    }

private:
    const Series& d_;
    Series a_;
    std::vector<Rat> row_;
    int index_;
};

SchroederResult solve_unit_multiplier(const SchroederProblem& p) {
    const int n_max = p.d.trunc_order();
    const Rat& r = p.h[1];
    std::vector<Rat> u(static_cast<std::size_t>(n_max) + 1);
    u[0] = 1;
    RowWalker rows(p.d, p.h);
    Rat r_pow(1);
    for (int n = 1; n <= n_max; ++n) {
        rows.advance();
        r_pow *= r;
        Rat s(0);
        for (int m = 0; m < n; ++m) s += rows.row()[static_cast<std::size_t>(m)] * u[static_cast<std::size_t>(m)];
        // row n of d*u(h) = u reads sum_m d_{n,m} u_m = u_n with d_{n,n} = r^n
        u[static_cast<std::size_t>(n)] = -s / (r_pow - 1);
    }
    return SchroederSolution{Series(std::move(u)), SchroederCase::UnitMultiplier, 0};
}

SchroederResult solve_parabolic(const SchroederProblem& p) {
    const int n_max = p.d.trunc_order();
    int k = 0;
    for (int i = 2; i <= n_max; ++i) {
        if (p.h[i] != 0) {
            k = i;
            break;
        }
    }
    if (k == 0) {
        // h = x through the window: the equation degenerates to d*u = u
        for (int i = 1; i <= n_max; ++i)
            if (p.d[i] != 0) return NoSolution{i};
        return SchroederSolution{Series::one(n_max), SchroederCase::Parabolic, 0};
    }
    for (int i = 1; i < k; ++i)
        if (p.d[i] != 0) return NoSolution{i};

    // row n pivots on d_{n,n-k+1} = (n-k+1) h_k, the first band entry below
    // the unit diagonal; it determines u_{n-k+1}
    const int determined = n_max - k + 1;
    std::vector<Rat> u(static_cast<std::size_t>(determined) + 1);
    u[0] = 1;
    RowWalker rows(p.d, p.h);
    for (int n = 1; n < k; ++n) rows.advance();
    for (int n = k; n <= n_max; ++n) {
        rows.advance();
        Rat s = rows.row()[0];
        for (int m = 1; m <= n - k; ++m)
            s += rows.row()[static_cast<std::size_t>(m)] * u[static_cast<std::size_t>(m)];
        u[static_cast<std::size_t>(n - k + 1)] = -s / (Rat(n - k + 1) * p.h[k]);
    }
    return SchroederSolution{Series(std::move(u)), SchroederCase::Parabolic, k};
}

}  // namespace

SchroederProblem normalize(const Series& d, const Series& h) {
    const int n = std::min(d.trunc_order(), h.trunc_order());
    Series dc = truncated(d, n);
    Series hc = truncated(h, n);
    if (dc[0] == 0) throw ZeroConstantTerm("weighted equation needs ord(d) = 0");
    if (hc[0] != 0 || n < 1 || hc[1] == 0)
        throw NotInvertibleForComposition("weighted equation needs ord(h) = 1");
    Series unit = scale(Rat(1) / dc[0], dc);
    return SchroederProblem{std::move(unit), std::move(hc), Rat(1), true};
}

SchroederResult solve(const SchroederProblem& prob) {
    SchroederProblem p = prob.normalized ? prob : normalize(prob.d, prob.h);
    const Rat& r = p.h[1];
    if (r == -1)
        throw UnsupportedNegativeUnit("multiplier -1 is outside both solvable cases");
    if (r == 1) return solve_parabolic(p);
    return solve_unit_multiplier(p);
}

Series residual(const SchroederProblem& prob, const Series& u) {
    return sub(mul(prob.d, compose(u, prob.h)), scale(prob.lambda, u));
}

bool order_correspondence(const SchroederSolution& sol, const SchroederProblem& prob, int i) {
    if (sol.case_used != SchroederCase::Parabolic || sol.k == 0)
        throw std::invalid_argument("order correspondence applies to the shifted case");
    if (i < 1) throw std::invalid_argument("order correspondence needs i >= 1");
    const int k = sol.k;
    if (sol.u.trunc_order() < i - 1 || prob.d.trunc_order() < i + k - 2)
        throw TruncationTooShort("windows too short to decide orders at i = " + std::to_string(i));
    bool u_high = true;
    for (int j = 1; j <= i - 1 && u_high; ++j) u_high = (sol.u[j] == 0);
    bool d_high = true;
    for (int j = 1; j <= i + k - 2 && d_high; ++j) d_high = (prob.d[j] == 0);
    return u_high == d_high;
}

}  // namespace riordan
