#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Formal power series over Q, known exactly through degree trunc_order().
// Values are immutable once constructed. Every operation states the degree
// through which its result is exact and never reports coefficients beyond
// it; binary operations truncate to the smaller of the two inputs.
class Series {
public:
    // zero series through degree trunc_order
    explicit Series(int trunc_order);
    // trunc_order = coeffs.size() - 1; coeffs must be non-empty
    explicit Series(std::vector<Rat> coeffs);

    static Series zero(int trunc_order) { return Series(trunc_order); }
    static Series constant(const Rat& c, int trunc_order);
    static Series one(int trunc_order) { return constant(1, trunc_order); }
    static Series identity(int trunc_order);  // the series x
    static Series monomial(const Rat& c, int degree, int trunc_order);

    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // unchecked access, 0 <= i <= trunc_order()
    const Rat& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    // checked access; throws DegreeAboveTruncation when i > trunc_order()
    const Rat& coefficient(int i) const;

    std::string str() const;

private:
    std::vector<Rat> coeffs_;
};

// Exact through min(trunc(a), trunc(b)).
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Rat& c, const Series& a);

// Cauchy product, exact through min(trunc(a), trunc(b)).
Series mul(const Series& a, const Series& b);

// Index of the first nonzero coefficient; nullopt means the series vanishes
// through its whole truncation window ("above truncation").
std::optional<int> order(const Series& a);

// Reciprocal by forward substitution; requires ord(a) = 0.
Series mul_inverse(const Series& a);

// f(g) for ord(g) >= 1, exact through min(trunc(f), trunc(g)).
Series compose(const Series& f, const Series& g);

// The series h^{-1} with h(h^{-1}) = h^{-1}(h) = x, by triangular solve on
// the composition equations; requires ord(h) = 1.
Series comp_inverse(const Series& h);

// Restriction to a lower truncation order (n <= trunc(a)).
Series truncated(const Series& a, int n);

// True iff the coefficients agree through degree n (n within both windows).
bool equal_through(const Series& a, const Series& b, int n);

// Equality at the common truncation order min(trunc(a), trunc(b)).
bool operator==(const Series& a, const Series& b);
inline bool operator!=(const Series& a, const Series& b) { return !(a == b); }

}  // namespace riordan
