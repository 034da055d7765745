#include "riordan/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "riordan/errors.hpp"
#include "riordan/kernels.hpp"

namespace riordan {

Series::Series(int trunc_order) {
    if (trunc_order < 0) throw std::invalid_argument("series truncation order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(trunc_order) + 1, Rat(0));
}

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant term");
}

Series Series::constant(const Rat& c, int trunc_order) {
    Series s(trunc_order);
    s.coeffs_[0] = c;
    return s;
}

Series Series::identity(int trunc_order) { return monomial(1, 1, trunc_order); }

Series Series::monomial(const Rat& c, int degree, int trunc_order) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
    if (degree > trunc_order)
        throw DegreeAboveTruncation("monomial degree " + std::to_string(degree) +
                                    " exceeds truncation order " + std::to_string(trunc_order));
    Series s(trunc_order);
    s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
}

const Rat& Series::coefficient(int i) const {
    if (i < 0 || i > trunc_order())
        throw DegreeAboveTruncation("coefficient index " + std::to_string(i) +
                                    " outside window [0, " + std::to_string(trunc_order()) + "]");
    return coeffs_[static_cast<std::size_t>(i)];
}

std::string Series::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= trunc_order(); ++i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << rat_to_string(a);
        } else {
            if (a != 1) out << rat_to_string(a) << "*";
            out << "x";
            if (i > 1) out << "^" << i;
        }
    }
    if (first) out << "0";
    out << " + O(x^" << trunc_order() + 1 << ")";
    return out.str();
}

namespace {

int common_order(const Series& a, const Series& b) {
    return std::min(a.trunc_order(), b.trunc_order());
}

}  // namespace

Series add(const Series& a, const Series& b) {
    const int n = common_order(a, b);
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[i] + b[i];
    return Series(std::move(out));
}

Series sub(const Series& a, const Series& b) {
    const int n = common_order(a, b);
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out[static_cast<std::size_t>(i)] = a[i] - b[i];
    return Series(std::move(out));
}

Series negate(const Series& a) {
    std::vector<Rat> out(a.coeffs());
    for (Rat& c : out) c = -c;
    return Series(std::move(out));
}

Series scale(const Rat& c, const Series& a) {
    std::vector<Rat> out(a.coeffs());
    for (Rat& x : out) x *= c;
    return Series(std::move(out));
}

Series mul(const Series& a, const Series& b) {
    const int n = common_order(a, b);
    const std::size_t size = static_cast<std::size_t>(n) + 1;
    std::vector<Rat> out(size);
    kernels::cauchy_product(a.coeffs().data(), a.coeffs().size(), b.coeffs().data(),
                            b.coeffs().size(), out.data(), size);
    return Series(std::move(out));
}

std::optional<int> order(const Series& a) {
    for (int i = 0; i <= a.trunc_order(); ++i)
        if (a[i] != 0) return i;
    return std::nullopt;
}

Series mul_inverse(const Series& a) {
    if (a[0] == 0) throw ZeroConstantTerm("reciprocal needs a nonzero constant term");
    const int n = a.trunc_order();
    std::vector<Rat> out(static_cast<std::size_t>(n) + 1);
    out[0] = Rat(1) / a[0];
    for (int i = 1; i <= n; ++i) {
        Rat s(0);
        for (int k = 1; k <= i; ++k) s += a[k] * out[static_cast<std::size_t>(i - k)];
        out[static_cast<std::size_t>(i)] = -s / a[0];
    }
    return Series(std::move(out));
}

Series compose(const Series& f, const Series& g) {
    if (g[0] != 0) throw CompositionOrderError("inner series must have zero constant term");
    const int n = common_order(f, g);
    // Horner in g: exact because every discarded term of g contributes only
    // beyond degree n once ord(g) >= 1.
    Series acc = Series::constant(f[n], n);
    Series gn = truncated(g, n);
    for (int i = n - 1; i >= 0; --i) {
        acc = mul(acc, gn);
        acc = add(acc, Series::constant(f[i], n));
    }
    return acc;
}

Series comp_inverse(const Series& h) {
    if (h[0] != 0 || h.trunc_order() < 1 || h[1] == 0)
        throw NotInvertibleForComposition("compositional inverse needs order exactly 1");
    const int n = h.trunc_order();
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1, Rat(0));
    b[1] = Rat(1) / h[1];
    for (int m = 2; m <= n; ++m) {
        // With b known through degree m-1 and b_m provisionally 0, the degree-m
        // coefficient of h(b) is off from [x^m] x = 0 by exactly h_1 * b_m.
        Series partial = compose(truncated(h, m), Series(std::vector<Rat>(b.begin(), b.begin() + m + 1)));
        b[static_cast<std::size_t>(m)] = -partial[m] / h[1];
    }
    return Series(std::move(b));
}

Series truncated(const Series& a, int n) {
    if (n < 0 || n > a.trunc_order())
        throw DegreeAboveTruncation("cannot truncate to order " + std::to_string(n) +
                                    " from window [0, " + std::to_string(a.trunc_order()) + "]");
    return Series(std::vector<Rat>(a.coeffs().begin(), a.coeffs().begin() + n + 1));
}

bool equal_through(const Series& a, const Series& b, int n) {
    if (n > a.trunc_order() || n > b.trunc_order())
        throw DegreeAboveTruncation("comparison degree " + std::to_string(n) +
                                    " exceeds a truncation window");
    for (int i = 0; i <= n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool operator==(const Series& a, const Series& b) {
    return equal_through(a, b, common_order(a, b));
}

}  // namespace riordan
