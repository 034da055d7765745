#include "riordan/riordan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

std::pair<Series, Series> to_common_window(Series d, Series h) {
    const int n = std::min(d.trunc_order(), h.trunc_order());
    if (d.trunc_order() > n) d = truncated(d, n);
    if (h.trunc_order() > n) h = truncated(h, n);
    return {std::move(d), std::move(h)};
}

}  // namespace

RiordanPair::RiordanPair(Series d, Series h)
    : d_(Series::zero(0)), h_(Series::zero(0)), cache_(std::make_shared<ColumnCache>()) {
    auto [dc, hc] = to_common_window(std::move(d), std::move(h));
    if (dc[0] == 0) throw ZeroConstantTerm("pair needs ord(d) = 0");
    if (hc[0] != 0 || hc.trunc_order() < 1 || hc[1] == 0)
        throw NotInvertibleForComposition("pair needs ord(h) = 1");
    d_ = std::move(dc);
    h_ = std::move(hc);
}

const Series& RiordanPair::column(int j) const {
    if (j < 0) throw std::invalid_argument("column index must be >= 0");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& cols = cache_->columns;
    if (cols.empty()) cols.push_back(d_);
    while (static_cast<int>(cols.size()) <= j) cols.push_back(mul(cols.back(), h_));
    return cols[static_cast<std::size_t>(j)];
}

Rat RiordanPair::entry(int i, int j) const {
    if (i < 0 || j < 0) throw std::invalid_argument("matrix indices must be >= 0");
    if (i > trunc_order())
        throw DegreeAboveTruncation("row " + std::to_string(i) + " beyond window [0, " +
                                    std::to_string(trunc_order()) + "]");
    if (j > i) return 0;
    return column(j)[i];
}

RiordanPair identity_pair(int trunc_order) {
    return RiordanPair(Series::one(trunc_order), Series::identity(trunc_order));
}

RiordanPair multiply(const RiordanPair& p, const RiordanPair& q) {
    Series lh = compose(q.d(), p.h());
    Series mh = compose(q.h(), p.h());
    return RiordanPair(mul(p.d(), lh), std::move(mh));
}

RiordanPair inverse(const RiordanPair& p) {
    Series hbar = comp_inverse(p.h());
    Series dinv = mul_inverse(compose(p.d(), hbar));
    return RiordanPair(std::move(dinv), std::move(hbar));
}

RiordanPair commutator(const RiordanPair& p, const RiordanPair& q) {
    return multiply(inverse(p), multiply(inverse(q), multiply(p, q)));
}

Series apply(const RiordanPair& p, const Series& alpha) {
    return mul(p.d(), compose(alpha, p.h()));
}

bool pairs_equal_through(const RiordanPair& p, const RiordanPair& q, int n) {
    return equal_through(p.d(), q.d(), n) && equal_through(p.h(), q.h(), n);
}

Series a_sequence(const RiordanPair& p) {
    Series hbar = comp_inverse(p.h());
    const int n = hbar.trunc_order();
    // hbar/x, window n-1
    std::vector<Rat> shifted(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) shifted[static_cast<std::size_t>(i - 1)] = hbar[i];
    return mul_inverse(Series(std::move(shifted)));
}

FiniteRiordanMatrix::FiniteRiordanMatrix(kernels::TriRows rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("finite matrix needs at least one row");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != i + 1)
            throw std::invalid_argument("triangular row " + std::to_string(i) +
                                        " must hold " + std::to_string(i + 1) + " entries");
}

const Rat& FiniteRiordanMatrix::at(int i, int j) const {
    static const Rat zero(0);
    if (i < 0 || j < 0 || i > size_parameter())
        throw std::out_of_range("matrix index outside block");
    if (j > i) return zero;
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

FiniteRiordanMatrix project(const RiordanPair& p, int n) {
    if (n < 0) throw std::invalid_argument("projection size must be >= 0");
    if (n > p.trunc_order())
        throw DegreeAboveTruncation("projection size " + std::to_string(n) +
                                    " beyond window [0, " + std::to_string(p.trunc_order()) + "]");
    kernels::TriRows rows(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        auto& row = rows[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) row[static_cast<std::size_t>(j)] = p.column(j)[i];
    }
    return FiniteRiordanMatrix(std::move(rows));
}

FiniteRiordanMatrix matmul(const FiniteRiordanMatrix& a, const FiniteRiordanMatrix& b) {
    if (a.size_parameter() != b.size_parameter())
        throw std::invalid_argument("matrix product needs equal block sizes");
    return FiniteRiordanMatrix(kernels::tri_matmul(a.rows(), b.rows()));
}

FiniteRiordanMatrix drop_last(const FiniteRiordanMatrix& m) {
    if (m.size_parameter() == 0)
        throw std::invalid_argument("cannot drop the only row of a block");
    kernels::TriRows rows(m.rows().begin(), m.rows().end() - 1);
    return FiniteRiordanMatrix(std::move(rows));
}

bool operator==(const FiniteRiordanMatrix& a, const FiniteRiordanMatrix& b) {
    return a.rows() == b.rows();
}

RiordanPair extract_pair(const FiniteRiordanMatrix& m, bool check_all_columns) {
    const int n = m.size_parameter();
    if (m.at(0, 0) == 0) throw NotRiordanShape("corner entry must be nonzero");
    std::vector<Rat> d_coeffs(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) d_coeffs[static_cast<std::size_t>(i)] = m.at(i, 0);
    Series d(std::move(d_coeffs));

    if (n < 1) throw NotRiordanShape("block too small to carry the ratio series");
    std::vector<Rat> dh_coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    for (int i = 1; i <= n; ++i) dh_coeffs[static_cast<std::size_t>(i)] = m.at(i, 1);
    Series h = mul(Series(std::move(dh_coeffs)), mul_inverse(d));
    if (h[0] != 0 || h[1] == 0)
        throw NotRiordanShape("column 1 over column 0 must have order exactly 1");

    RiordanPair p(std::move(d), std::move(h));
    if (check_all_columns) {
        for (int j = 2; j <= n; ++j)
            for (int i = j; i <= n; ++i)
                if (p.entry(i, j) != m.at(i, j))
                    throw NotRiordanShape("column " + std::to_string(j) +
                                          " is not the geometric continuation at row " +
                                          std::to_string(i));
    }
    return p;
}

}  // namespace riordan
