#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "riordan/kernels.hpp"
#include "riordan/series.hpp"

namespace riordan {

// A Riordan pair (d, h) with ord(d) = 0 and ord(h) = 1, both components
// truncated at a common order N. The associated infinite lower-triangular
// matrix has entries d_{i,j} = [x^i] d*h^j; column generating series form a
// geometric progression with initial term d and ratio h.
class RiordanPair {
public:
    // Components are truncated to the smaller of the two windows. Throws
    // ZeroConstantTerm when d_0 = 0 and NotInvertibleForComposition when
    // h_0 != 0 or h_1 = 0 (or the window is too short to hold h_1).
    RiordanPair(Series d, Series h);

    const Series& d() const { return d_; }
    const Series& h() const { return h_; }
    int trunc_order() const { return d_.trunc_order(); }

    // [x^i] d*h^j; zero when j > i. Throws DegreeAboveTruncation when i > N.
    Rat entry(int i, int j) const;

    // Generating series of column j, d*h^j, at the pair's truncation order.
    // Column series are cached; the cache is shared between copies of the
    // pair and guarded for concurrent readers.
    const Series& column(int j) const;

private:
    Series d_, h_;

    struct ColumnCache {
        std::mutex mutex;
        std::vector<Series> columns;
    };
    std::shared_ptr<ColumnCache> cache_;
};

RiordanPair identity_pair(int trunc_order);  // (1, x)

// (d,h)(l,m) = (d*l(h), m(h)); truncation is the minimum of the inputs'.
RiordanPair multiply(const RiordanPair& p, const RiordanPair& q);

// (d,h)^{-1} = (1/d(hbar), hbar) with hbar the compositional inverse of h.
RiordanPair inverse(const RiordanPair& p);

// inverse(p) * inverse(q) * p * q
RiordanPair commutator(const RiordanPair& p, const RiordanPair& q);

// Fundamental theorem: (d,h) acts on a series by alpha -> d*alpha(h). Agrees
// with the matrix-vector product of any projection against alpha's column.
Series apply(const RiordanPair& p, const Series& alpha);

// Componentwise coefficient equality through degree n.
bool pairs_equal_through(const RiordanPair& p, const RiordanPair& q, int n);

// The A-sequence of (d,h): the unique A with h = x*A(h), computed as x/hbar
// shifted to degree 0. Its window is N-1 and a_0 = h_1.
Series a_sequence(const RiordanPair& p);

// Leading (n+1)x(n+1) block of a Riordan matrix, stored as triangular rows
// (row i holds entries j = 0..i).
class FiniteRiordanMatrix {
public:
    // row i of rows must hold exactly i+1 entries
    explicit FiniteRiordanMatrix(kernels::TriRows rows);

    int size_parameter() const { return static_cast<int>(rows_.size()) - 1; }
    const kernels::TriRows& rows() const { return rows_; }

    // bounds-checked; returns 0 above the diagonal
    const Rat& at(int i, int j) const;

private:
    kernels::TriRows rows_;
};

// Projection Pi_n of the pair's matrix. Throws DegreeAboveTruncation when
// n exceeds the pair's window.
FiniteRiordanMatrix project(const RiordanPair& p, int n);

// Exact triangular matrix product of equal-size blocks.
FiniteRiordanMatrix matmul(const FiniteRiordanMatrix& a, const FiniteRiordanMatrix& b);

// Deletion of the last row and column (the map P_n).
FiniteRiordanMatrix drop_last(const FiniteRiordanMatrix& m);

bool operator==(const FiniteRiordanMatrix& a, const FiniteRiordanMatrix& b);
inline bool operator!=(const FiniteRiordanMatrix& a, const FiniteRiordanMatrix& b) {
    return !(a == b);
}

// Recover the generating pair of a finite block: d is column 0, h is column 1
// over column 0. When check_all_columns is set, every entry is replayed
// against d*h^j; any mismatch (or a zero corner entry, or a zero ratio
// coefficient) throws NotRiordanShape.
RiordanPair extract_pair(const FiniteRiordanMatrix& m, bool check_all_columns = true);

}  // namespace riordan
