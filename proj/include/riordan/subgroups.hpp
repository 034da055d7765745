#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riordan/riordan.hpp"

namespace riordan {

enum class SubgroupKind { Toeplitz, Associated, Gk, DerivedR, DerivedA };

// Names a subgroup of the Riordan group for membership tests:
//   toeplitz     pairs (d, x)
//   associated   pairs (1, h)
//   gk:K         pairs (1, h) with h in x + x^K K[[x]], K >= 2
//   derivedR:n   n-th derived subgroup window of the full group
//   derivedA:n   n-th derived subgroup of the associated subgroup
struct SubgroupTag {
    SubgroupKind kind;
    int param = 0;  // K for Gk, n for DerivedR/DerivedA

    static SubgroupTag toeplitz() { return {SubgroupKind::Toeplitz, 0}; }
    static SubgroupTag associated() { return {SubgroupKind::Associated, 0}; }
    static SubgroupTag gk(int k);
    static SubgroupTag derived_r(int n);
    static SubgroupTag derived_a(int n);

    // "toeplitz" | "associated" | "gk:K" | "derivedR:n" | "derivedA:n";
    // throws std::invalid_argument on anything else
    static SubgroupTag parse(const std::string& text);
    std::string str() const;
};

// The first coefficient at which a membership window fails.
struct CoefficientViolation {
    char component;  // 'd' or 'h'
    int index;
    Rat found;
    Rat expected;
};

struct MembershipReport {
    bool member;
    int checked_through;  // degree up to which the pair's data was examined
    std::optional<CoefficientViolation> violation;
};

// Coefficient-window test for the tagged subgroup. Membership is membership
// of the truncated data; the report carries the examined window. Throws
// TruncationTooShort when the window required by the tag exceeds N.
MembershipReport is_member(const RiordanPair& p, const SubgroupTag& tag);

// One sub-diagonal of the matrix of p compared against the predicted band
// value: d_0 on the main diagonal, the constant d_m for 1 <= m <= k-2, and
// the progression d_m + j*h_{m+1} for m >= k-1.
struct DiagonalReport {
    int m;  // offset below the main diagonal
    std::vector<Rat> direct;       // entries (j+m, j) for j = 0..N-m
    std::vector<Rat> closed_form;  // predicted values, same index range
    std::optional<int> first_divergent_column;
    bool matches() const { return !first_divergent_column.has_value(); }
};

struct BandCheckReport {
    int k;
    int rows_checked;  // = N
    // diagonals m = 0 .. 2k-2; the last one is informational only, its
    // progression prediction is known to miss a quadratic correction
    std::vector<DiagonalReport> diagonals;
    // true iff every diagonal through m = 2k-3 matches its prediction
    bool asserted_ok;
};

// Compares the band structure of (d, h) with (1,h) in G_k against direct
// entry computation. Throws NotInGk when (1,h) fails the G_k window and
// TruncationTooShort when N < 2k-2.
BandCheckReport gk_band_check(const RiordanPair& p, int k);

// H_i((d,h)) = [x^i] h. Throws DegreeAboveTruncation when i > N.
Rat h_map(const RiordanPair& p, int i);

struct CommutationReport {
    int k;
    int projection_size;  // 2k-1
    bool projections_commute;
    Rat product_entry;  // entry (2k-1, 1) of the product of the two pairs
    Rat closed_form;    // v_{2k-1} + w_{2k-1} + k*v_k*w_k
    bool entry_matches;
    bool ok() const { return projections_commute && entry_matches; }
};

// Checks that the projections of two G_k members at size 2k-1 commute and
// that entry (2k-1, 1) of their product takes its predicted value. Throws
// NotInGk or TruncationTooShort (N < 2k-1) on precondition failure.
CommutationReport partial_commutation_check(const RiordanPair& v_pair,
                                            const RiordanPair& w_pair, int k);

}  // namespace riordan
