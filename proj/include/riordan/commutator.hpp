#pragma once

#include <memory>

#include "riordan/riordan.hpp"
#include "riordan/schroeder.hpp"
#include "riordan/subgroups.hpp"

namespace riordan {

// A constructive factorization target = left^{-1} right^{-1} left right,
// confirmed by exact multiplication through verified_order before being
// returned. No witness leaves this module unverified.
struct CommutatorWitness {
    RiordanPair left;
    RiordanPair right;
    RiordanPair target;
    int verified_order;
};

// Recomputes the bracket and compares against the target; true for every
// witness this module emits.
bool witness_holds(const CommutatorWitness& w);

// Writes (1,g), g in G_2, as the bracket of the diagonal pair (1, rx) and a
// unique (1, v) in G_2. Throws UnitMultiplierError when r is 0, 1 or -1 and
// NotInG2 when the target fails the G_2 window.
CommutatorWitness decompose_diag(const RiordanPair& g_pair, const Rat& r);

// Writes (1,g), g in G_{2^n}, as the bracket of A = (1, x + lambda x^{2^{n-1}})
// and a unique B in G_{2^{n-1}+1}. Each new B-coefficient is the solution of
// one affine condition: the row residual of the defining identity is probed
// at unknown = 0 and unknown = 1 and the line is solved. Throws ZeroLambda,
// NotInGk, TruncationTooShort; for n = 1 the diagonal multiplier 1+lambda
// must stay outside {0, 1, -1} (UnitMultiplierError).
CommutatorWitness decompose_shift(const RiordanPair& g_pair, int n, const Rat& lambda);

// A depth-n certificate that a pair lies in the n-th derived subgroup of the
// associated subgroup: internal nodes carry one bracket factorization each,
// leaves are plain associated-subgroup members.
struct DerivedCertificate {
    struct Node {
        RiordanPair pair;
        int level;  // pair is a member of G_{2^level}; leaves sit at level 0
        std::unique_ptr<Node> left;
        std::unique_ptr<Node> right;
        int verified_order;  // bracket checked through here (internal nodes)
    };
    int depth;
    std::unique_ptr<Node> root;
};

// Recursively factors g in G_{2^n} down to associated-subgroup leaves, one
// decompose_shift (lambda = 1) per internal node.
DerivedCertificate certify_associated(const RiordanPair& g_pair, int n);

// Re-multiplies the tree bottom-up; the result of an internal node is the
// bracket of its children and must reproduce the node's pair.
RiordanPair evaluate(const DerivedCertificate::Node& node);
bool certificate_holds(const DerivedCertificate& cert);

// Writes a pair in the level-n derived window of the full group as a bracket
// of two pairs in the level-(n-1) window: the substitution parts come from
// the associated-subgroup machinery, one unit part is the constant 1, the
// other solves a weighted Schroeder equation. verified_order is
// N - (2^{n-1} - 1), the window through which the Schroeder solution is
// exact. Throws NotInDerivedR, TruncationTooShort.
CommutatorWitness decompose_riordan(const RiordanPair& p, int n);

}  // namespace riordan
