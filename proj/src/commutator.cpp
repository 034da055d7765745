#include "riordan/commutator.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

Series shift_series(int q, const Rat& lambda, int window) {
    return add(Series::identity(window), Series::monomial(lambda, q, window));
}

// degree-i coefficient of g(a(v)) - v(a) with v given as a raw prefix
Rat row_residual(const Series& g, const Series& a, const std::vector<Rat>& v, int i) {
    Series vi(std::vector<Rat>(v.begin(), v.begin() + i + 1));
    Series lhs = compose(g, compose(a, vi));
    Series rhs = compose(vi, a);
    return lhs[i] - rhs[i];
}

// The unique v = x + v_{q+1}x^{q+1} + ... with g(a(v)) = v(a) for the shift
// a = x + lambda x^q, given g in G_{2q}. Row i of the identity first touches
// v_{i-q+1} and is affine in it; probing the residual at 0 and 1 recovers
// the line and its root. Rows below 2q hold identically. Coefficients past
// v_{N-q+1} never enter rows <= N and stay zero.
Series solve_conjugation(const Series& g, int q, const Rat& lambda) {
    const int n = g.trunc_order();
    Series a = shift_series(q, lambda, n);
    std::vector<Rat> v(static_cast<std::size_t>(n) + 1, Rat(0));
    v[1] = 1;
    for (int i = 2 * q; i <= n; ++i) {
        const std::size_t m = static_cast<std::size_t>(i - q + 1);
        v[m] = 0;
        const Rat e0 = row_residual(g, a, v, i);
        v[m] = 1;
        const Rat e1 = row_residual(g, a, v, i);
        const Rat slope = e1 - e0;
        if (slope == 0) throw std::logic_error("conjugation row lost its pivot");
        v[m] = -e0 / slope;
    }
    return Series(std::move(v));
}

CommutatorWitness checked(RiordanPair left, RiordanPair right, RiordanPair target, int order) {
    CommutatorWitness w{std::move(left), std::move(right), std::move(target), order};
    if (!witness_holds(w))
        throw VerificationFailed("bracket does not reproduce the target through order " +
                                 std::to_string(order));
    return w;
}

}  // namespace

bool witness_holds(const CommutatorWitness& w) {
    RiordanPair bracket = commutator(w.left, w.right);
    return pairs_equal_through(bracket, w.target, w.verified_order);
}

CommutatorWitness decompose_diag(const RiordanPair& g_pair, const Rat& r) {
    if (r == 0 || r == 1 || r == -1)
        throw UnitMultiplierError("diagonal multiplier must avoid {0, 1, -1}");
    if (!is_member(g_pair, SubgroupTag::gk(2)).member)
        throw NotInG2("target of the diagonal bracket must lie in G_2");
    const int n = g_pair.trunc_order();
    Series v = solve_conjugation(g_pair.h(), 1, r - 1);
    RiordanPair left(Series::one(n), scale(r, Series::identity(n)));
    RiordanPair right(Series::one(n), std::move(v));
    return checked(std::move(left), std::move(right), g_pair, n);
}

CommutatorWitness decompose_shift(const RiordanPair& g_pair, int n, const Rat& lambda) {
    if (n < 1) throw std::invalid_argument("shift level must be >= 1");
    if (lambda == 0) throw ZeroLambda("shift bracket needs a nonzero lambda");
    if (n == 1 && (lambda == -1 || lambda == -2))
        throw UnitMultiplierError("level-1 shift multiplier 1+lambda must avoid {0, -1}");
    if (n > 30)
        throw TruncationTooShort("level " + std::to_string(n) + " window exceeds any truncation");
    if (!is_member(g_pair, SubgroupTag::gk(1 << n)).member)
        throw NotInGk("target of the level-" + std::to_string(n) + " bracket must lie in G_" +
                      std::to_string(1 << n));
    const int window = g_pair.trunc_order();
    const int q = 1 << (n - 1);
    Series v = solve_conjugation(g_pair.h(), q, lambda);
    RiordanPair left(Series::one(window), shift_series(q, lambda, window));
    RiordanPair right(Series::one(window), std::move(v));
    return checked(std::move(left), std::move(right), g_pair, window);
}

namespace {

std::unique_ptr<DerivedCertificate::Node> build_node(const RiordanPair& pair, int level) {
    auto node = std::make_unique<DerivedCertificate::Node>(
        DerivedCertificate::Node{pair, level, nullptr, nullptr, pair.trunc_order()});
    if (level == 0) {
        if (!is_member(pair, SubgroupTag::associated()).member)
            throw std::logic_error("certificate leaf escaped the associated subgroup");
        return node;
    }
    CommutatorWitness w = decompose_shift(pair, level, 1);
    node->verified_order = w.verified_order;
    node->left = build_node(w.left, level - 1);
    node->right = build_node(w.right, level - 1);
    return node;
}

bool node_holds(const DerivedCertificate::Node& node) {
    if (!node.left) return is_member(node.pair, SubgroupTag::associated()).member;
    if (!node_holds(*node.left) || !node_holds(*node.right)) return false;
    RiordanPair bracket = commutator(evaluate(*node.left), evaluate(*node.right));
    return pairs_equal_through(bracket, node.pair, node.verified_order);
}

}  // namespace

DerivedCertificate certify_associated(const RiordanPair& g_pair, int n) {
    if (n < 1) throw std::invalid_argument("certificate depth must be >= 1");
    DerivedCertificate cert{n, build_node(g_pair, n)};
    if (!certificate_holds(cert))
        throw VerificationFailed("certificate re-evaluation missed its root");
    return cert;
}

RiordanPair evaluate(const DerivedCertificate::Node& node) {
    if (!node.left) return node.pair;
    return commutator(evaluate(*node.left), evaluate(*node.right));
}

bool certificate_holds(const DerivedCertificate& cert) {
    return cert.root && node_holds(*cert.root);
}

namespace {

// One role assignment for the full decomposition: the substitution parts are
// always (a, v); the unit part f solves a weighted Schroeder equation whose
// inner series is a (unit on the a-side factor 1) or v (swapped).
std::optional<CommutatorWitness> assemble(const RiordanPair& target, const Series& a,
                                          const Series& v, const Series& weight,
                                          const Series& inner, bool unit_on_left) {
    SchroederProblem prob = normalize(weight, inner);
    SchroederResult result = solve(prob);
    const auto* sol = std::get_if<SchroederSolution>(&result);
    if (sol == nullptr) return std::nullopt;
    const int w_order = sol->u.trunc_order();
    if (w_order < 2) return std::nullopt;
    Series f = sol->u;
    RiordanPair left = unit_on_left ? RiordanPair(Series::one(w_order), truncated(a, w_order))
                                    : RiordanPair(f, truncated(a, w_order));
    RiordanPair right = unit_on_left ? RiordanPair(f, truncated(v, w_order))
                                     : RiordanPair(Series::one(w_order), truncated(v, w_order));
    CommutatorWitness w{std::move(left), std::move(right), target, w_order};
    if (!witness_holds(w)) return std::nullopt;
    return w;
}

}  // namespace

CommutatorWitness decompose_riordan(const RiordanPair& p, int n) {
    if (n < 1) throw std::invalid_argument("decomposition level must be >= 1");
    if (n > 30)
        throw TruncationTooShort("level " + std::to_string(n) + " window exceeds any truncation");
    if (!is_member(p, SubgroupTag::derived_r(n)).member)
        throw NotInDerivedR("pair fails the level-" + std::to_string(n) + " window");
    const int window = p.trunc_order();
    if (!order(sub(p.d(), Series::one(window))) &&
        !order(sub(p.h(), Series::identity(window))))
        return CommutatorWitness{identity_pair(window), identity_pair(window), p, window};

    const int q = 1 << (n - 1);
    Series v = solve_conjugation(p.h(), q, 1);
    Series a = shift_series(q, 1, window);
    Series weight = compose(p.d(), compose(a, v));  // D(a(v))

    // left = (1, a), right = (f, v): the unit condition reduces to
    // [1/D(a(v))] f(a) = f
    if (auto w = assemble(p, a, v, mul_inverse(weight), a, true)) return *w;
    // left = (f, a), right = (1, v): the condition becomes D(a(v)) f(v) = f
    if (auto w = assemble(p, a, v, weight, v, false)) return *w;
    throw VerificationFailed("no role assignment produced a verifying bracket");
}

}  // namespace riordan
