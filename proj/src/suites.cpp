#include "riordan/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <variant>

#include "riordan/commutator.hpp"
#include "riordan/derived.hpp"
#include "riordan/errors.hpp"
#include "riordan/kernels.hpp"
#include "riordan/riordan.hpp"
#include "riordan/schroeder.hpp"
#include "riordan/subgroups.hpp"

namespace riordan {

namespace {

using Notes = std::vector<std::string>;

void check(bool cond, const std::string& what) {
    if (!cond) throw VerificationFailed(what);
}

// deterministic small choice in [lo, hi] derived from the seed
int pick(std::uint64_t bits, int lo, int hi) {
    return lo + static_cast<int>(bits % static_cast<std::uint64_t>(hi - lo + 1));
}

RiordanPair sample_associated(int window, std::uint64_t seed) {
    return RiordanPair(Series::one(window), sample_derived(0, window, seed).h());
}

// one line about the informational diagonal m = 2k-2
std::string band_note(const BandCheckReport& report) {
    const DiagonalReport& last = report.diagonals.back();
    std::ostringstream out;
    out << "band k=" << report.k << " diagonal m=" << last.m;
    if (last.matches()) {
        out << " matches the progression";
    } else {
        out << " leaves the progression at column " << *last.first_divergent_column;
    }
    return out.str();
}

// shifted-case data: d in 1 + x^k K[[x]], h in x + c x^k + ... with c != 0.
// The d and h streams use separate engines, so widening the window extends
// both coefficient lists without reshuffling the shared prefix.
std::pair<Series, Series> case2_data(std::uint64_t seed, int window, int k) {
    SmallCoeffRng rd(seed * 2 + 1), rh(seed * 2 + 2);
    std::vector<Rat> d(static_cast<std::size_t>(window) + 1, Rat(0));
    std::vector<Rat> h(static_cast<std::size_t>(window) + 1, Rat(0));
    d[0] = 1;
    for (int i = k; i <= window; ++i) d[static_cast<std::size_t>(i)] = rd.next();
    h[1] = 1;
    h[static_cast<std::size_t>(k)] = rh.next_nonzero();
    for (int i = k + 1; i <= window; ++i) h[static_cast<std::size_t>(i)] = rh.next();
    return {Series(std::move(d)), Series(std::move(h))};
}

// the densest member of the level-n window: every free coefficient set to 1
RiordanPair extremal_derived(int n, int window) {
    int d_from = (1 << n) - n;
    int h_from = 1 << n;
    std::vector<Rat> d(static_cast<std::size_t>(window) + 1, Rat(0));
    std::vector<Rat> h(static_cast<std::size_t>(window) + 1, Rat(0));
    d[0] = 1;
    for (int i = d_from; i <= window; ++i) d[static_cast<std::size_t>(i)] = 1;
    h[1] = 1;
    for (int i = h_from; i <= window; ++i) h[static_cast<std::size_t>(i)] = 1;
    return RiordanPair(Series(std::move(d)), Series(std::move(h)));
}

int leaf_count(const DerivedCertificate::Node& node) {
    if (!node.left) return 1;
    return leaf_count(*node.left) + leaf_count(*node.right);
}

void group_axioms_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    RiordanPair p = sample_derived(0, trunc, seed * 3 + 1);
    RiordanPair q = sample_derived(0, trunc, seed * 3 + 2);
    RiordanPair s = sample_derived(0, trunc, seed * 3 + 3);
    RiordanPair e = identity_pair(trunc);

    check(pairs_equal_through(multiply(multiply(p, q), s), multiply(p, multiply(q, s)), trunc),
          "product is not associative");
    check(pairs_equal_through(multiply(p, e), p, trunc), "right identity fails");
    check(pairs_equal_through(multiply(e, p), p, trunc), "left identity fails");
    RiordanPair pinv = inverse(p);
    check(pairs_equal_through(multiply(p, pinv), e, trunc), "right inverse fails");
    check(pairs_equal_through(multiply(pinv, p), e, trunc), "left inverse fails");

    RiordanPair pq = multiply(p, q);
    for (int n = 0; n <= trunc; ++n) {
        check(project(pq, n) == matmul(project(p, n), project(q, n)),
              "projection is not multiplicative at size " + std::to_string(n));
    }

    Series alpha = sample_derived(0, trunc, seed * 3 + 4).d();
    Series image = apply(p, alpha);
    std::vector<Rat> direct = kernels::tri_matvec(project(p, trunc).rows(), alpha.coeffs());
    check(image.coeffs() == direct, "series action disagrees with the matrix action");

    for (int j = 0; j + 1 <= trunc; ++j) {
        check(mul(p.column(j), p.h()) == p.column(j + 1),
              "column progression breaks at column " + std::to_string(j));
    }
}

void a_sequence_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    RiordanPair p = sample_derived(0, trunc, seed * 5 + 1);
    Series a = a_sequence(p);
    check(a[0] == p.h()[1], "a_0 must equal h_1");
    for (int i = 1; i <= trunc; ++i) {
        for (int j = 1; j <= i; ++j) {
            Rat sum = 0;
            for (int l = 0; l <= i - j; ++l) sum += a[l] * p.entry(i - 1, j - 1 + l);
            check(sum == p.entry(i, j), "A-sequence recurrence fails at (" + std::to_string(i) +
                                            ", " + std::to_string(j) + ")");
        }
    }

    int k = pick(seed, 2, 4);
    int window = std::max(trunc, 2 * k - 1);
    RiordanPair g = sample_gk(k, window, seed * 5 + 2);
    Series ag = a_sequence(g);
    for (int l = 1; l <= 2 * k - 2; ++l) {
        check(ag[l - 1] == g.h()[l],
              "A-sequence window of G_" + std::to_string(k) + " fails at " + std::to_string(l));
    }
}

void gk_band_case(std::uint64_t seed, int trunc, Notes& notes) {
    int k = pick(seed, 2, 4);
    int window = std::max(trunc, 2 * k - 1);

    RiordanPair pure = sample_gk(k, window, seed * 7 + 1);
    BandCheckReport pr = gk_band_check(pure, k);
    check(pr.asserted_ok, "band prediction fails for a unit-free pair");
    notes.push_back(band_note(pr));

    SmallCoeffRng rd(seed * 7 + 2);
    std::vector<Rat> d(static_cast<std::size_t>(window) + 1, Rat(0));
    d[0] = 1;
    for (int i = k - 1; i <= window; ++i) d[static_cast<std::size_t>(i)] = rd.next();
    RiordanPair weighted(Series(std::move(d)), pure.h());
    BandCheckReport wr = gk_band_check(weighted, k);
    check(wr.asserted_ok, "band prediction fails for d in 1 + x^{k-1} K[[x]]");

    std::vector<Rat> low(static_cast<std::size_t>(window) + 1, Rat(0));
    low[0] = 1;
    low[1] = 1;
    RiordanPair general(Series(std::move(low)), pure.h());
    BandCheckReport gr = gk_band_check(general, k);
    std::ostringstream out;
    out << "general-unit band k=" << k << " asserted_ok=" << (gr.asserted_ok ? "yes" : "no");
    notes.push_back(out.str());
}

void h_homomorphism_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    int k = pick(seed, 2, 4);
    int window = std::max(trunc, 2 * k);
    RiordanPair v = sample_gk(k, window, seed * 9 + 1);
    RiordanPair w = sample_gk(k, window, seed * 9 + 2);

    RiordanPair vw = multiply(v, w);
    for (int i = 2; i <= 2 * k - 2; ++i) {
        check(h_map(vw, i) == h_map(v, i) + h_map(w, i),
              "H_" + std::to_string(i) + " is not additive on G_" + std::to_string(k));
    }

    RiordanPair nested = sample_gk(k + 1, window, seed * 9 + 3);
    check(is_member(nested, SubgroupTag::gk(k)).member,
          "G_" + std::to_string(k + 1) + " must sit inside G_" + std::to_string(k));

    RiordanPair g2 = sample_gk(2, window, seed * 9 + 4);
    RiordanPair conj = multiply(multiply(inverse(g2), v), g2);
    check(is_member(conj, SubgroupTag::gk(k)).member,
          "conjugation must keep G_" + std::to_string(k) + " stable");
}

void partial_commute_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    int k = pick(seed, 2, 4);
    int window = std::max(trunc, 2 * k);
    RiordanPair v = sample_gk(k, window, seed * 11 + 1);
    RiordanPair w = sample_gk(k, window, seed * 11 + 2);

    CommutationReport report = partial_commutation_check(v, w, k);
    check(report.projections_commute, "projections at size 2k-1 must commute");
    check(report.entry_matches, "entry (2k-1, 1) misses its closed form");
    check(partial_commutation_check(v, v, k).ok(), "a pair must partially commute with itself");

    check(is_member(commutator(v, w), SubgroupTag::gk(2 * k)).member,
          "bracket of G_" + std::to_string(k) + " members must land in G_" + std::to_string(2 * k));
}

void schroeder_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    int flavor = static_cast<int>(seed % 3);
    if (flavor == 0) {
        static const Rat multipliers[] = {Rat(2), Rat(3), Rat(-2), Rat(1) / 2};
        const Rat& r = multipliers[(seed / 3) % 4];
        SmallCoeffRng rd(seed * 2 + 1), rh(seed * 2 + 2);
        std::vector<Rat> d(static_cast<std::size_t>(trunc) + 1);
        std::vector<Rat> h(static_cast<std::size_t>(trunc) + 1, Rat(0));
        d[0] = rd.next_nonzero();
        for (int i = 1; i <= trunc; ++i) d[static_cast<std::size_t>(i)] = rd.next();
        h[1] = r;
        for (int i = 2; i <= trunc; ++i) h[static_cast<std::size_t>(i)] = rh.next();
        SchroederProblem prob = normalize(Series(std::move(d)), Series(std::move(h)));

        SchroederResult res = solve(prob);
        const auto* sol = std::get_if<SchroederSolution>(&res);
        check(sol != nullptr, "a non-unit multiplier must always be solvable");
        check(sol->case_used == SchroederCase::UnitMultiplier, "wrong case for h_1 = r");
        check(sol->u[0] == 1, "u must start at 1");
        check(sol->u.trunc_order() == trunc, "the multiplier case must fill the whole window");
        check(!order(residual(prob, sol->u)).has_value(), "residual must vanish");

        SchroederResult again = solve(prob);
        check(std::get<SchroederSolution>(again).u == sol->u, "solver must be deterministic");

        std::vector<Rat> bent = sol->u.coeffs();
        bent.back() += 1;
        check(order(residual(prob, Series(std::move(bent)))).has_value(),
              "a perturbed candidate must fail the residual");
    } else if (flavor == 1) {
        int k = pick(seed / 3, 2, 5);
        int window = std::max(trunc, k + 2);
        auto [d, h] = case2_data(seed, window, k);
        SchroederProblem prob = normalize(d, h);

        SchroederResult res = solve(prob);
        const auto* sol = std::get_if<SchroederSolution>(&res);
        check(sol != nullptr, "d in 1 + x^k K[[x]] must be solvable in the shifted case");
        check(sol->case_used == SchroederCase::Parabolic, "wrong case for h_1 = 1");
        check(sol->k == k, "detected shift index is wrong");
        check(sol->u.trunc_order() == window - k + 1, "shifted-case window must be N-k+1");
        check(!order(residual(prob, sol->u)).has_value(), "residual must vanish");

        auto [dw, hw] = case2_data(seed, window + 4, k);
        SchroederResult wider = solve(normalize(dw, hw));
        check(equal_through(sol->u, std::get<SchroederSolution>(wider).u, sol->u.trunc_order()),
              "widening the window must preserve the solution prefix");

        for (int i = 1; i <= std::min(6, window - k + 1); ++i) {
            check(order_correspondence(*sol, prob, i),
                  "order correspondence fails at i = " + std::to_string(i));
        }
    } else {
        int k = pick(seed / 3, 2, 6);
        int bad = pick(seed / 7, 1, k - 1);
        int window = std::max(trunc, k + 1);
        Series h = add(Series::identity(window), Series::monomial(1, k, window));

        Series blocked = add(Series::one(window), Series::monomial(1, bad, window));
        SchroederResult res = solve(normalize(blocked, h));
        const auto* no = std::get_if<NoSolution>(&res);
        check(no != nullptr, "d with a low coefficient must be unsolvable in the shifted case");
        check(no->violating_index == bad, "the violating index must be the first low coefficient");

        Series open = add(Series::one(window), Series::monomial(1, k, window));
        check(std::holds_alternative<SchroederSolution>(solve(normalize(open, h))),
              "clearing the low coefficients must restore solvability");
    }
}

void decompose_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    int n = pick(seed, 1, 3);
    int q = 1 << (n - 1);
    int window = std::max(trunc, 1 << (n + 1));
    RiordanPair g = sample_gk(1 << n, window, seed * 7 + 1);

    CommutatorWitness w = decompose_shift(g, n, 1);
    check(witness_holds(w), "shift witness must re-verify");
    check(w.verified_order == window, "shift witness must be exact through the window");
    check(is_member(w.right, SubgroupTag::gk(q + 1)).member,
          "the solved factor must lie in G_" + std::to_string(q + 1));

    std::vector<Rat> bent = w.right.h().coeffs();
    bent[static_cast<std::size_t>(q) + 1] += 1;
    CommutatorWitness broken = w;
    broken.right = RiordanPair(w.right.d(), Series(std::move(bent)));
    check(!witness_holds(broken), "a perturbed witness must fail");

    CommutatorWitness again = decompose_shift(g, n, 1);
    check(pairs_equal_through(again.right, w.right, window), "decomposition must be deterministic");

    if (n == 1) {
        CommutatorWitness diag = decompose_diag(g, 2);
        check(witness_holds(diag), "diagonal witness must re-verify");
        check(diag.right.entry(2, 1) == Rat(2) * g.h()[2],
              "entry (2,1) of the solved factor must be 2 g_2");
    }

    if (n <= 2) {
        RiordanPair p = sample_derived(n, window, seed * 7 + 2);
        CommutatorWitness full = decompose_riordan(p, n);
        check(witness_holds(full), "full-group witness must re-verify");
        check(full.verified_order >= window - q + 1, "full-group witness window is too short");
        check(is_member(full.left, SubgroupTag::derived_r(n - 1)).member,
              "left factor must sit one level down");
        check(is_member(full.right, SubgroupTag::derived_r(n - 1)).member,
              "right factor must sit one level down");
    }

    DerivedCertificate cert = certify_associated(g, n);
    check(cert.depth == n, "certificate depth must equal n");
    check(certificate_holds(cert), "certificate must re-verify");
    check(leaf_count(*cert.root) == (1 << n),
          "a depth-n certificate must have 2^n leaves");
}

void derived_closure_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)notes;
    int n = pick(seed, 1, 3);
    int window = std::max(trunc, 1 << n);

    RiordanPair a = sample_derived(n - 1, window, seed * 13 + 1);
    RiordanPair b = sample_derived(n - 1, window, seed * 13 + 2);
    check(is_member(commutator(a, b), SubgroupTag::derived_r(n)).member,
          "bracket of level n-1 members must land in level n");

    RiordanPair ga = (n == 1) ? sample_associated(window, seed * 13 + 3)
                              : sample_gk(1 << (n - 1), window, seed * 13 + 3);
    RiordanPair gb = (n == 1) ? sample_associated(window, seed * 13 + 4)
                              : sample_gk(1 << (n - 1), window, seed * 13 + 4);
    check(is_member(commutator(ga, gb), SubgroupTag::derived_a(n)).member,
          "bracket of associated-chain members must land in level n");

    int band_k = (1 << n) - n;
    RiordanPair b1 = sample_derived(n, window, seed * 13 + 5);
    RiordanPair b2 = sample_derived(n, window, seed * 13 + 6);
    FiniteRiordanMatrix m1 = project(b1, band_k);
    FiniteRiordanMatrix m2 = project(b2, band_k);
    check(matmul(m1, m2) == matmul(m2, m1),
          "level-n blocks of size 2^n - n must commute");

    int k = pick(seed >> 8, 0, 8);
    int depth = derived_length(k);
    int tower_window = std::max({trunc, k, 2});
    std::vector<RiordanPair> layer;
    layer.reserve(static_cast<std::size_t>(1) << depth);
    for (int i = 0; i < (1 << depth); ++i) {
        layer.push_back(
            sample_derived(0, tower_window, seed * 131 + static_cast<std::uint64_t>(i)));
    }
    while (layer.size() > 1) {
        std::vector<RiordanPair> next;
        next.reserve(layer.size() / 2);
        for (std::size_t i = 0; i + 1 < layer.size(); i += 2) {
            next.push_back(commutator(layer[i], layer[i + 1]));
        }
        layer = std::move(next);
    }
    check(project(layer.front(), k) == project(identity_pair(tower_window), k),
          "phi(k) rounds of brackets must project to the identity at size " + std::to_string(k));
}

void derived_length_case(std::uint64_t seed, int trunc, Notes& notes) {
    (void)seed;
    (void)trunc;
    static const int pinned[] = {1, 2, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5};
    DerivedLengthTable table = derived_table(12);
    check(table.values.size() == 13, "table through k = 12 must have 13 entries");
    for (int k = 0; k <= 12; ++k) {
        check(table.values[static_cast<std::size_t>(k)] == pinned[k],
              "phi(" + std::to_string(k) + ") is off");
    }

    DerivedLengthTable wide = derived_table(30);
    for (int k = 1; k <= 30; ++k) {
        int prev = wide.values[static_cast<std::size_t>(k) - 1];
        int cur = wide.values[static_cast<std::size_t>(k)];
        check(cur == prev || cur == prev + 1, "phi must grow by steps of at most one");
        check(cur != prev + 1 || (1LL << prev) - prev == k,
              "phi may jump only at k = 2^m - m");
    }

    for (int k = 0; k <= 12; ++k) {
        int found = -1;
        for (int n = 1; n <= 6 && found < 0; ++n) {
            int window = std::max(k, 1 << n);
            RiordanPair e = extremal_derived(n, window);
            FiniteRiordanMatrix block = project(e, k);
            check(finite_membership(block, n), "the extremal block must pass membership");
            if (block == project(identity_pair(window), k)) found = n;
        }
        check(found == derived_length(k),
              "search disagrees with the closed form at k = " + std::to_string(k));
    }

    std::ostringstream out;
    out << "phi(0..12) =";
    for (int v : table.values) out << ' ' << v;
    notes.push_back(out.str());
}

using CaseFn = void (*)(std::uint64_t, int, Notes&);

struct SuiteEntry {
    const char* name;
    CaseFn fn;
};

constexpr SuiteEntry suite_table[] = {
    {"group-axioms", group_axioms_case},
    {"a-sequence", a_sequence_case},
    {"gk-band", gk_band_case},
    {"h-homomorphism", h_homomorphism_case},
    {"partial-commute", partial_commute_case},
    {"schroeder", schroeder_case},
    {"decompose", decompose_case},
    {"derived-closure", derived_closure_case},
    {"derived-length", derived_length_case},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const SuiteEntry& entry : suite_table) names.emplace_back(entry.name);
    return names;
}

SuiteReport run_suite(const std::string& name, int seeds, int order) {
    const SuiteEntry* entry = nullptr;
    for (const SuiteEntry& candidate : suite_table) {
        if (name == candidate.name) entry = &candidate;
    }
    if (entry == nullptr) throw std::invalid_argument("unknown suite: " + name);
    if (seeds < 1) throw std::invalid_argument("seeds must be positive");
    if (order < 1) throw std::invalid_argument("order must be positive");

    auto start = std::chrono::steady_clock::now();
    std::vector<std::string> errors(static_cast<std::size_t>(seeds));
    std::vector<Notes> notes(static_cast<std::size_t>(seeds));

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < seeds; ++i) {
        std::size_t slot = static_cast<std::size_t>(i);
        try {
            entry->fn(static_cast<std::uint64_t>(i) + 1, order, notes[slot]);
        } catch (const std::exception& e) {
            errors[slot] = e.what();
            if (errors[slot].empty()) errors[slot] = "unknown failure";
        } catch (...) {
            errors[slot] = "unknown failure";
        }
    }

    SuiteReport report;
    report.suite = name;
    report.order = order;
    report.cases_run = seeds;
    for (int i = 0; i < seeds; ++i) {
        std::size_t slot = static_cast<std::size_t>(i);
        if (!errors[slot].empty()) {
            report.failures.push_back({static_cast<std::uint64_t>(i) + 1, errors[slot]});
        }
        for (std::string& note : notes[slot]) report.notes.push_back(std::move(note));
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace riordan
