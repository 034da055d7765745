#include "riordan/subgroups.hpp"

#include <limits>
#include <stdexcept>

#include "riordan/errors.hpp"

namespace riordan {

namespace {

// 2^n clamped so comparisons against a truncation order stay safe
long long pow2_window(int n) {
    if (n >= 62) return std::numeric_limits<long long>::max();
    return 1LL << n;
}

void require_window(long long needed, int available, const std::string& what) {
    if (needed > available)
        throw TruncationTooShort(what + " needs window " + std::to_string(needed) +
                                 " but the pair is truncated at " + std::to_string(available));
}

int parse_param(const std::string& text, std::size_t colon, const char* what, int min_value) {
    if (colon == std::string::npos || colon + 1 >= text.size())
        throw std::invalid_argument(std::string(what) + " tag needs a parameter, e.g. \"" +
                                    what + ":2\"");
    const std::string num = text.substr(colon + 1);
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(num, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad parameter in subgroup tag \"" + text + "\"");
    }
    if (used != num.size())
        throw std::invalid_argument("bad parameter in subgroup tag \"" + text + "\"");
    if (value < min_value)
        throw std::invalid_argument(std::string(what) + " parameter must be >= " +
                                    std::to_string(min_value));
    return value;
}

struct WindowCheck {
    MembershipReport report;

    explicit WindowCheck(int checked_through) : report{true, checked_through, std::nullopt} {}

    void expect(char component, const Series& s, int index, const Rat& expected) {
        if (!report.member) return;
        if (s[index] != expected) {
            report.member = false;
            report.violation = CoefficientViolation{component, index, s[index], expected};
        }
    }

    void expect_range_zero(char component, const Series& s, int from, int to) {
        for (int i = from; i <= to && report.member; ++i) expect(component, s, i, 0);
    }
};

MembershipReport check_toeplitz(const RiordanPair& p) {
    WindowCheck c(p.trunc_order());
    c.expect('h', p.h(), 1, 1);
    c.expect_range_zero('h', p.h(), 2, p.trunc_order());
    return c.report;
}

MembershipReport check_associated(const RiordanPair& p) {
    WindowCheck c(p.trunc_order());
    c.expect('d', p.d(), 0, 1);
    c.expect_range_zero('d', p.d(), 1, p.trunc_order());
    return c.report;
}

MembershipReport check_gk(const RiordanPair& p, int k) {
    require_window(k, p.trunc_order(), "G_" + std::to_string(k) + " membership");
    WindowCheck c(p.trunc_order());
    c.expect('d', p.d(), 0, 1);
    c.expect_range_zero('d', p.d(), 1, p.trunc_order());
    c.expect('h', p.h(), 1, 1);
    c.expect_range_zero('h', p.h(), 2, k - 1);
    return c.report;
}

MembershipReport check_derived_r(const RiordanPair& p, int n) {
    if (n == 0) return MembershipReport{true, p.trunc_order(), std::nullopt};
    const long long w = pow2_window(n);
    require_window(w, p.trunc_order(), "derived window at level " + std::to_string(n));
    WindowCheck c(p.trunc_order());
    c.expect('d', p.d(), 0, 1);
    c.expect_range_zero('d', p.d(), 1, static_cast<int>(w) - n - 1);
    c.expect('h', p.h(), 1, 1);
    c.expect_range_zero('h', p.h(), 2, static_cast<int>(w) - 1);
    return c.report;
}

MembershipReport check_derived_a(const RiordanPair& p, int n) {
    if (n == 0) return check_associated(p);
    const long long w = pow2_window(n);
    require_window(w, p.trunc_order(), "derived window at level " + std::to_string(n));
    return check_gk(p, static_cast<int>(w));
}

}  // namespace

SubgroupTag SubgroupTag::gk(int k) {
    if (k < 2) throw std::invalid_argument("gk tag needs k >= 2");
    return {SubgroupKind::Gk, k};
}

SubgroupTag SubgroupTag::derived_r(int n) {
    if (n < 0) throw std::invalid_argument("derivedR tag needs n >= 0");
    return {SubgroupKind::DerivedR, n};
}

SubgroupTag SubgroupTag::derived_a(int n) {
    if (n < 0) throw std::invalid_argument("derivedA tag needs n >= 0");
    return {SubgroupKind::DerivedA, n};
}

SubgroupTag SubgroupTag::parse(const std::string& text) {
    if (text == "toeplitz") return toeplitz();
    if (text == "associated") return associated();
    const std::size_t colon = text.find(':');
    const std::string head = text.substr(0, colon);
    if (head == "gk") return gk(parse_param(text, colon, "gk", 2));
    if (head == "derivedR") return derived_r(parse_param(text, colon, "derivedR", 0));
    if (head == "derivedA") return derived_a(parse_param(text, colon, "derivedA", 0));
    throw std::invalid_argument("unknown subgroup tag \"" + text + "\"");
}

std::string SubgroupTag::str() const {
    switch (kind) {
        case SubgroupKind::Toeplitz: return "toeplitz";
        case SubgroupKind::Associated: return "associated";
        case SubgroupKind::Gk: return "gk:" + std::to_string(param);
        case SubgroupKind::DerivedR: return "derivedR:" + std::to_string(param);
        case SubgroupKind::DerivedA: return "derivedA:" + std::to_string(param);
    }
    throw std::logic_error("unreachable subgroup kind");
}

MembershipReport is_member(const RiordanPair& p, const SubgroupTag& tag) {
    switch (tag.kind) {
        case SubgroupKind::Toeplitz: return check_toeplitz(p);
        case SubgroupKind::Associated: return check_associated(p);
        case SubgroupKind::Gk: return check_gk(p, tag.param);
        case SubgroupKind::DerivedR: return check_derived_r(p, tag.param);
        case SubgroupKind::DerivedA: return check_derived_a(p, tag.param);
    }
    throw std::logic_error("unreachable subgroup kind");
}

BandCheckReport gk_band_check(const RiordanPair& p, int k) {
    if (k < 2) throw std::invalid_argument("band check needs k >= 2");
    const int n = p.trunc_order();
    require_window(2 * k - 2, n, "band check for k = " + std::to_string(k));
    RiordanPair h_only(Series::one(n), p.h());
    if (MembershipReport m = is_member(h_only, SubgroupTag::gk(k)); !m.member)
        throw NotInGk("substitution part fails the G_" + std::to_string(k) + " window");

    BandCheckReport report{k, n, {}, true};
    for (int m = 0; m <= 2 * k - 2; ++m) {
        DiagonalReport diag{m, {}, {}, std::nullopt};
        for (int j = 0; j + m <= n; ++j) {
            Rat direct = p.entry(j + m, j);
            Rat closed;
            if (m == 0) {
                closed = p.d()[0];
            } else if (m <= k - 2) {
                closed = p.d()[m];
            } else {
                closed = p.d()[m];
                if (j > 0) closed += Rat(j) * p.h()[m + 1];
            }
            if (direct != closed && !diag.first_divergent_column) diag.first_divergent_column = j;
            diag.direct.push_back(std::move(direct));
            diag.closed_form.push_back(std::move(closed));
        }
        if (m <= 2 * k - 3 && !diag.matches()) report.asserted_ok = false;
        report.diagonals.push_back(std::move(diag));
    }
    return report;
}

Rat h_map(const RiordanPair& p, int i) {
    return p.h().coefficient(i);
}

CommutationReport partial_commutation_check(const RiordanPair& v_pair,
                                            const RiordanPair& w_pair, int k) {
    if (k < 2) throw std::invalid_argument("commutation check needs k >= 2");
    const int size = 2 * k - 1;
    const int n = std::min(v_pair.trunc_order(), w_pair.trunc_order());
    require_window(size, n, "commutation check for k = " + std::to_string(k));
    if (!is_member(v_pair, SubgroupTag::gk(k)).member)
        throw NotInGk("first pair fails the G_" + std::to_string(k) + " window");
    if (!is_member(w_pair, SubgroupTag::gk(k)).member)
        throw NotInGk("second pair fails the G_" + std::to_string(k) + " window");

    RiordanPair vw = multiply(v_pair, w_pair);
    RiordanPair wv = multiply(w_pair, v_pair);
    CommutationReport report;
    report.k = k;
    report.projection_size = size;
    report.projections_commute = project(vw, size) == project(wv, size);
    report.product_entry = vw.entry(size, 1);
    report.closed_form =
        v_pair.h()[size] + w_pair.h()[size] + Rat(k) * v_pair.h()[k] * w_pair.h()[k];
    report.entry_matches = report.product_entry == report.closed_form;
    return report;
}

}  // namespace riordan
