#include "riordan/rational.hpp"

#include <cctype>

namespace riordan {

namespace {

bool looks_like_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    if (s[i] == '-' || s[i] == '+') ++i;
    auto slash = s.find('/', i);
    if (slash == std::string::npos) return digits(i, s.size());
    return digits(i, slash) && digits(slash + 1, s.size());
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    if (!looks_like_rational(text))
        throw InvalidDocument("not a rational literal: \"" + text + "\"");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw InvalidDocument("not a rational literal: \"" + text + "\"");
    if (q.get_den() == 0)
        throw InvalidDocument("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

bool is_root_of_unity(const Rat& q) { return q == 1 || q == -1; }

Rat rat_pow(const Rat& base, unsigned long exp) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    // base was canonical, so num^e / den^e already is
    return r;
}

}  // namespace riordan
