#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace motivecalc {

// Exact rational arithmetic. All weight-space computations run on mpq so
// genericity is decided by exact sign, never by tolerance.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p/q" or "p" (q > 0 after canonicalisation).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() < 0) throw std::invalid_argument("negative denominator: " + s);
    return q;
}

// Lowest terms, denominator positive, "p/q" with "/1" omitted.
inline std::string format_rational(const Rational& q) {
    return q.get_str();
}

inline std::vector<Rational> parse_rational_list(const std::string& csv) {
    std::vector<Rational> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            out.push_back(parse_rational(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

inline BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace motivecalc
