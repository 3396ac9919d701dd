#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace copex {

using Rat = mpq_class;

// mpq_class does not reduce two-argument constructions; use this whenever
// numerator/denominator come from runtime counts.
inline Rat frac(const mpz_class& num, const mpz_class& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Renders a rational as "p/q" in lowest terms, or "p" when q == 1.
inline std::string rat_str(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    v.canonicalize();
    return v;
}

}  // namespace copex
