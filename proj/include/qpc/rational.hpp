#pragma once

// Exact rational scalars used for every coordinate and coefficient in this
// library. Period detection, disjointness and coverage are discrete yes/no
// questions, so nothing here is allowed to round: all arithmetic is
// arbitrary-precision and there is no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qpc {

// Expression templates are disabled: every arithmetic expression evaluates
// to a value on the spot. The lazy expression objects the default aliases
// produce hold references to their operands, which dangle as soon as an
// expression escapes the operands' scope (for example via a lambda with a
// deduced return type), so they are banned here wholesale.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return numerator(r); }

// Denominators are kept positive by the representation.
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

/// Largest integer <= r.
inline Int floor_rat(const Rat& r)
{
    Int q = rat_num(r) / rat_den(r);  // truncates toward zero
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r))
        --q;
    return q;
}

/// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline Int lcm_int(const Int& a, const Int& b)
{
    return boost::multiprecision::lcm(a, b);
}

inline Int gcd_int(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

/// Residue of k in 0..n-1 (true mathematical modulus, defined for k < 0).
inline std::int64_t mod_residue(std::int64_t k, std::int64_t n)
{
    std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

inline std::int64_t to_int64(const Int& v)
{
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

/// Parses "p" or "p/q" with decimal integers, optional leading '-' on the
/// numerator, q > 0. The result is stored in lowest terms. Throws
/// std::invalid_argument on anything else, including a zero denominator.
inline Rat parse_rational(const std::string& s)
{
    auto parse_int = [&s](const std::string& t) -> Int {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size())
            throw std::invalid_argument("malformed rational: '" + s + "'");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                throw std::invalid_argument("malformed rational: '" + s + "'");
        return Int(t);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(parse_int(s));
    const Int p = parse_int(s.substr(0, slash));
    const std::string qs = s.substr(slash + 1);
    if (!qs.empty() && qs[0] == '-')
        throw std::invalid_argument("denominator must be positive: '" + s + "'");
    const Int q = parse_int(qs);
    if (q == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    return Rat(p, q);  // normalizes to lowest terms
}

/// Canonical lowest-terms rendering: "p" when the denominator is 1, "p/q"
/// otherwise.
inline std::string rational_to_string(const Rat& r)
{
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1)
        s += "/" + rat_den(r).str();
    return s;
}

}  // namespace qpc
