#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

// Under C++20 rewritten-candidate lookup, boost::rational's heterogeneous
// comparison templates call each other in an unbounded loop. These overloads
// are more specialized than boost's (Arg, rational) templates, so they win
// partial ordering and break the cycle, while their rational<IntType>
// parameter keeps them out of overload sets for unrelated types.
namespace boost {

template <class I>
inline bool rational_int_eq(const rational<I>& a, const I& b) {
    return a.denominator() == 1 && a.numerator() == b;
}
template <class I>
inline bool rational_int_lt(const rational<I>& a, const I& b) {
    return a.numerator() < b * a.denominator();
}
template <class I>
inline bool int_rational_lt(const I& b, const rational<I>& a) {
    return b * a.denominator() < a.numerator();
}

template <class I> inline bool operator==(const rational<I>& a, const I& b) { return rational_int_eq(a, b); }
template <class I> inline bool operator==(const I& b, const rational<I>& a) { return rational_int_eq(a, b); }
template <class I> inline bool operator==(const rational<I>& a, int b) { return rational_int_eq(a, I(b)); }
template <class I> inline bool operator==(int b, const rational<I>& a) { return rational_int_eq(a, I(b)); }

template <class I> inline bool operator!=(const rational<I>& a, const I& b) { return !rational_int_eq(a, b); }
template <class I> inline bool operator!=(const I& b, const rational<I>& a) { return !rational_int_eq(a, b); }
template <class I> inline bool operator!=(const rational<I>& a, int b) { return !rational_int_eq(a, I(b)); }
template <class I> inline bool operator!=(int b, const rational<I>& a) { return !rational_int_eq(a, I(b)); }

template <class I> inline bool operator<(const rational<I>& a, const I& b) { return rational_int_lt(a, b); }
template <class I> inline bool operator<(const I& b, const rational<I>& a) { return int_rational_lt(b, a); }
template <class I> inline bool operator<(const rational<I>& a, int b) { return rational_int_lt(a, I(b)); }
template <class I> inline bool operator<(int b, const rational<I>& a) { return int_rational_lt(I(b), a); }

template <class I> inline bool operator>(const rational<I>& a, const I& b) { return int_rational_lt(b, a); }
template <class I> inline bool operator>(const I& b, const rational<I>& a) { return rational_int_lt(a, b); }
template <class I> inline bool operator>(const rational<I>& a, int b) { return int_rational_lt(I(b), a); }
template <class I> inline bool operator>(int b, const rational<I>& a) { return rational_int_lt(a, I(b)); }

template <class I> inline bool operator<=(const rational<I>& a, const I& b) { return !int_rational_lt(b, a); }
template <class I> inline bool operator<=(const I& b, const rational<I>& a) { return !rational_int_lt(a, b); }
template <class I> inline bool operator<=(const rational<I>& a, int b) { return !int_rational_lt(I(b), a); }
template <class I> inline bool operator<=(int b, const rational<I>& a) { return !rational_int_lt(a, I(b)); }

template <class I> inline bool operator>=(const rational<I>& a, const I& b) { return !rational_int_lt(a, b); }
template <class I> inline bool operator>=(const I& b, const rational<I>& a) { return !int_rational_lt(b, a); }
template <class I> inline bool operator>=(const rational<I>& a, int b) { return !rational_int_lt(a, I(b)); }
template <class I> inline bool operator>=(int b, const rational<I>& a) { return !int_rational_lt(I(b), a); }

}  // namespace boost

namespace radii {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline std::string to_string(const Int& n) { return n.str(); }

/// "a/b" when the denominator is not 1, plain "a" otherwise.
inline std::string to_string(const Rat& q) {
    if (q.denominator() == 1) return q.numerator().str();
    return q.numerator().str() + "/" + q.denominator().str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

/// p-adic valuation of a nonzero rational.
inline Int valuation(Rat q, const Int& p) {
    if (q == 0) throw std::invalid_argument("valuation of zero");
    Int v = 0;
    Int n = q.numerator() < 0 ? Int(-q.numerator()) : q.numerator();
    while (n % p == 0) { n /= p; ++v; }
    Int d = q.denominator();
    while (d % p == 0) { d /= p; --v; }
    return v;
}

}  // namespace radii

