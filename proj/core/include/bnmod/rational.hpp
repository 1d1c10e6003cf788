#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace bnmod {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer; Rational is kept in lowest terms with positive denominator by
// the underlying representation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_as_int(const Rational& q) {
    if (denominator(q) != 1)
        throw std::logic_error("expected an integral rational, got " +
                               q.str());
    return numerator(q);
}

inline long int_as_long(const Int& n) {
    if (n > std::numeric_limits<long>::max() ||
        n < std::numeric_limits<long>::min())
        throw std::overflow_error("integer too large for machine word: " +
                                  n.str());
    return static_cast<long>(n);
}

// Raised when two independent computational routes for the same quantity
// disagree. This always indicates an implementation bug, never bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what)
        : std::logic_error(what) {}
};

}  // namespace bnmod
