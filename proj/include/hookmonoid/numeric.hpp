#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hookmonoid {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when two algebraically equivalent routes disagree, or when an exact
// rational value that must be an integer is not. Always a bug, never bad input.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

long long isqrt_floor(long long n);

BigInt binomial(long long n, long long k);

// Exact rational -> integer; throws ConsistencyError naming `context` otherwise.
BigInt require_integral(const BigRat& value, const char* context);

} // namespace hookmonoid
