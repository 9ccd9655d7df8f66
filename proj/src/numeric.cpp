#include "hookmonoid/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace hookmonoid {

long long isqrt_floor(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    if (n == 0) return 0;
    auto s = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigInt require_integral(const BigRat& value, const char* context) {
    if (boost::multiprecision::denominator(value) != 1)
        throw ConsistencyError(std::string(context) + ": expected an integer, got " +
                               value.str());
    return boost::multiprecision::numerator(value);
}

} // namespace hookmonoid
