#include "geodex/bigcount.hpp"

namespace geodex {

BigCount factorial(unsigned n) {
    BigCount result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

BigCount binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigCount result = 1;
    // Each prefix product is itself a binomial coefficient, so the division is exact.
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigCount power(const BigCount& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

}  // namespace geodex
