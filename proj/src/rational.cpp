#include "drg/rational.hpp"

namespace drg {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (long long h = 0; h < k; ++h) {
        num *= n - h;
        den *= h + 1;
    }
    return num / den;  // exact: den always divides num here
}

}  // namespace drg
