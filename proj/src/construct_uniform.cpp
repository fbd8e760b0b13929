#include "construct_util.hpp"
#include "seatmatch/constructors.hpp"

namespace seatmatch {

Matching construct_uniform(int n, int x) {
    if (n < 1 || x < 1 || x > n) throw InvalidArgument("uniform list needs 1 <= x <= n");
    const int d = static_cast<int>(gcd(x, 2 * n));
    if (n % d != 0) {
        throw Infeasible("divisor", "gcd(" + std::to_string(x) + ", " + std::to_string(2 * n) + ") = " +
                                        std::to_string(d) + " does not divide " + std::to_string(n));
    }
    // pairs 2ix+j with (2i+1)x+j; the d cosets of <x> are each walked in
    // steps of 2x
    detail::EdgeBuilder b(2 * n);
    for (int j = 0; j < d; ++j) {
        for (long long i = 0; i < n / d; ++i) b.add(2 * i * x + j, (2 * i + 1) * x + j);
    }
    return detail::checked(b, LengthList::from_counts({{x, n}}), "uniform");
}

}  // namespace seatmatch
