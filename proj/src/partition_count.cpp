#include "repdecomp/partition_count.hpp"

#include <stdexcept>

namespace repdecomp {

Int count_bounded_partitions(int k, int j, int n) {
    if (k < 0 || j < 0 || n < 0)
        throw std::invalid_argument("count_bounded_partitions: arguments must be nonnegative");
    if (n == 0) return 1;
    if (static_cast<long long>(j) * k < n) return 0;
    // f[r][m] = p(s, r, m) as the largest allowed part s sweeps 1..k,
    // via p(s,r,m) = p(s-1,r,m) + p(s,r-1,m-s) (split on largest part = s).
    std::vector<std::vector<Int>> f(static_cast<std::size_t>(j) + 1,
                                    std::vector<Int>(static_cast<std::size_t>(n) + 1));
    for (int r = 0; r <= j; ++r) f[static_cast<std::size_t>(r)][0] = 1;
    for (int s = 1; s <= k; ++s)
        for (int r = 1; r <= j; ++r)
            for (int m = s; m <= n; ++m)
                f[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] +=
                    f[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(m - s)];
    return f[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
}

IdentityReport verify_partition_identities(int ell_max) {
    if (ell_max < 1)
        throw std::invalid_argument("verify_partition_identities: ell_max must be >= 1");
    IdentityReport report;
    report.ell_max = ell_max;
    report.checks.resize(static_cast<std::size_t>(ell_max));

    // Coefficient vectors of the generating functions for partitions into
    // at most 1, 2, 3 parts with largest part <= s, grown incrementally:
    //   one_k   += q^s
    //   two_k   += q^s * one_k
    //   three_k += q^s * two_k
    // Only exponents up to 6*ell_max are ever queried.
    const std::size_t len = static_cast<std::size_t>(6 * ell_max) + 1;
    std::vector<Int> one(len), two(len), three(len);
    one[0] = two[0] = three[0] = 1;

    for (int s = 1; s <= 4 * ell_max; ++s) {
        const std::size_t us = static_cast<std::size_t>(s);
        if (us < len) one[us] += 1;
        for (std::size_t m = len; m-- > us;) two[m] += one[m - us];
        for (std::size_t m = len; m-- > us;) three[m] += two[m - us];

        if (s % 4 == 2) {
            int ell = (s + 2) / 4;
            if (ell <= ell_max) {
                auto& chk = report.checks[static_cast<std::size_t>(ell - 1)];
                chk.ell = ell;
                chk.p_4lm2_6lm3 = three[static_cast<std::size_t>(6 * ell - 3)];
                chk.p_4lm2_6lm4 = three[static_cast<std::size_t>(6 * ell - 4)];
                chk.equality_identity_holds = (chk.p_4lm2_6lm3 == chk.p_4lm2_6lm4);
            }
        } else if (s % 4 == 0) {
            int ell = s / 4;
            auto& chk = report.checks[static_cast<std::size_t>(ell - 1)];
            chk.ell = ell;
            chk.p_4l_6l = three[static_cast<std::size_t>(6 * ell)];
            chk.p_4l_6lm1 = three[static_cast<std::size_t>(6 * ell - 1)];
            chk.difference_identity_holds = (chk.p_4l_6l - chk.p_4l_6lm1 == 1);
        }
    }

    for (const auto& chk : report.checks)
        if (!chk.difference_identity_holds || !chk.equality_identity_holds)
            report.failing_ells.push_back(chk.ell);
    return report;
}

}  // namespace repdecomp
