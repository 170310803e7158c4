#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "repdecomp/int_polynomial.hpp"
#include "repdecomp/partition.hpp"
#include "repdecomp/partition_count.hpp"

using namespace repdecomp;

TEST_CASE("partition normalization and equality") {
    CHECK(Partition{3, 1, 0, 0} == Partition{3, 1});
    CHECK(Partition{} == Partition{0, 0});
    CHECK(Partition{2, 2}.length() == 2);
    CHECK(Partition{3, 1, 0}.sum() == 4);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate matches the bitmap transpose") {
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{3, 1}) == oracle::conjugate_by_bitmap(Partition{3, 1}));
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});  // self-conjugate

    // involution for every partition of size <= 20
    for (int n = 0; n <= 20; ++n) {
        std::vector<std::vector<int>> all;
        std::vector<int> stack;
        oracle::enumerate_partitions(n, n, n, stack, all);
        if (n == 0) all.push_back({});
        for (const auto& parts : all) {
            Partition p(parts);
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p) == oracle::conjugate_by_bitmap(p));
        }
    }
}

TEST_CASE("sl_dual examples and the reversed-complement oracle") {
    CHECK(sl_dual(Partition{4, 0, 0}, 3) == Partition{4, 4});   // Sym^k dual, k=4
    CHECK(sl_dual(Partition{3, 1, 0, 0}, 4) == Partition{3, 3, 2});
    CHECK(sl_dual(Partition{}, 5) == Partition{});
    CHECK_THROWS_AS(sl_dual(Partition{1, 1, 1}, 2), std::invalid_argument);

    for (int n = 0; n <= 8; ++n) {
        std::vector<std::vector<int>> all;
        std::vector<int> stack;
        oracle::enumerate_partitions(n, n, n, stack, all);
        if (n == 0) all.push_back({});
        for (const auto& parts : all) {
            Partition p(parts);
            for (int m = std::max(1, p.length()); m <= 8; ++m) {
                Partition d = sl_dual(p, m);
                CHECK(d == oracle::sl_dual_by_complement(p, m));
                // at least m - length nonzero parts (vacuous for the zero partition)
                if (!p.empty()) CHECK(d.length() >= m - p.length());
                // double dual equals the normalized original
                Partition dd = sl_dual(d, m);
                int shift = dd.part(0) - p.part(0);
                std::vector<int> shifted;
                for (int i = 0; i < m; ++i)
                    shifted.push_back(p.part(static_cast<std::size_t>(i)) + shift);
                CHECK(dd.padded(m) == Partition(shifted));
            }
        }
    }
}

TEST_CASE("gaussian polynomial basics") {
    CHECK(gaussian_polynomial(2, 1) == IntPolynomial({1, 1}));
    CHECK(gaussian_polynomial(4, 2) == IntPolynomial({1, 1, 2, 1, 1}));
    CHECK(gaussian_polynomial(7, 3) ==
          IntPolynomial({1, 1, 2, 3, 4, 4, 5, 4, 4, 3, 2, 1, 1}));
    CHECK(gaussian_polynomial(7, 3).evaluate_at_one() == 35);
    CHECK(gaussian_polynomial(5, 0) == IntPolynomial::one());
    CHECK_THROWS_AS(gaussian_polynomial(3, 4), std::invalid_argument);
}

TEST_CASE("gaussian coefficients count partitions in a box") {
    for (int a = 0; a <= 9; ++a) {
        for (int b = 0; b <= a; ++b) {
            IntPolynomial g = gaussian_polynomial(a, b);
            CHECK(g == gaussian_polynomial(a, a - b));
            CHECK(g.palindromic());
            // coefficient of q^n counts partitions in a b x (a-b) box
            for (long n = 0; n <= g.degree(); ++n)
                CHECK(g.coeff(n) == oracle::count_in_box(a - b, b, static_cast<int>(n)));
        }
    }
}

TEST_CASE("count_bounded_partitions examples") {
    CHECK(count_bounded_partitions(4, 3, 0) == 1);
    CHECK(count_bounded_partitions(0, 0, 0) == 1);
    CHECK(count_bounded_partitions(4, 3, 6) == 5);
    CHECK(count_bounded_partitions(4, 3, 5) == 4);
    CHECK(count_bounded_partitions(4, 3, 13) == 0);  // n > jk
    CHECK(count_bounded_partitions(2, 3, 3) == 2);   // (2,1), (1,1,1)
    CHECK(count_bounded_partitions(2, 3, 2) == 2);   // (2), (1,1)
    CHECK(count_bounded_partitions(4, 3, 6) - count_bounded_partitions(4, 3, 5) == 1);
    CHECK_THROWS_AS(count_bounded_partitions(-1, 3, 2), std::invalid_argument);
}

TEST_CASE("count_bounded_partitions equals the generating function coefficients") {
    for (int k = 0; k <= 12; ++k)
        for (int j = 0; j <= 12; ++j) {
            IntPolynomial g = gaussian_polynomial(j + k, k);
            for (int n = 0; n <= j * k + 2; ++n)
                CHECK(count_bounded_partitions(k, j, n) == g.coeff(n));
        }
}

TEST_CASE("palindromic box counts: p(k,j,n) = p(k,j,kj-n)") {
    for (int k = 1; k <= 8; ++k)
        for (int j = 1; j <= 6; ++j)
            for (int n = 0; n <= k * j; ++n)
                CHECK(count_bounded_partitions(k, j, n) ==
                      count_bounded_partitions(k, j, k * j - n));
}

TEST_CASE("bounded-partition identities hold for ell up to 300") {
    auto report = verify_partition_identities(300);
    CHECK(report.all_hold());
    CHECK(report.checks.size() == 300);
    // spot check ell = 1 against direct counts
    const auto& first = report.checks.front();
    CHECK(first.p_4l_6l == 5);
    CHECK(first.p_4l_6lm1 == 4);
    CHECK(first.p_4lm2_6lm3 == 2);
    CHECK(first.p_4lm2_6lm4 == 2);
    // and the sweep agrees with the standalone dynamic program at ell = 300
    CHECK(report.checks.back().p_4l_6l == count_bounded_partitions(1200, 3, 1800));
    CHECK_THROWS_AS(verify_partition_identities(0), std::invalid_argument);
}
