#include "repdecomp/properties.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "repdecomp/enumerate.hpp"
#include "repdecomp/highest_weight.hpp"
#include "repdecomp/int_polynomial.hpp"
#include "repdecomp/partition_count.hpp"

namespace repdecomp {

namespace {

const std::vector<std::pair<char, int>> kSampleTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
    {'B', 4}, {'C', 3}, {'D', 4}, {'G', 2}};

Character sum_characters(const Character& a, const Character& b) {
    std::map<WeightVector, Int> acc = a.weights();
    for (const auto& [w, m] : b.weights()) {
        auto [it, inserted] = acc.emplace(w, m);
        if (!inserted) it->second += m;
    }
    return Character(a.ambient(), std::move(acc));
}

bool pointwise_equal(const Character& a, const Character& b) {
    return a.weights() == b.weights();
}

PropertyCheck freudenthal_vs_weyl(std::mt19937_64& rng) {
    PropertyCheck check{"freudenthal-total-equals-weyl-dimension", true, ""};
    std::uniform_int_distribution<std::size_t> pick_type(0, kSampleTypes.size() - 1);
    std::uniform_int_distribution<int> pick_coord(0, 4);
    int accepted = 0;
    while (accepted < 50) {
        auto [letter, rank] = kSampleTypes[pick_type(rng)];
        RootSystem rs = RootSystem::make(letter, rank);
        WeightVector lambda(static_cast<std::size_t>(rank));
        for (int& x : lambda) x = pick_coord(rng);
        Int dim = weyl_dimension(rs, lambda);
        if (dim < 2 || dim > 5000) continue;
        ++accepted;
        Character ch = irreducible_character(rs, lambda);
        if (ch.total_multiplicity() != dim || !ch.weyl_invariant()) {
            check.ok = false;
            std::ostringstream os;
            os << rs.name() << " weight #" << accepted << ": total "
               << ch.total_multiplicity().str() << " vs dimension " << dim.str();
            check.detail = os.str();
            return check;
        }
    }
    return check;
}

Character random_genuine_character(std::mt19937_64& rng) {
    // a nonnegative integer combination of irreducibles of one small system
    static const std::vector<std::pair<char, int>> small = {{'A', 1}, {'A', 2}, {'B', 2}};
    std::uniform_int_distribution<std::size_t> pick_type(0, small.size() - 1);
    auto [letter, rank] = small[pick_type(rng)];
    RootSystem rs = RootSystem::make(letter, rank);
    std::uniform_int_distribution<int> pick_coord(0, 3);
    std::uniform_int_distribution<int> pick_mult(1, 2);
    std::uniform_int_distribution<int> pick_count(1, 3);

    Ambient amb;
    amb.factors.push_back(rs);
    Character acc(amb);
    Int total = 0;
    const int pieces = pick_count(rng);
    for (int i = 0; i < pieces; ++i) {
        WeightVector lambda(static_cast<std::size_t>(rank));
        for (int& x : lambda) x = pick_coord(rng);
        Int dim = weyl_dimension(rs, lambda);
        int mult = pick_mult(rng);
        if (total + dim * mult > 30) continue;
        total += dim * mult;
        Character piece = irreducible_character(rs, lambda);
        for (int c = 0; c < mult; ++c) acc = sum_characters(acc, piece);
    }
    if (acc.support_size() == 0)
        return irreducible_character(rs, WeightVector(static_cast<std::size_t>(rank), 0));
    return acc;
}

PropertyCheck newton_cube_identity(std::mt19937_64& rng) {
    PropertyCheck check{"tensor-cube-equals-sym3-plus-ext3-plus-2-hook", true, ""};
    for (int i = 0; i < 20; ++i) {
        Character a = random_genuine_character(rng);
        if (!a.weyl_invariant()) {
            check.ok = false;
            check.detail = "random character is not Weyl-invariant";
            return check;
        }
        Character cube = tensor(tensor(a, a), a);
        Character hook = hook_component_3(a);
        Character rhs = sum_characters(sum_characters(sym_power(a, 3), ext_power(a, 3)),
                                       sum_characters(hook, hook));
        if (!pointwise_equal(cube, rhs)) {
            check.ok = false;
            check.detail = "mismatch on sample " + std::to_string(i);
            return check;
        }
        // degree-2 pair identities on the same sample
        Character square = tensor(a, a);
        Character pair_sum = sum_characters(sym_power(a, 2), ext_power(a, 2));
        if (!pointwise_equal(square, pair_sum)) {
            check.ok = false;
            check.detail = "sym2+ext2 != square on sample " + std::to_string(i);
            return check;
        }
    }
    return check;
}

PropertyCheck gaussian_identities() {
    PropertyCheck check{"gaussian-palindromic-and-counts-bounded-partitions", true, ""};
    for (int k = 0; k <= 12; ++k) {
        for (int j = 0; j <= 12; ++j) {
            IntPolynomial g = gaussian_polynomial(j + k, k);
            if (!g.palindromic()) {
                check.ok = false;
                check.detail = "not palindromic at k=" + std::to_string(k) +
                               " j=" + std::to_string(j);
                return check;
            }
            for (int n = 0; n <= j * k + 2; ++n) {
                if (count_bounded_partitions(k, j, n) != g.coeff(n)) {
                    check.ok = false;
                    check.detail = "coefficient mismatch at (" + std::to_string(k) + "," +
                                   std::to_string(j) + "," + std::to_string(n) + ")";
                    return check;
                }
            }
        }
    }
    return check;
}

PropertyCheck schur_orthogonality() {
    PropertyCheck check{"trivial-mult-of-a-tensor-dual-a-is-one", true, ""};
    for (int d = 2; d <= 30; ++d) {
        for (const auto& f : enumerate_simple_irreps_of_dim(d)) {
            Character a = irreducible_character(f.rs, f.highest);
            Int t = trivial_multiplicity(tensor(a, dual(a)));
            if (t != 1) {
                check.ok = false;
                check.detail = f.rs.name() + " irreducible of dim " + std::to_string(d) +
                               ": got " + t.str();
                return check;
            }
        }
    }
    return check;
}

}  // namespace

bool PropertyReport::all_ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.ok; });
}

PropertyReport run_property_suite(std::uint64_t seed) {
    PropertyReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    report.checks.push_back(freudenthal_vs_weyl(rng));
    report.checks.push_back(newton_cube_identity(rng));
    report.checks.push_back(gaussian_identities());
    report.checks.push_back(schur_orthogonality());
    return report;
}

}  // namespace repdecomp
