#include "repdecomp/enumerate.hpp"

#include <functional>
#include <stdexcept>

namespace repdecomp {

namespace {

const std::vector<std::pair<char, int>>& supported_types() {
    static const std::vector<std::pair<char, int>> types = [] {
        std::vector<std::pair<char, int>> t;
        for (int r = 1; r <= 8; ++r) t.emplace_back('A', r);
        for (int r = 2; r <= 4; ++r) t.emplace_back('B', r);
        for (int r = 2; r <= 4; ++r) t.emplace_back('C', r);
        t.emplace_back('D', 4);
        t.emplace_back('G', 2);
        return t;
    }();
    return types;
}

void scan_weights(const RootSystem& rs, const Int& target, WeightVector& coords, int i,
                  std::vector<GroupFactor>& out) {
    if (i == rs.rank()) {
        if (weyl_dimension(rs, coords) == target) out.push_back({rs, coords});
        return;
    }
    for (int v = 0;; ++v) {
        coords[static_cast<std::size_t>(i)] = v;
        // dimension grows strictly in every coordinate, so once the minimal
        // completion (zeros ahead) overshoots we can stop
        WeightVector probe = coords;
        for (int j = i + 1; j < rs.rank(); ++j) probe[static_cast<std::size_t>(j)] = 0;
        if (weyl_dimension(rs, probe) > target) break;
        scan_weights(rs, target, coords, i + 1, out);
    }
    coords[static_cast<std::size_t>(i)] = 0;
}

}  // namespace

std::vector<GroupFactor> enumerate_simple_irreps_of_dim(int d) {
    if (d < 1 || d > 1000)
        throw std::invalid_argument("enumerate_simple_irreps_of_dim: d must be in 1..1000");
    std::vector<GroupFactor> out;
    if (d == 1) return out;  // the trivial weight is excluded here
    for (const auto& [letter, rank] : supported_types()) {
        RootSystem rs = RootSystem::make(letter, rank);
        WeightVector coords(static_cast<std::size_t>(rank), 0);
        std::vector<GroupFactor> found;
        scan_weights(rs, Int(d), coords, 0, found);
        for (auto& f : found) out.push_back(std::move(f));
    }
    return out;
}

std::vector<GroupSpec> enumerate_irreps_of_dim(int d) {
    if (d < 1 || d > 1000)
        throw std::invalid_argument("enumerate_irreps_of_dim: d must be in 1..1000");
    std::vector<GroupSpec> out;
    if (d == 1) {
        out.push_back(GroupSpec{});  // trivial representation of the trivial group
        return out;
    }
    for (auto& f : enumerate_simple_irreps_of_dim(d))
        out.push_back(GroupSpec{{std::move(f)}});

    // unordered two-factor products with both factors nontrivial
    for (int d1 = 2; d1 * d1 <= d; ++d1) {
        if (d % d1 != 0) continue;
        const int d2 = d / d1;
        auto left = enumerate_simple_irreps_of_dim(d1);
        auto right = (d1 == d2) ? left : enumerate_simple_irreps_of_dim(d2);
        for (std::size_t i = 0; i < left.size(); ++i) {
            const std::size_t j0 = (d1 == d2) ? i : 0;
            for (std::size_t j = j0; j < right.size(); ++j)
                out.push_back(GroupSpec{{left[i], right[j]}});
        }
    }
    return out;
}

}  // namespace repdecomp
