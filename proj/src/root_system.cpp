#include "repdecomp/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace repdecomp {

namespace {

// Fraction-free Gaussian elimination (Bareiss).
Int determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Int>> to_big(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<Int>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

// Solve M x = rhs by Cramer's rule; returns numerators, det as out-param.
std::vector<Int> cramer(const std::vector<std::vector<int>>& m,
                        const std::vector<Int>& rhs, Int& det_out) {
    const std::size_t n = m.size();
    auto big = to_big(m);
    det_out = determinant(big);
    std::vector<Int> out(n);
    for (std::size_t col = 0; col < n; ++col) {
        auto mod = big;
        for (std::size_t i = 0; i < n; ++i) mod[i][col] = rhs[i];
        out[col] = determinant(std::move(mod));
    }
    return out;
}

}  // namespace

RootSystem RootSystem::make(char type_letter, int rank) {
    const bool supported =
        (type_letter == 'A' && rank >= 0 && rank <= 8) ||
        (type_letter == 'B' && rank >= 2 && rank <= 4) ||
        (type_letter == 'C' && rank >= 2 && rank <= 4) ||
        (type_letter == 'D' && rank == 4) ||
        (type_letter == 'G' && rank == 2);
    if (!supported)
        throw std::invalid_argument(
            std::string("unsupported root system ") + type_letter + std::to_string(rank) +
            "; supported: A1..A8, B2..B4, C2..C4, D4, G2 (all simple algebras with an"
            " irreducible of dimension <= 9)");

    RootSystem rs;
    rs.type_ = type_letter;
    rs.rank_ = rank;
    const std::size_t r = static_cast<std::size_t>(rank);
    rs.cartan_.assign(r, std::vector<int>(r, 0));
    rs.symmetrizer_.assign(r, 1);
    for (std::size_t i = 0; i < r; ++i) rs.cartan_[i][i] = 2;
    auto bond = [&](std::size_t i, std::size_t j) {
        rs.cartan_[i][j] = -1;
        rs.cartan_[j][i] = -1;
    };
    switch (type_letter) {
        case 'A':
            for (std::size_t i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case 'B':
            // alpha_1..alpha_{r-1} long (d=2), alpha_r short (d=1)
            for (std::size_t i = 0; i + 2 < r; ++i) bond(i, i + 1);
            rs.cartan_[r - 2][r - 1] = -1;
            rs.cartan_[r - 1][r - 2] = -2;
            for (std::size_t i = 0; i + 1 < r; ++i) rs.symmetrizer_[i] = 2;
            break;
        case 'C':
            // alpha_1..alpha_{r-1} short (d=1), alpha_r long (d=2)
            for (std::size_t i = 0; i + 2 < r; ++i) bond(i, i + 1);
            rs.cartan_[r - 2][r - 1] = -2;
            rs.cartan_[r - 1][r - 2] = -1;
            rs.symmetrizer_[r - 1] = 2;
            break;
        case 'D':
            bond(0, 1);
            bond(1, 2);
            bond(1, 3);
            break;
        case 'G':
            // alpha_1 short (d=1), alpha_2 long (d=3)
            rs.cartan_[0][1] = -3;
            rs.cartan_[1][0] = -1;
            rs.symmetrizer_[1] = 3;
            break;
    }

    // Positive roots: closure of the simple roots under simple reflections,
    // keeping vectors with nonnegative simple-root coordinates.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<int> e(r, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto c = queue.back();
        queue.pop_back();
        for (std::size_t i = 0; i < r; ++i) {
            long long k = 0;
            for (std::size_t j = 0; j < r; ++j) k += static_cast<long long>(rs.cartan_[i][j]) * c[j];
            auto c2 = c;
            c2[i] -= static_cast<int>(k);
            if (std::all_of(c2.begin(), c2.end(), [](int x) { return x >= 0; }) &&
                seen.insert(c2).second)
                queue.push_back(c2);
        }
    }
    for (const auto& c : seen) {
        PositiveRoot root;
        root.simple_coords = c;
        root.dynkin_coords.assign(r, 0);
        root.pairing.assign(r, 0);
        for (std::size_t i = 0; i < r; ++i) {
            long long d = 0;
            for (std::size_t j = 0; j < r; ++j) d += static_cast<long long>(rs.cartan_[i][j]) * c[j];
            root.dynkin_coords[i] = static_cast<int>(d);
            root.pairing[i] = static_cast<long long>(rs.symmetrizer_[i]) * c[i];
            root.rho_pairing += root.pairing[i];
        }
        rs.positive_roots_.push_back(std::move(root));
    }

    rs.rho_.assign(r, 1);

    // height_row = adj(cartan)^T * ones: height_key(w) = det * sum of
    // simple-root coordinates of w.
    std::vector<Int> ones(r, 1);
    if (rank > 0) {
        // Solve cartan^T x = ones, scaled by det.
        std::vector<std::vector<int>> ct(r, std::vector<int>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) ct[i][j] = rs.cartan_[j][i];
        rs.height_row_ = cramer(ct, ones, rs.cartan_det_);
        if (rs.cartan_det_ < 0) {
            rs.cartan_det_ = -rs.cartan_det_;
            for (auto& h : rs.height_row_) h = -h;
        }
    }
    return rs;
}

std::string RootSystem::name() const {
    return std::string(1, type_) + std::to_string(rank_);
}

bool RootSystem::dominant(const WeightVector& w) const {
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

WeightVector RootSystem::reflect(const WeightVector& w, int i) const {
    WeightVector out = w;
    const int wi = w[static_cast<std::size_t>(i)];
    for (int j = 0; j < rank_; ++j)
        out[static_cast<std::size_t>(j)] -=
            wi * cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return out;
}

WeightVector RootSystem::make_dominant(WeightVector w) const {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank_; ++i) {
            if (w[static_cast<std::size_t>(i)] < 0) {
                w = reflect(w, i);
                changed = true;
            }
        }
    }
    return w;
}

std::vector<WeightVector> RootSystem::weyl_orbit(const WeightVector& w) const {
    std::set<WeightVector> seen{w};
    std::vector<WeightVector> queue{w};
    while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (int i = 0; i < rank_; ++i) {
            auto v2 = reflect(v, i);
            if (seen.insert(v2).second) queue.push_back(v2);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Int> RootSystem::simple_root_coords(const WeightVector& dynkin) const {
    if (rank_ == 0) return {};
    std::vector<Int> rhs(dynkin.begin(), dynkin.end());
    Int det;
    auto nums = cramer(cartan_, rhs, det);
    for (auto& v : nums) {
        if (v % det != 0)
            throw std::invalid_argument("weight is not in the root lattice");
        v /= det;
    }
    return nums;
}

Int RootSystem::height_key(const WeightVector& w) const {
    Int key = 0;
    for (int i = 0; i < rank_; ++i)
        key += height_row_[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
    return key;
}

Int weyl_dimension(const RootSystem& rs, const WeightVector& lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw std::invalid_argument("weyl_dimension: weight rank mismatch");
    if (!rs.dominant(lambda))
        throw std::invalid_argument("weyl_dimension: weight is not dominant");
    Int num = 1, den = 1;
    for (const auto& root : rs.positive_roots()) {
        Int top = root.rho_pairing;
        for (int i = 0; i < rs.rank(); ++i)
            top += Int(root.pairing[static_cast<std::size_t>(i)]) *
                   lambda[static_cast<std::size_t>(i)];
        num *= top;
        den *= root.rho_pairing;
        Int g = boost::multiprecision::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    if (den != 1)
        throw std::logic_error("weyl_dimension: non-integral result");
    return num;
}

}  // namespace repdecomp
