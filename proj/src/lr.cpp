#include "repdecomp/lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "repdecomp/errors.hpp"

namespace repdecomp {

namespace {

struct SkewCell {
    int row;
    int col;
};

// Backtracking count of LR fillings, cells visited in reverse reading
// order (rows top to bottom, right to left within a row).
class LRCounter {
public:
    LRCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : mu_(mu) {
        const int rows = nu.length();
        lambda_row_.resize(static_cast<std::size_t>(rows));
        nu_row_.resize(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            lambda_row_[static_cast<std::size_t>(i)] = lambda.part(static_cast<std::size_t>(i));
            nu_row_[static_cast<std::size_t>(i)] = nu.part(static_cast<std::size_t>(i));
            for (int j = nu_row_[static_cast<std::size_t>(i)] - 1;
                 j >= lambda_row_[static_cast<std::size_t>(i)]; --j)
                cells_.push_back({i, j});
        }
        grid_.assign(static_cast<std::size_t>(rows),
                     std::vector<int>(static_cast<std::size_t>(nu.part(0)), 0));
        counts_.assign(static_cast<std::size_t>(mu.length()) + 1, 0);
    }

    Int count() {
        recurse(0);
        return total_;
    }

private:
    void recurse(std::size_t idx) {
        if (idx == cells_.size()) {
            ++total_;
            return;
        }
        const auto [i, j] = cells_[idx];
        const std::size_t ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        int right = (j + 1 < nu_row_[ui]) ? grid_[ui][uj + 1] : 0;
        int above = 0;
        if (i > 0 && j >= lambda_row_[ui - 1]) above = grid_[ui - 1][uj];
        for (int v = 1; v <= mu_.length(); ++v) {
            const std::size_t uv = static_cast<std::size_t>(v);
            if (counts_[uv] >= mu_.part(uv - 1)) continue;
            if (v > 1 && counts_[uv] >= counts_[uv - 1]) continue;  // lattice word
            if (right != 0 && v > right) continue;                  // row weakly increasing
            if (above != 0 && v <= above) continue;                 // column strict
            grid_[ui][uj] = v;
            ++counts_[uv];
            recurse(idx + 1);
            --counts_[uv];
            grid_[ui][uj] = 0;
        }
    }

    Partition mu_;
    std::vector<int> lambda_row_, nu_row_;
    std::vector<SkewCell> cells_;
    std::vector<std::vector<int>> grid_;
    std::vector<int> counts_;
    Int total_ = 0;
};

void gen_partitions(int remaining, int max_part, int parts_left, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (parts_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(remaining - p, p, parts_left - 1, stack, out);
        stack.pop_back();
    }
}

Partition normalize_sl(const Partition& nu, int m) {
    const int shift = nu.part(static_cast<std::size_t>(m - 1));
    if (shift == 0) return nu.normalized();
    std::vector<int> v;
    for (int i = 0; i < m; ++i) v.push_back(nu.part(static_cast<std::size_t>(i)) - shift);
    return Partition(std::move(v)).normalized();
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.sum() != lambda.sum() + mu.sum()) return 0;
    if (!lambda.contained_in(nu) || !mu.contained_in(nu)) return 0;
    return LRCounter(lambda, mu, nu).count();
}

Int SchurDecomp::multiplicity_of(const Partition& p) const {
    auto it = terms.find(p.normalized());
    return it == terms.end() ? Int(0) : it->second;
}

std::vector<std::pair<Partition, Int>> SchurDecomp::sorted_terms() const {
    std::vector<std::pair<Partition, Int>> out(terms.begin(), terms.end());
    if (rank_m > 1) {
        RootSystem rs = RootSystem::make('A', rank_m - 1);
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            Int ka = rs.height_key(partition_to_weight(a.first, rank_m));
            Int kb = rs.height_key(partition_to_weight(b.first, rank_m));
            if (ka != kb) return ka > kb;
            return partition_to_weight(a.first, rank_m) > partition_to_weight(b.first, rank_m);
        });
    }
    return out;
}

SchurDecomp tensor_decompose_lr(const Partition& lambda, const Partition& mu, int m) {
    if (m <= 0)
        throw std::invalid_argument("tensor_decompose_lr: m must be positive");
    if (lambda.length() > m || mu.length() > m)
        throw std::invalid_argument("tensor_decompose_lr: partition has more than m parts");
    SchurDecomp out;
    out.rank_m = m;
    const int total = lambda.sum() + mu.sum();
    for (const auto& nu : partitions_of(total, m, lambda.part(0) + mu.part(0))) {
        Int c = lr_coefficient(lambda, mu, nu);
        if (c > 0) out.terms.emplace(normalize_sl(nu, m), std::move(c));
    }
    return out;
}

SchurDecomp pieri_row(int k, int m) {
    if (k <= 0)
        throw std::invalid_argument("pieri_row: k must be positive");
    if (m < 2)
        throw std::invalid_argument("pieri_row: m must be at least 2");
    SchurDecomp out;
    out.rank_m = m;
    for (int i = 0; i <= k; ++i)
        out.terms.emplace(normalize_sl(Partition{k + i, k - i}, m), 1);
    return out;
}

Character kostka_weights(const Partition& lambda, int m) {
    if (m <= 0)
        throw std::invalid_argument("kostka_weights: m must be positive");
    if (lambda.length() > m)
        throw std::invalid_argument("kostka_weights: partition has more than m parts");

    Ambient amb;
    if (m > 1) amb.factors.push_back(RootSystem::make('A', m - 1));
    std::map<WeightVector, Int> acc;

    const int rows = lambda.length();
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        grid[static_cast<std::size_t>(i)].assign(
            static_cast<std::size_t>(lambda.part(static_cast<std::size_t>(i))), 0);
    std::vector<int> content(static_cast<std::size_t>(m) + 1, 0);

    // column-strict, row-weak backtracking over all SSYT with entries 1..m
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i == rows) {
            WeightVector w;
            for (int t = 1; t < m; ++t)
                w.push_back(content[static_cast<std::size_t>(t)] -
                            content[static_cast<std::size_t>(t + 1)]);
            auto [it, inserted] = acc.emplace(std::move(w), 1);
            if (!inserted) ++it->second;
            if (acc.size() > character_size_cap())
                throw size_cap_error("kostka_weights: result exceeds the character size cap");
            return;
        }
        const std::size_t ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        int lo = 1;
        if (j > 0) lo = std::max(lo, grid[ui][uj - 1]);
        if (i > 0 && j < lambda.part(ui - 1)) lo = std::max(lo, grid[ui - 1][uj] + 1);
        const int next_i = (j + 1 < lambda.part(ui)) ? i : i + 1;
        const int next_j = (j + 1 < lambda.part(ui)) ? j + 1 : 0;
        for (int v = lo; v <= m; ++v) {
            grid[ui][uj] = v;
            ++content[static_cast<std::size_t>(v)];
            fill(next_i, next_j);
            --content[static_cast<std::size_t>(v)];
        }
    };
    fill(0, 0);
    return Character(std::move(amb), std::move(acc));
}

Int hook_content_dimension(const Partition& lambda, int m) {
    if (lambda.length() > m) return 0;
    Int num = 1, den = 1;
    const Partition conj = conjugate(lambda);
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(static_cast<std::size_t>(i)); ++j) {
            const int arm = lambda.part(static_cast<std::size_t>(i)) - 1 - j;
            const int leg = conj.part(static_cast<std::size_t>(j)) - 1 - i;
            num *= m + j - i;
            den *= arm + leg + 1;
            Int g = boost::multiprecision::gcd(num, den);
            if (g > 1) {
                num /= g;
                den /= g;
            }
        }
    }
    if (den != 1)
        throw std::logic_error("hook_content_dimension: non-integral result");
    return num;
}

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    if (n < 0) return {};
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, std::min(n, max_part), max_parts, stack, out);
    if (n == 0) return {Partition{}};
    return out;
}

WeightVector partition_to_weight(const Partition& lambda, int m) {
    if (lambda.length() > m)
        throw std::invalid_argument("partition_to_weight: partition has more than m parts");
    WeightVector w;
    for (int i = 0; i + 1 < m; ++i)
        w.push_back(lambda.part(static_cast<std::size_t>(i)) -
                    lambda.part(static_cast<std::size_t>(i + 1)));
    return w;
}

Partition weight_to_partition(const WeightVector& w) {
    std::vector<int> parts(w.size());
    int tail = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] < 0)
            throw std::invalid_argument("weight_to_partition: weight is not dominant");
        tail += w[i];
        parts[i] = tail;
    }
    return Partition(std::move(parts)).normalized();
}

}  // namespace repdecomp
