#include "repdecomp/highest_weight.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "repdecomp/errors.hpp"

namespace repdecomp {

namespace {

long long rho_pairing(const RootSystem& rs, const WeightVector& w) {
    long long s = 0;
    for (int i = 0; i < rs.rank(); ++i)
        s += static_cast<long long>(rs.symmetrizer()[static_cast<std::size_t>(i)]) *
             w[static_cast<std::size_t>(i)];
    return s;
}

std::vector<WeightVector> split_weight(const Ambient& ambient, const WeightVector& w) {
    std::vector<WeightVector> out;
    std::size_t offset = 0;
    for (const auto& rs : ambient.factors) {
        out.emplace_back(w.begin() + static_cast<long>(offset),
                         w.begin() + static_cast<long>(offset + static_cast<std::size_t>(rs.rank())));
        offset += static_cast<std::size_t>(rs.rank());
    }
    return out;
}

Int total_height_key(const Ambient& ambient, const WeightVector& w) {
    Int key = 0;
    std::size_t offset = 0;
    for (const auto& rs : ambient.factors) {
        WeightVector part(w.begin() + static_cast<long>(offset),
                          w.begin() + static_cast<long>(offset + static_cast<std::size_t>(rs.rank())));
        key += rs.height_key(part);
        offset += static_cast<std::size_t>(rs.rank());
    }
    return key;
}

}  // namespace

std::vector<WeightVector> dominant_weights_below(const RootSystem& rs,
                                                 const WeightVector& lambda) {
    if (!rs.dominant(lambda))
        throw std::invalid_argument("dominant_weights_below: lambda must be dominant");
    const int r = rs.rank();
    if (r == 0) return {WeightVector{}};

    // mu = lambda - cartan * c over c >= 0; (lambda - mu, rho) = sum c_i d_i
    // is bounded by (lambda, rho), which bounds the search box.
    const long long budget = rho_pairing(rs, lambda);
    std::vector<WeightVector> out;
    std::vector<int> c(static_cast<std::size_t>(r), 0);

    auto emit = [&]() {
        WeightVector mu = lambda;
        for (int i = 0; i < r; ++i) {
            long long v = mu[static_cast<std::size_t>(i)];
            for (int j = 0; j < r; ++j)
                v -= static_cast<long long>(
                         rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                     c[static_cast<std::size_t>(j)];
            if (v < 0) return;
            mu[static_cast<std::size_t>(i)] = static_cast<int>(v);
        }
        out.push_back(std::move(mu));
    };

    std::function<void(int, long long)> dfs = [&](int i, long long used) {
        if (i == r) {
            emit();
            return;
        }
        const long long d = rs.symmetrizer()[static_cast<std::size_t>(i)];
        for (long long v = 0; used + v * d <= budget; ++v) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(v);
            dfs(i + 1, used + v * d);
        }
        c[static_cast<std::size_t>(i)] = 0;
    };
    dfs(0, 0);
    return out;
}

std::map<WeightVector, Int> dominant_multiplicities(const RootSystem& rs,
                                                    const WeightVector& lambda) {
    auto doms = dominant_weights_below(rs, lambda);
    // Process from the highest weight downward.
    std::sort(doms.begin(), doms.end(), [&](const WeightVector& a, const WeightVector& b) {
        Int ka = rs.height_key(a), kb = rs.height_key(b);
        if (ka != kb) return ka > kb;
        return a > b;
    });

    std::map<WeightVector, Int> mult;
    for (const auto& mu : doms) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        // Freudenthal: ((l+r,l+r)-(m+r,m+r)) m_mu = 2 sum_{a>0,t>=1} (mu+ta, a) m_{mu+ta}
        Int numerator = 0;
        for (const auto& root : rs.positive_roots()) {
            for (int t = 1;; ++t) {
                WeightVector nu = mu;
                bool overshot = false;
                for (int i = 0; i < rs.rank(); ++i) {
                    nu[static_cast<std::size_t>(i)] += t * root.dynkin_coords[static_cast<std::size_t>(i)];
                }
                auto it = mult.find(rs.make_dominant(nu));
                if (it == mult.end()) overshot = true;  // left the weight string
                if (overshot) break;
                Int pair = 0;
                for (int i = 0; i < rs.rank(); ++i)
                    pair += Int(root.pairing[static_cast<std::size_t>(i)]) *
                            nu[static_cast<std::size_t>(i)];
                numerator += pair * it->second;
            }
        }
        numerator *= 2;

        // denominator = (lambda + mu + 2 rho, lambda - mu), an integer since
        // lambda - mu lies in the root lattice.
        WeightVector diff(static_cast<std::size_t>(rs.rank()));
        for (int i = 0; i < rs.rank(); ++i)
            diff[static_cast<std::size_t>(i)] =
                lambda[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
        auto coords = rs.simple_root_coords(diff);
        Int denominator = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            Int sum_j = lambda[static_cast<std::size_t>(j)] + mu[static_cast<std::size_t>(j)] + 2;
            denominator += coords[static_cast<std::size_t>(j)] *
                           rs.symmetrizer()[static_cast<std::size_t>(j)] * sum_j;
        }
        if (denominator == 0 || numerator % denominator != 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
        mult[mu] = numerator / denominator;
    }

    // Weights below lambda that never occur have multiplicity zero; drop them.
    for (auto it = mult.begin(); it != mult.end();)
        it = (it->second == 0) ? mult.erase(it) : std::next(it);
    return mult;
}

std::map<WeightVector, Int> dominant_multiplicities(const Ambient& ambient,
                                                    const WeightVector& lambda) {
    std::map<WeightVector, Int> acc;
    acc.emplace(WeightVector{}, 1);
    auto parts = split_weight(ambient, lambda);
    for (std::size_t f = 0; f < ambient.factors.size(); ++f) {
        auto table = dominant_multiplicities(ambient.factors[f], parts[f]);
        std::map<WeightVector, Int> next;
        for (const auto& [prefix, m1] : acc) {
            for (const auto& [w, m2] : table) {
                WeightVector key = prefix;
                key.insert(key.end(), w.begin(), w.end());
                next.emplace(std::move(key), m1 * m2);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Character irreducible_character(const RootSystem& rs, const WeightVector& lambda) {
    const Int dim = weyl_dimension(rs, lambda);
    if (Int(character_size_cap()) < dim)
        throw size_cap_error("irreducible character of dimension " + dim.str() +
                             " exceeds the size cap");
    std::map<WeightVector, Int> full;
    Int total = 0;
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda)) {
        for (const auto& w : rs.weyl_orbit(mu)) {
            full.emplace(w, m);
            total += m;
        }
    }
    if (total != dim)
        throw std::logic_error("irreducible character size disagrees with the Weyl dimension");
    Ambient amb;
    amb.factors.push_back(rs);
    return Character(std::move(amb), std::move(full));
}

Character irreducible_character(const Ambient& ambient, const WeightVector& lambda) {
    if (static_cast<int>(lambda.size()) != ambient.total_rank())
        throw std::invalid_argument("irreducible_character: weight rank mismatch");
    Character out(Ambient{}, {{WeightVector{}, 1}});
    auto parts = split_weight(ambient, lambda);
    for (std::size_t f = 0; f < ambient.factors.size(); ++f)
        out = external_tensor(out, irreducible_character(ambient.factors[f], parts[f]));
    return out;
}

Int weyl_dimension(const Ambient& ambient, const WeightVector& lambda) {
    Int dim = 1;
    auto parts = split_weight(ambient, lambda);
    for (std::size_t f = 0; f < ambient.factors.size(); ++f)
        dim *= weyl_dimension(ambient.factors[f], parts[f]);
    return dim;
}

Int Decomposition::multiplicity_of(const WeightVector& w) const {
    for (const auto& [hw, m] : terms)
        if (hw == w) return m;
    return 0;
}

Int Decomposition::total_dimension() const {
    Int s = 0;
    for (const auto& [hw, m] : terms) s += m * weyl_dimension(ambient, hw);
    return s;
}

Decomposition decompose(const Character& a) {
    std::map<WeightVector, Int> dom;
    for (const auto& [w, m] : a.weights())
        if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; })) dom.emplace(w, m);

    Decomposition out;
    out.ambient = a.ambient();
    while (!dom.empty()) {
        // maximal remaining weight in the stripping order
        auto best = dom.begin();
        Int best_key = total_height_key(out.ambient, best->first);
        for (auto it = std::next(dom.begin()); it != dom.end(); ++it) {
            Int key = total_height_key(out.ambient, it->first);
            if (key > best_key || (key == best_key && it->first > best->first)) {
                best = it;
                best_key = std::move(key);
            }
        }
        WeightVector hw = best->first;
        Int m = best->second;
        if (m < 0)
            throw not_a_character_error("decompose: negative multiplicity at weight reached"
                                        " during stripping");
        out.terms.emplace_back(hw, m);
        for (const auto& [w, mw] : dominant_multiplicities(out.ambient, hw)) {
            auto it = dom.find(w);
            if (it == dom.end()) {
                dom.emplace(w, -m * mw);
            } else {
                it->second -= m * mw;
                if (it->second == 0) dom.erase(it);
            }
        }
    }
    return out;
}

Int trivial_multiplicity(const Character& a) {
    WeightVector zero(static_cast<std::size_t>(a.ambient().total_rank()), 0);
    return decompose(a).multiplicity_of(zero);
}

Character reconstruct(const Decomposition& d) {
    std::map<WeightVector, Int> acc;
    for (const auto& [hw, m] : d.terms)
        for (const auto& [w, mw] : irreducible_character(d.ambient, hw).weights()) {
            auto [it, inserted] = acc.emplace(w, m * mw);
            if (!inserted) it->second += m * mw;
        }
    return Character(d.ambient, std::move(acc));
}

}  // namespace repdecomp
