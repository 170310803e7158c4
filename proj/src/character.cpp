#include "repdecomp/character.hpp"

#include <algorithm>
#include <stdexcept>

#include "repdecomp/errors.hpp"

namespace repdecomp {

int Ambient::total_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank();
    return r;
}

std::string Ambient::label() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].name();
    }
    return s;
}

bool Ambient::operator==(const Ambient& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (!(factors[i] == other.factors[i])) return false;
    return true;
}

Ambient Ambient::product(const Ambient& a, const Ambient& b) {
    Ambient out = a;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

Character::Character(Ambient ambient, std::map<WeightVector, Int> weights)
    : ambient_(std::move(ambient)), weights_(std::move(weights)) {
    const std::size_t rank = static_cast<std::size_t>(ambient_.total_rank());
    for (auto it = weights_.begin(); it != weights_.end();) {
        if (it->first.size() != rank)
            throw std::invalid_argument("Character: weight rank mismatch");
        if (it->second < 0)
            throw not_a_character_error("Character: negative multiplicity");
        if (it->second == 0)
            it = weights_.erase(it);
        else
            ++it;
    }
    if (weights_.size() > character_size_cap())
        throw size_cap_error("Character exceeds the size cap of " +
                             std::to_string(character_size_cap()) + " weight entries");
}

Int Character::total_multiplicity() const {
    Int s = 0;
    for (const auto& [w, m] : weights_) s += m;
    return s;
}

Int Character::multiplicity(const WeightVector& w) const {
    auto it = weights_.find(w);
    return it == weights_.end() ? Int(0) : it->second;
}

bool Character::weyl_invariant() const {
    std::size_t offset = 0;
    for (const auto& rs : ambient_.factors) {
        for (int i = 0; i < rs.rank(); ++i) {
            for (const auto& [w, m] : weights_) {
                WeightVector part(w.begin() + static_cast<long>(offset),
                                  w.begin() + static_cast<long>(offset) + rs.rank());
                part = rs.reflect(part, i);
                WeightVector image = w;
                std::copy(part.begin(), part.end(), image.begin() + static_cast<long>(offset));
                if (multiplicity(image) != m) return false;
            }
        }
        offset += static_cast<std::size_t>(rs.rank());
    }
    return true;
}

namespace {

void accumulate(std::map<WeightVector, Int>& acc, WeightVector key, const Int& add) {
    auto [it, inserted] = acc.emplace(std::move(key), add);
    if (!inserted) it->second += add;
    if (acc.size() > character_size_cap())
        throw size_cap_error("tensor product exceeds the character size cap");
}

std::map<WeightVector, Int> convolve(const Character& a, const Character& b) {
    std::map<WeightVector, Int> acc;
    WeightVector key;
    for (const auto& [wa, ma] : a.weights()) {
        for (const auto& [wb, mb] : b.weights()) {
            key = wa;
            for (std::size_t i = 0; i < key.size(); ++i) key[i] += wb[i];
            accumulate(acc, key, ma * mb);
        }
    }
    return acc;
}

/// Linear combination of products of Adams operations; every coefficient
/// combination used below keeps the result divisible by the divisor on
/// genuine characters.
Character newton_combination(const Character& a,
                             const std::vector<std::pair<Int, std::vector<int>>>& terms,
                             const Int& divisor, const char* what) {
    std::map<WeightVector, Int> acc;
    for (const auto& [coeff, adams_degrees] : terms) {
        // product over p_k factors
        Character prod = adams(a, adams_degrees[0]);
        for (std::size_t i = 1; i < adams_degrees.size(); ++i)
            prod = tensor(prod, adams(a, adams_degrees[i]));
        for (const auto& [w, m] : prod.weights()) {
            auto [it, inserted] = acc.emplace(w, coeff * m);
            if (!inserted) it->second += coeff * m;
        }
    }
    std::map<WeightVector, Int> out;
    for (auto& [w, m] : acc) {
        if (m == 0) continue;
        if (m % divisor != 0)
            throw not_a_character_error(std::string(what) +
                                        ": inexact division, input is not a character");
        out.emplace(w, m / divisor);
    }
    return Character(a.ambient(), std::move(out));
}

}  // namespace

Character tensor(const Character& a, const Character& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("tensor: ambient groups differ");
    return Character(a.ambient(), convolve(a, b));
}

Character external_tensor(const Character& a, const Character& b) {
    Ambient amb = Ambient::product(a.ambient(), b.ambient());
    std::map<WeightVector, Int> acc;
    for (const auto& [wa, ma] : a.weights()) {
        for (const auto& [wb, mb] : b.weights()) {
            WeightVector key = wa;
            key.insert(key.end(), wb.begin(), wb.end());
            accumulate(acc, std::move(key), ma * mb);
        }
    }
    return Character(std::move(amb), std::move(acc));
}

Character dual(const Character& a) {
    std::map<WeightVector, Int> acc;
    for (const auto& [w, m] : a.weights()) {
        WeightVector neg = w;
        for (int& x : neg) x = -x;
        acc.emplace(std::move(neg), m);
    }
    return Character(a.ambient(), std::move(acc));
}

Character adams(const Character& a, int k) {
    if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
    if (k == 1) return a;
    std::map<WeightVector, Int> acc;
    for (const auto& [w, m] : a.weights()) {
        WeightVector scaled = w;
        for (int& x : scaled) x *= k;
        acc.emplace(std::move(scaled), m);
    }
    return Character(a.ambient(), std::move(acc));
}

Character sym_power(const Character& a, int d) {
    switch (d) {
        case 1:
            return a;
        case 2:
            return newton_combination(a, {{1, {1, 1}}, {1, {2}}}, 2, "sym_power(2)");
        case 3:
            return newton_combination(a, {{1, {1, 1, 1}}, {3, {1, 2}}, {2, {3}}}, 6,
                                      "sym_power(3)");
        case 4:
            return newton_combination(a,
                                      {{1, {1, 1, 1, 1}},
                                       {6, {1, 1, 2}},
                                       {3, {2, 2}},
                                       {8, {1, 3}},
                                       {6, {4}}},
                                      24, "sym_power(4)");
        default:
            throw std::invalid_argument("sym_power: degree must be in 1..4");
    }
}

Character ext_power(const Character& a, int d) {
    switch (d) {
        case 1:
            return a;
        case 2:
            return newton_combination(a, {{1, {1, 1}}, {-1, {2}}}, 2, "ext_power(2)");
        case 3:
            return newton_combination(a, {{1, {1, 1, 1}}, {-3, {1, 2}}, {2, {3}}}, 6,
                                      "ext_power(3)");
        case 4:
            return newton_combination(a,
                                      {{1, {1, 1, 1, 1}},
                                       {-6, {1, 1, 2}},
                                       {3, {2, 2}},
                                       {8, {1, 3}},
                                       {-6, {4}}},
                                      24, "ext_power(4)");
        default:
            throw std::invalid_argument("ext_power: degree must be in 1..4");
    }
}

Character hook_component_3(const Character& a) {
    return newton_combination(a, {{1, {1, 1, 1}}, {-1, {3}}}, 3, "hook_component_3");
}

}  // namespace repdecomp
