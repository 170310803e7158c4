#include "repdecomp/group_spec.hpp"

#include <sstream>
#include <stdexcept>

#include "repdecomp/highest_weight.hpp"
#include "repdecomp/lr.hpp"
#include "repdecomp/partition.hpp"

namespace repdecomp {

Int GroupFactor::dimension() const {
    return weyl_dimension(rs, highest);
}

Int GroupSpec::dimension() const {
    Int d = 1;
    for (const auto& f : factors) d *= f.dimension();
    return d;
}

Ambient GroupSpec::ambient() const {
    Ambient amb;
    for (const auto& f : factors) amb.factors.push_back(f.rs);
    return amb;
}

WeightVector GroupSpec::highest_weight() const {
    WeightVector w;
    for (const auto& f : factors) w.insert(w.end(), f.highest.begin(), f.highest.end());
    return w;
}

std::string GroupSpec::label() const {
    if (factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ";";
        s += factors[i].rs.name() + ":[";
        for (std::size_t j = 0; j < factors[i].highest.size(); ++j) {
            if (j) s += ",";
            s += std::to_string(factors[i].highest[j]);
        }
        s += "]";
    }
    return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
    GroupSpec spec;
    std::istringstream is(text);
    std::string factor_text;
    while (std::getline(is, factor_text, ';')) {
        if (factor_text.empty()) continue;
        auto colon = factor_text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("group factor '" + factor_text +
                                        "' is missing ':' (expected e.g. A2:[1,0])");
        std::string head = factor_text.substr(0, colon);
        std::string body = factor_text.substr(colon + 1);
        if (head.empty())
            throw std::invalid_argument("group factor '" + factor_text + "' has an empty type");
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(head[0])));
        int rank = 0;
        try {
            rank = std::stoi(head.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad rank in group factor '" + factor_text + "'");
        }

        GroupFactor factor{RootSystem::make(letter, rank), {}};
        if (body.rfind("schur=", 0) == 0) {
            if (letter != 'A')
                throw std::invalid_argument("schur= factors are only defined for type A");
            Partition lambda = parse_partition(body.substr(6));
            factor.highest = partition_to_weight(lambda, rank + 1);
        } else {
            std::string coords = body;
            if (coords.size() >= 2 && coords.front() == '[' && coords.back() == ']')
                coords = coords.substr(1, coords.size() - 2);
            std::istringstream cs(coords);
            std::string tok;
            while (std::getline(cs, tok, ',')) {
                if (tok.empty()) continue;
                factor.highest.push_back(std::stoi(tok));
            }
            if (static_cast<int>(factor.highest.size()) != rank)
                throw std::invalid_argument("group factor '" + factor_text + "' needs exactly " +
                                            std::to_string(rank) + " coordinates");
            for (int x : factor.highest)
                if (x < 0)
                    throw std::invalid_argument("group factor '" + factor_text +
                                                "' has a non-dominant weight");
        }
        spec.factors.push_back(std::move(factor));
    }
    return spec;
}

Character build_rep_character(const GroupSpec& g) {
    Character out(Ambient{}, {{WeightVector{}, 1}});
    for (const auto& f : g.factors)
        out = external_tensor(out, irreducible_character(f.rs, f.highest));
    return out;
}

}  // namespace repdecomp
