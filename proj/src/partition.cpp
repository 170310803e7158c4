#include "repdecomp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace repdecomp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::length() const {
    int n = 0;
    for (int p : parts_)
        if (p > 0) ++n;
    return n;
}

Partition Partition::normalized() const {
    std::vector<int> v(parts_.begin(), parts_.begin() + length());
    return Partition(std::move(v));
}

Partition Partition::padded(int m) const {
    if (length() > m)
        throw std::invalid_argument("partition has more than m nonzero parts");
    std::vector<int> v(parts_.begin(), parts_.begin() + length());
    v.resize(static_cast<std::size_t>(m), 0);
    return Partition(std::move(v));
}

bool Partition::contained_in(const Partition& other) const {
    std::size_t n = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (part(i) > other.part(i)) return false;
    return true;
}

bool Partition::operator==(const Partition& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    std::size_t n = std::max(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = part(i) <=> other.part(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    int len = length();
    for (int i = 0; i < len; ++i) {
        if (i) os << ',';
        os << parts_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    cols.resize(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(static_cast<std::size_t>(i)); ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

Partition sl_dual(const Partition& lambda, int m) {
    if (m <= 0)
        throw std::invalid_argument("sl_dual: m must be positive");
    if (lambda.length() > m)
        throw std::invalid_argument("sl_dual: partition has more than m nonzero parts");
    int top = lambda.part(0);
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i)
        v.push_back(top - lambda.part(static_cast<std::size_t>(i)));
    return Partition(std::move(v));
}

Partition parse_partition(const std::string& text) {
    std::string s = text;
    auto strip = [](std::string& t, char open, char close) {
        if (t.size() >= 2 && t.front() == open && t.back() == close) {
            t = t.substr(1, t.size() - 2);
        }
    };
    strip(s, '(', ')');
    strip(s, '[', ']');
    if (s.empty() || s == "-")
        return Partition{};
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("bad partition entry: '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace repdecomp
