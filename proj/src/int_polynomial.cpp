#include "repdecomp/int_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace repdecomp {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size()))
        return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

Int IntPolynomial::evaluate_at_one() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

bool IntPolynomial::palindromic() const {
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < other.coeffs_.size()) out[i] += other.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(long s) const {
    if (is_zero()) return {};
    if (s < 0)
        throw std::invalid_argument("IntPolynomial::shifted: negative shift");
    std::vector<Int> out(coeffs_.size() + static_cast<std::size_t>(s));
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + s);
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i].str();
        if (i > 0) {
            if (coeffs_[i] != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPolynomial gaussian_polynomial(int a, int b) {
    if (a < 0 || b < 0 || b > a)
        throw std::invalid_argument("gaussian_polynomial: requires 0 <= b <= a");
    // row[k] = [i choose k]_q while i ascends; symmetry keeps b small.
    b = std::min(b, a - b);
    std::vector<IntPolynomial> row(static_cast<std::size_t>(b) + 1);
    row[0] = IntPolynomial::one();
    for (int i = 1; i <= a; ++i) {
        for (int k = std::min(i, b); k >= 1; --k) {
            if (k == i) {
                row[static_cast<std::size_t>(k)] = IntPolynomial::one();
            } else {
                row[static_cast<std::size_t>(k)] =
                    row[static_cast<std::size_t>(k)] +
                    row[static_cast<std::size_t>(k - 1)].shifted(i - k);
            }
        }
    }
    return row[static_cast<std::size_t>(b)];
}

}  // namespace repdecomp
