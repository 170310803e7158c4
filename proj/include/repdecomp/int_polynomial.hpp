#pragma once

#include <string>
#include <vector>

#include "repdecomp/bigint.hpp"

namespace repdecomp {

/// Dense polynomial in one variable q with exact integer coefficients,
/// index = exponent. The zero polynomial has empty support.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial one() { return IntPolynomial({Int(1)}); }

    /// Coefficient of q^i; zero outside the stored range (including i < 0).
    const Int& coeff(long i) const;

    /// Highest exponent with nonzero coefficient; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    Int evaluate_at_one() const;

    bool palindromic() const;

    IntPolynomial operator+(const IntPolynomial& other) const;

    /// Multiply by q^s.
    IntPolynomial shifted(long s) const;

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

    /// Render as "1 + q + 2*q^2 + ...".
    std::string to_string() const;

private:
    std::vector<Int> coeffs_;  // no trailing zeros
};

/// The q-binomial coefficient [a choose b]_q, computed by the Pascal-type
/// recurrence [a,b] = [a-1,b] + q^(a-b)*[a-1,b-1]; stays in integer
/// arithmetic throughout. Requires 0 <= b <= a.
IntPolynomial gaussian_polynomial(int a, int b);

}  // namespace repdecomp
