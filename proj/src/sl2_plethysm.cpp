#include "repdecomp/sl2_plethysm.hpp"

#include <stdexcept>

#include "repdecomp/int_polynomial.hpp"

namespace repdecomp {

Int plethysm_coefficient(int j, int k, int w) {
    if (j < 1 || k < 0)
        throw std::invalid_argument("plethysm_coefficient: requires j >= 1, k >= 0");
    if (w < 0 || 2 * w > j * k)
        throw std::invalid_argument("plethysm_coefficient: w outside 0..floor(jk/2)");
    IntPolynomial g = gaussian_polynomial(j + k, k);
    return g.coeff(w) - g.coeff(w - 1);
}

std::map<int, Int> sym_of_sym_sl2(int j, int k) {
    if (j < 1 || k < 0)
        throw std::invalid_argument("sym_of_sym_sl2: requires j >= 1, k >= 0");
    IntPolynomial g = gaussian_polynomial(j + k, k);
    std::map<int, Int> out;
    for (int w = 0; 2 * w <= j * k; ++w) {
        Int n = g.coeff(w) - g.coeff(w - 1);
        if (n > 0) out.emplace(j * k - 2 * w, std::move(n));
    }
    return out;
}

bool detects_sym3_sl2(int n) {
    if (n < 2)
        throw std::invalid_argument("detects_sym3_sl2: requires n >= 2");
    const int k = n - 1;
    if ((3 * k) % 2 != 0) return false;  // no weight-zero summand at all
    return plethysm_coefficient(3, k, 3 * k / 2) >= 1;
}

}  // namespace repdecomp
