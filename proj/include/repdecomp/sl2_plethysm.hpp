#pragma once

#include <map>

#include "repdecomp/bigint.hpp"

namespace repdecomp {

/// N(j, k, w): multiplicity of Sym^(jk-2w) inside Sym^j(Sym^k) of the
/// standard 2-dimensional space, read off as the difference of two adjacent
/// coefficients of the q-binomial [j+k choose k]_q. Nonnegative for
/// 0 <= w <= floor(jk/2); w outside that range is rejected.
Int plethysm_coefficient(int j, int k, int w);

/// Full decomposition of Sym^j(Sym^k) as SL_2 data: a map
/// {jk - 2w : N(j,k,w)} over the w with N > 0. Determinant twists are
/// dropped (they restrict trivially to SL_2). Total dimension is
/// binomial(j+k, j).
std::map<int, Int> sym_of_sym_sl2(int j, int k);

/// Whether the cube of the symmetric square detects the (n-1)-st symmetric
/// power embedding of SL_2 in GL_n via a fixed line in Sym^3: true iff
/// N(3, n-1, 3(n-1)/2) >= 1, which happens exactly for n = 1 mod 4.
bool detects_sym3_sl2(int n);

}  // namespace repdecomp
