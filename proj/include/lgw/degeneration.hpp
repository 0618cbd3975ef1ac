#pragma once

#include <functional>
#include <vector>

#include "lgw/rational.hpp"

namespace lgw {

// A partition of d as an exponent vector m = (m_1,...,m_d) with
// sum l*m_l = d: m_l parts equal to l.
using Partition = std::vector<long>;

// All partitions of d, in descending lexicographic order of exponent vectors.
std::vector<Partition> partitions(int d);

// The degeneration sum
//   N_d = sum_{m |- d} prod_l (l^{m_l} / m_l!) * ((-1)^{l-1} / l^2)^{m_l} * N_F2(m).
Rational degeneration_sum(int d, const std::function<Rational(const Partition&)>& N_F2);

// Closed-form Hirzebruch count prod_l (2d)^{m_l}.
Rational f2_product_formula(int d, const Partition& m);

// N_d of the line-plus-conic pair via the degeneration sum with the
// closed-form Hirzebruch counts; equals C(2d, d).
Rational line_conic_invariant(int d);

// Independent route: the x^d coefficient of exp(2d log(1+x)) computed in the
// truncated-series ring.
Rational line_conic_series_coefficient(int d);

}  // namespace lgw
