#include "lgw/degeneration.hpp"

#include <algorithm>

#include "lgw/series.hpp"

namespace lgw {

namespace {

void fill_partitions(int remaining, int max_part, Partition& current,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current[static_cast<std::size_t>(part) - 1] += 1;
        fill_partitions(remaining - part, part, current, out);
        current[static_cast<std::size_t>(part) - 1] -= 1;
    }
}

}  // namespace

std::vector<Partition> partitions(int d) {
    if (d < 1) throw input_error("partitions: d must be >= 1");
    std::vector<Partition> out;
    Partition current(static_cast<std::size_t>(d), 0);
    fill_partitions(d, d, current, out);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a > b; });
    return out;
}

Rational degeneration_sum(int d, const std::function<Rational(const Partition&)>& N_F2) {
    Rational total(0);
    for (const auto& m : partitions(d)) {
        Rational factor(1);
        for (int l = 1; l <= d; ++l) {
            long ml = m[static_cast<std::size_t>(l) - 1];
            if (ml == 0) continue;
            factor *= Rational(l).pow(ml) / Rational::factorial(static_cast<unsigned long>(ml));
            Rational cover(l % 2 == 1 ? 1 : -1, static_cast<long>(l) * l);
            factor *= cover.pow(ml);
        }
        total += factor * N_F2(m);
    }
    return total;
}

Rational f2_product_formula(int d, const Partition& m) {
    if (static_cast<int>(m.size()) != d) throw input_error("f2_product_formula: partition length");
    long check = 0;
    for (int l = 1; l <= d; ++l) {
        if (m[static_cast<std::size_t>(l) - 1] < 0)
            throw input_error("f2_product_formula: negative exponent");
        check += l * m[static_cast<std::size_t>(l) - 1];
    }
    if (check != d) throw input_error("f2_product_formula: exponents do not sum to d");
    Rational prod(1);
    for (int l = 1; l <= d; ++l)
        prod *= Rational(2 * d).pow(m[static_cast<std::size_t>(l) - 1]);
    return prod;
}

Rational line_conic_invariant(int d) {
    if (d < 1) throw input_error("line_conic_invariant: d must be >= 1");
    return degeneration_sum(d, [d](const Partition& m) { return f2_product_formula(d, m); });
}

Rational line_conic_series_coefficient(int d) {
    if (d < 1) throw input_error("line_conic_series_coefficient: d must be >= 1");
    TruncatedSeries one_plus_x = univariate({Rational(1), Rational(1)}, d);
    TruncatedSeries powd = exp(log1p(one_plus_x) * Rational(2 * d));
    return univariate_coefficient(powd, d);
}

}  // namespace lgw
