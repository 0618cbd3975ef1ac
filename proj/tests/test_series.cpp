#include <random>
#include <vector>

#include "doctest.h"
#include "lgw/series.hpp"

using lgw::Rational;
using lgw::TruncatedSeries;
using lgw::univariate;
using lgw::ZMonomial;

namespace {

TruncatedSeries mono(long num, long den, int a, int b, int p, int q, int order) {
    return TruncatedSeries::monomial(Rational(num, den), {a, b, p, q}, order);
}

// Deterministic generator of small sparse series for the property checks.
TruncatedSeries random_series(std::mt19937_64& rng, int order, bool unit_constant) {
    std::uniform_int_distribution<int> zdist(-2, 2), tdist(0, order), cnum(-3, 3), cden(1, 3);
    TruncatedSeries s(order);
    if (unit_constant) s = TruncatedSeries::one(order);
    int terms = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        int p = tdist(rng), q = tdist(rng);
        if (p + q > order) continue;
        if (p + q == 0) continue;  // keep the t-filtration strict for log/exp domains
        s = s + mono(cnum(rng), cden(rng), zdist(rng), zdist(rng), p, q, order);
    }
    return s;
}

// Independent univariate log oracle: l_n = a_n - (1/n) sum_{j=1}^{n-1} a_j (n-j) l_{n-j},
// the coefficient recursion of A'(x)/A(x) = (log A)'.
std::vector<Rational> log_oracle(const std::vector<Rational>& a) {
    std::vector<Rational> l(a.size(), Rational(0));
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc = a[n];
        for (std::size_t j = 1; j < n; ++j)
            acc -= a[j] * Rational(static_cast<long>(n - j)) * l[n - j] / Rational(static_cast<long>(n));
        l[n] = acc;
    }
    return l;
}

}  // namespace

TEST_CASE("add: identities and disjoint supports") {
    int N = 4;
    TruncatedSeries f = TruncatedSeries::one(N) + mono(1, 1, -1, 0, 1, 0, N);  // 1 + t1/x
    CHECK(f + TruncatedSeries(N) == f);
    TruncatedSeries g = TruncatedSeries::one(N) + mono(1, 1, 1, 0, 1, 0, N);
    CHECK((g + (-g)).is_zero());
    TruncatedSeries h = mono(1, 1, 1, 0, 1, 0, N) + mono(1, 1, 1, 3, 0, 1, N);
    CHECK(h.term_count() == 2);
    CHECK(h.coefficient({1, 0, 1, 0}) == Rational(1));
    CHECK(h.coefficient({1, 3, 0, 1}) == Rational(1));
}

TEST_CASE("mul: binomial expansion and identities") {
    int N = 4;
    TruncatedSeries f = TruncatedSeries::one(N) + mono(1, 1, -1, 0, 1, 0, N);
    TruncatedSeries g = TruncatedSeries::one(N) + mono(1, 1, 1, 3, 0, 1, N);
    TruncatedSeries fg = f * g;
    CHECK(fg.coefficient({0, 0, 0, 0}) == Rational(1));
    CHECK(fg.coefficient({-1, 0, 1, 0}) == Rational(1));
    CHECK(fg.coefficient({1, 3, 0, 1}) == Rational(1));
    CHECK(fg.coefficient({0, 3, 1, 1}) == Rational(1));
    CHECK(fg.term_count() == 4);

    CHECK(f * TruncatedSeries::one(N) == f);

    TruncatedSeries a = TruncatedSeries::one(2) + mono(1, 1, 1, 0, 1, 0, 2);
    TruncatedSeries b = TruncatedSeries::one(2) - mono(1, 1, 1, 0, 1, 0, 2);
    TruncatedSeries prod = a * b;
    CHECK(prod == TruncatedSeries::one(2) - mono(1, 1, 2, 0, 2, 0, 2));
}

TEST_CASE("log1p: Mercator series") {
    TruncatedSeries f = TruncatedSeries::one(3) + mono(1, 1, -1, 0, 1, 0, 3);
    TruncatedSeries lf = log1p(f);
    CHECK(lf == mono(1, 1, -1, 0, 1, 0, 3) - mono(1, 2, -2, 0, 2, 0, 3) + mono(1, 3, -3, 0, 3, 0, 3));
    CHECK(log1p(TruncatedSeries::one(5)).is_zero());
    CHECK_THROWS_AS(log1p(TruncatedSeries(3)), lgw::input_error);
    // t-degree-0 terms other than the constant put the series outside the log domain
    CHECK_THROWS_AS(log1p(TruncatedSeries::one(3) + mono(1, 1, 1, 0, 0, 0, 3)), lgw::input_error);
}

TEST_CASE("log1p of the Fuss-Catalan series head") {
    // A_k = C(4k,k)/(3k+1): 1, 1, 4, 22, 140
    std::vector<Rational> a;
    for (unsigned long k = 0; k <= 4; ++k)
        a.push_back(Rational::binomial(4 * k, k) / Rational(static_cast<long>(3 * k + 1)));
    CHECK(a[1] == Rational(1));
    CHECK(a[2] == Rational(4));
    CHECK(a[3] == Rational(22));
    CHECK(a[4] == Rational(140));

    TruncatedSeries A3 = univariate({a[0], a[1], a[2], a[3]}, 3);
    TruncatedSeries L = log1p(A3);
    CHECK(univariate_coefficient(L, 1) == Rational(1));
    CHECK(univariate_coefficient(L, 2) == Rational(7, 2));
    CHECK(univariate_coefficient(L, 3) == Rational(55, 3));

    // cross-check every coefficient against the independent recursion oracle
    auto l = log_oracle(a);
    TruncatedSeries L4 = log1p(univariate(a, 4));
    for (int k = 1; k <= 4; ++k) CHECK(univariate_coefficient(L4, k) == l[k]);
}

TEST_CASE("exp: basics and the x^d coefficient of exp(2d log(1+x))") {
    CHECK(exp(TruncatedSeries(4)) == TruncatedSeries::one(4));

    TruncatedSeries g = mono(1, 1, 0, 3, 1, 1, 4);  // t1 t2 y^3
    CHECK(exp(log1p(TruncatedSeries::one(4) + g)) == TruncatedSeries::one(4) + g);

    int d = 3;
    TruncatedSeries one_plus_x = univariate({Rational(1), Rational(1)}, d);
    TruncatedSeries powd = exp(log1p(one_plus_x) * Rational(2 * d));
    CHECK(univariate_coefficient(powd, d) == Rational(20));  // C(6,3)

    CHECK_THROWS_AS(exp(TruncatedSeries::one(3)), lgw::input_error);
}

TEST_CASE("int_pow: geometric series, binomial theorem, unit cases") {
    TruncatedSeries f = TruncatedSeries::one(2) + mono(1, 1, 1, 0, 1, 0, 2);
    CHECK(int_pow(f, -1) ==
          TruncatedSeries::one(2) - mono(1, 1, 1, 0, 1, 0, 2) + mono(1, 1, 2, 0, 2, 0, 2));
    CHECK(int_pow(f, 0) == TruncatedSeries::one(2));

    TruncatedSeries g = TruncatedSeries::one(3) + mono(1, 1, 1, 3, 0, 1, 3);
    TruncatedSeries g3 = int_pow(g, 3);
    CHECK(g3.coefficient({1, 3, 0, 1}) == Rational(3));
    CHECK(g3.coefficient({2, 6, 0, 2}) == Rational(3));
    CHECK(g3.coefficient({3, 9, 0, 3}) == Rational(1));
    CHECK(g3.term_count() == 4);

    CHECK_THROWS_AS(int_pow(TruncatedSeries(2), -1), lgw::input_error);
}

TEST_CASE("coefficient access contract") {
    TruncatedSeries f = TruncatedSeries::one(2) + mono(1, 1, 0, 3, 1, 1, 2);
    CHECK(f.coefficient({0, 3, 1, 1}) == Rational(1));
    CHECK(f.coefficient({1, 0, 1, 0}) == Rational(0));
    CHECK_THROWS_AS(f.coefficient({0, 0, 2, 1}), lgw::input_error);
}

TEST_CASE("specialize_t merges t-exponents by total degree") {
    TruncatedSeries f = mono(1, 1, -1, 0, 1, 0, 3) + mono(1, 1, 1, 3, 0, 1, 3);
    TruncatedSeries s = specialize_t(f);
    CHECK(s.coefficient({-1, 0, 1, 0}) == Rational(1));
    CHECK(s.coefficient({1, 3, 1, 0}) == Rational(1));
    CHECK(specialize_t(mono(1, 1, 0, 3, 1, 1, 3)) == mono(1, 1, 0, 3, 2, 0, 3));
    CHECK(specialize_t(specialize_t(f)) == specialize_t(f));
    // colliding monomials add
    TruncatedSeries g = mono(1, 2, 0, 0, 1, 0, 2) + mono(1, 3, 0, 0, 0, 1, 2);
    CHECK(specialize_t(g) == mono(5, 6, 0, 0, 1, 0, 2));
}

TEST_CASE("ring axioms on randomized series") {
    std::mt19937_64 rng(91351);
    for (int trial = 0; trial < 40; ++trial) {
        int order = 3 + static_cast<int>(rng() % 3);
        TruncatedSeries f = random_series(rng, order, false);
        TruncatedSeries g = random_series(rng, order, false);
        TruncatedSeries h = random_series(rng, order, false);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        TruncatedSeries fg_h = f * g + h;
        for (const auto& [m, c] : fg_h.terms()) {
            CHECK(c.is_canonical());
            CHECK(m.tdeg() <= order);
        }
    }
}

TEST_CASE("exp/log round-trips on randomized series") {
    std::mt19937_64 rng(4507);
    for (int trial = 0; trial < 25; ++trial) {
        int order = 3 + static_cast<int>(rng() % 3);
        TruncatedSeries f = random_series(rng, order, true);   // constant term 1
        TruncatedSeries g = random_series(rng, order, false);  // constant term 0
        CHECK(exp(log1p(f)) == f);
        CHECK(log1p(exp(g)) == g);
    }
}

TEST_CASE("int_pow additivity for exponents in [-3,3]") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries f = random_series(rng, 4, true);
        for (long a = -3; a <= 3; ++a)
            for (long b = -3; b <= 3; ++b)
                CHECK(int_pow(f, a) * int_pow(f, b) == int_pow(f, a + b));
    }
}

TEST_CASE("equality compares at the common order") {
    TruncatedSeries f = TruncatedSeries::one(5) + mono(1, 1, 0, 0, 3, 0, 5);
    TruncatedSeries g = TruncatedSeries::one(2);
    CHECK(f == g);  // the t1^3 term is beyond order 2
    CHECK(f != g + mono(1, 1, 1, 0, 1, 0, 2));
}
