#pragma once

#include <map>
#include <vector>

#include "lgw/rational.hpp"

namespace lgw {

// Monomial x^a y^b t1^p t2^q. The z-exponents (a,b) are Laurent (may be
// negative); the deformation exponents (p,q) are non-negative and the series
// ring is filtered by the total t-degree p+q.
struct ZMonomial {
    int a = 0;
    int b = 0;
    int p = 0;
    int q = 0;

    int tdeg() const { return p + q; }

    friend bool operator==(const ZMonomial&, const ZMonomial&) = default;

    static ZMonomial unit() { return {}; }
    static ZMonomial x() { return {1, 0, 0, 0}; }
    static ZMonomial y() { return {0, 1, 0, 0}; }

    ZMonomial operator*(const ZMonomial& o) const { return {a + o.a, b + o.b, p + o.p, q + o.q}; }
};

// Canonical term order: total t-degree first, then lexicographic on
// (p, q, a, b). All serialization iterates in this order.
struct ZMonomialLess {
    bool operator()(const ZMonomial& l, const ZMonomial& r) const {
        if (l.tdeg() != r.tdeg()) return l.tdeg() < r.tdeg();
        if (l.p != r.p) return l.p < r.p;
        if (l.q != r.q) return l.q < r.q;
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }
};

// Formal Laurent series in x, y with rational coefficients, truncated at a
// fixed total t-degree. Immutable value semantics: every operation returns a
// new series. Zero coefficients are never stored.
class TruncatedSeries {
  public:
    using TermMap = std::map<ZMonomial, Rational, ZMonomialLess>;

    explicit TruncatedSeries(int order);

    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries one(int order) { return constant(Rational(1), order); }
    static TruncatedSeries monomial(const Rational& c, const ZMonomial& m, int order);

    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    Rational constant_term() const;
    // Stored coefficient or 0; querying beyond the truncation order is an error.
    Rational coefficient(const ZMonomial& m) const;

    // True when every non-constant term has t-degree >= 1, i.e. the series is
    // congruent to its constant term mod (t1,t2). log/exp/inverse require this.
    bool unit_t_filtered() const;

    TruncatedSeries truncated(int new_order) const;

    // Multiplication by a single monomial (used for x^-1-shifts).
    TruncatedSeries shifted(const ZMonomial& m, const Rational& c = Rational(1)) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    TruncatedSeries operator*(const Rational& c) const;

    // Series are compared at the common truncation order.
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);
    friend bool operator!=(const TruncatedSeries& f, const TruncatedSeries& g) { return !(f == g); }

    std::string str() const;

  private:
    void insert_term(const ZMonomial& m, const Rational& c);

    int order_;
    TermMap terms_;

    friend TruncatedSeries log1p(const TruncatedSeries&);
    friend TruncatedSeries exp(const TruncatedSeries&);
    friend TruncatedSeries int_pow(const TruncatedSeries&, long);
    friend TruncatedSeries specialize_t(const TruncatedSeries&);
};

// log of a series with constant term 1: sum_{k>=1} (-1)^{k-1} (f-1)^k / k.
TruncatedSeries log1p(const TruncatedSeries& f);

// exp of a series with constant term 0: sum_{k>=0} f^k / k!.
TruncatedSeries exp(const TruncatedSeries& f);

// f^k for integer k; k < 0 requires constant term 1.
TruncatedSeries int_pow(const TruncatedSeries& f, long k);

// Sets t1 = t2 = t: merges (p,q) into (p+q,0), adding colliding coefficients.
TruncatedSeries specialize_t(const TruncatedSeries& f);

// Single-variable embedding: sum_k c_k x^k with x^k carried as z-exponent
// (k,0) and t-exponent (k,0), so t-truncation tracks x-degree.
TruncatedSeries univariate(const std::vector<Rational>& coeffs, int order);
Rational univariate_coefficient(const TruncatedSeries& f, int k);

}  // namespace lgw
