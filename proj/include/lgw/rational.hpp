#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "lgw/errors.hpp"

namespace lgw {

// Arbitrary-precision rational, always kept in lowest terms with positive
// denominator. The canonical zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den) {
        if (den == 0) throw input_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses "p" or "p/q" with optional leading '-'.
    static Rational from_string(std::string_view s) {
        if (s.empty()) throw input_error("Rational: empty string");
        mpq_class q;
        if (q.set_str(std::string(s), 10) != 0)
            throw input_error("Rational: cannot parse '" + std::string(s) + "'");
        if (q.get_den() == 0) throw input_error("Rational: zero denominator in '" + std::string(s) + "'");
        q.canonicalize();
        return Rational(canonical_tag{}, q);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // "p" when integral, otherwise "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

    // Re-derives gcd(num,den) = 1 and den > 0 from scratch; used by the
    // canonicalization property checks.
    bool is_canonical() const {
        if (v_.get_den() <= 0) return false;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return g == 1;
    }

    long to_long() const {
        if (!is_integer()) throw input_error("Rational: " + str() + " is not an integer");
        if (!v_.get_num().fits_slong_p()) throw input_error("Rational: " + str() + " out of long range");
        return v_.get_num().get_si();
    }

    Rational operator-() const { return Rational(canonical_tag{}, mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw input_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    // Integer power; k < 0 requires a nonzero base.
    Rational pow(long k) const {
        if (k == 0) return Rational(1);
        if (is_zero() && k < 0) throw input_error("Rational: inverse of zero");
        mpq_class base = k > 0 ? v_ : mpq_class(1) / v_;
        unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
        mpq_class acc(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return Rational(canonical_tag{}, acc);
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), n, k);
        return Rational(r);
    }

    static Rational factorial(unsigned long n) {
        mpz_class r;
        mpz_fac_ui(r.get_mpz_t(), n);
        return Rational(r);
    }

  private:
    struct canonical_tag {};
    Rational(canonical_tag, mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;  // mpq_class arithmetic keeps canonical form
};

}  // namespace lgw
