#include "lgw/series.hpp"

#include <sstream>

namespace lgw {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw input_error("TruncatedSeries: negative order");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.insert_term(ZMonomial::unit(), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, const ZMonomial& m, int order) {
    if (m.p < 0 || m.q < 0) throw input_error("TruncatedSeries: negative t-exponent");
    TruncatedSeries s(order);
    if (m.tdeg() <= order) s.insert_term(m, c);
    return s;
}

void TruncatedSeries::insert_term(const ZMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool TruncatedSeries::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ZMonomial::unit() &&
           terms_.begin()->second.is_one();
}

Rational TruncatedSeries::constant_term() const {
    auto it = terms_.find(ZMonomial::unit());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coefficient(const ZMonomial& m) const {
    if (m.tdeg() > order_)
        throw input_error("TruncatedSeries: coefficient query at t-degree " +
                          std::to_string(m.tdeg()) + " beyond order " + std::to_string(order_));
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncatedSeries::unit_t_filtered() const {
    for (const auto& [m, c] : terms_)
        if (m.tdeg() == 0 && !(m == ZMonomial::unit())) return false;
    return true;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    TruncatedSeries r(new_order);
    for (const auto& [m, c] : terms_) {
        if (m.tdeg() > new_order) break;  // canonical order sorts by t-degree
        r.terms_.emplace(m, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::shifted(const ZMonomial& shift, const Rational& c) const {
    TruncatedSeries r(order_);
    for (const auto& [m, coef] : terms_) {
        ZMonomial n = m * shift;
        if (n.p < 0 || n.q < 0) throw input_error("TruncatedSeries: shift makes t-exponent negative");
        if (n.tdeg() <= order_) r.insert_term(n, coef * c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries r(std::min(f.order_, g.order_));
    for (const auto& [m, c] : f.terms_)
        if (m.tdeg() <= r.order_) r.insert_term(m, c);
    for (const auto& [m, c] : g.terms_)
        if (m.tdeg() <= r.order_) r.insert_term(m, c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return f + (-g); }

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries r(std::min(f.order_, g.order_));
    for (const auto& [mf, cf] : f.terms_) {
        if (mf.tdeg() > r.order_) break;
        for (const auto& [mg, cg] : g.terms_) {
            if (mf.tdeg() + mg.tdeg() > r.order_) break;
            r.insert_term(mf * mg, cf * cg);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries r(order_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    int n = std::min(f.order(), g.order());
    auto it = f.terms_.begin(), jt = g.terms_.begin();
    while (true) {
        while (it != f.terms_.end() && it->first.tdeg() > n) ++it;
        while (jt != g.terms_.end() && jt->first.tdeg() > n) ++jt;
        if (it == f.terms_.end() || jt == g.terms_.end())
            return it == f.terms_.end() && jt == g.terms_.end();
        if (!(it->first == jt->first) || it->second != jt->second) return false;
        ++it;
        ++jt;
    }
}

TruncatedSeries log1p(const TruncatedSeries& f) {
    if (!f.constant_term().is_one())
        throw input_error("log1p: constant term is " + f.constant_term().str() + ", expected 1");
    if (!f.unit_t_filtered())
        throw input_error("log1p: series has non-constant terms of t-degree 0");
    TruncatedSeries u = f - TruncatedSeries::one(f.order());
    TruncatedSeries acc(f.order());
    TruncatedSeries upow = TruncatedSeries::one(f.order());
    for (int k = 1; k <= f.order(); ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        Rational c(k % 2 == 1 ? 1 : -1, k);
        acc = acc + upow * c;
    }
    return acc;
}

TruncatedSeries exp(const TruncatedSeries& f) {
    if (!f.constant_term().is_zero())
        throw input_error("exp: constant term is " + f.constant_term().str() + ", expected 0");
    if (!f.unit_t_filtered())
        throw input_error("exp: series has non-constant terms of t-degree 0");
    TruncatedSeries acc = TruncatedSeries::one(f.order());
    TruncatedSeries fpow = TruncatedSeries::one(f.order());
    Rational inv_fact(1);
    for (int k = 1; k <= f.order(); ++k) {
        fpow = fpow * f;
        if (fpow.is_zero()) break;
        inv_fact /= Rational(k);
        acc = acc + fpow * inv_fact;
    }
    return acc;
}

TruncatedSeries int_pow(const TruncatedSeries& f, long k) {
    if (k == 0) return TruncatedSeries::one(f.order());
    TruncatedSeries base(f.order());
    if (k > 0) {
        base = f;
    } else {
        if (!f.constant_term().is_one())
            throw input_error("int_pow: negative exponent needs constant term 1, got " +
                              f.constant_term().str());
        if (!f.unit_t_filtered())
            throw input_error("int_pow: series has non-constant terms of t-degree 0");
        // geometric series for (1+u)^-1
        TruncatedSeries u = f - TruncatedSeries::one(f.order());
        TruncatedSeries inv = TruncatedSeries::one(f.order());
        TruncatedSeries upow = TruncatedSeries::one(f.order());
        for (int j = 1; j <= f.order(); ++j) {
            upow = upow * u;
            if (upow.is_zero()) break;
            inv = (j % 2 == 1) ? inv - upow : inv + upow;
        }
        base = inv;
    }
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    TruncatedSeries acc = TruncatedSeries::one(f.order());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

TruncatedSeries specialize_t(const TruncatedSeries& f) {
    TruncatedSeries r(f.order());
    for (const auto& [m, c] : f.terms_) r.insert_term({m.a, m.b, m.p + m.q, 0}, c);
    return r;
}

TruncatedSeries univariate(const std::vector<Rational>& coeffs, int order) {
    TruncatedSeries s(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        int d = static_cast<int>(k);
        if (d > order) break;
        s = s + TruncatedSeries::monomial(coeffs[k], {d, 0, d, 0}, order);
    }
    return s;
}

Rational univariate_coefficient(const TruncatedSeries& f, int k) {
    return f.coefficient({k, 0, k, 0});
}

std::string TruncatedSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.a) os << "*x^" << m.a;
        if (m.b) os << "*y^" << m.b;
        if (m.p) os << "*t1^" << m.p;
        if (m.q) os << "*t2^" << m.q;
    }
    return os.str();
}

}  // namespace lgw
