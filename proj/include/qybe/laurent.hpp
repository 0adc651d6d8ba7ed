#pragma once

#include "qybe/numbers.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qybe {

// Laurent polynomial in u = q^{1/4} with exact rational coefficients.
// Canonical: no stored zero coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (c != 0) coeffs_[0] = c;
    }
    static LaurentPoly monomial(const Rational& c, long long e) {
        LaurentPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
    }
    bool is_monomial() const { return coeffs_.size() == 1; }
    std::size_t term_count() const { return coeffs_.size(); }

    long long min_exp() const { return coeffs_.begin()->first; }   // pre: nonzero
    long long max_exp() const { return coeffs_.rbegin()->first; }  // pre: nonzero
    long long degree_span() const { return is_zero() ? -1 : max_exp() - min_exp(); }

    const Rational& leading() const { return coeffs_.rbegin()->second; }
    const Rational& trailing() const { return coeffs_.begin()->second; }
    Rational coeff(long long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<long long, Rational>& terms() const { return coeffs_; }

    void set(long long e, const Rational& c) {
        if (c == 0)
            coeffs_.erase(e);
        else
            coeffs_[e] = c;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) {
            auto it = r.coeffs_.find(e);
            if (it == r.coeffs_.end()) {
                r.coeffs_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) r.coeffs_.erase(it);
            }
        }
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& [e, c] : r.coeffs_) c = -c;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) {
                auto key = ea + eb;
                auto it = r.coeffs_.find(key);
                if (it == r.coeffs_.end()) {
                    r.coeffs_.emplace(key, ca * cb);
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.coeffs_.erase(it);
                }
            }
        return r;
    }
    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& a) {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, ca] : a.coeffs_) r.coeffs_.emplace(e, c * ca);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

    // total order for canonical term sorting
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ < b.coeffs_; }

    LaurentPoly shifted(long long d) const {  // multiply by u^d
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + d, c);
        return r;
    }

    // substitution u -> u^{-1}
    LaurentPoly dual() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(-e, c);
        return r;
    }

    LaurentPoly derivative() const {  // d/du
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_)
            if (e != 0) r.coeffs_.emplace(e - 1, Rational(e) * c);
        return r;
    }

    // gcd of integer numerators / lcm structure: content as a positive rational,
    // so that (*this) = content * primitive with integer coprime coefficients.
    Rational content() const {
        if (is_zero()) return Rational(0);
        Int g = 0, l = 1;
        for (const auto& [e, c] : coeffs_) {
            g = gcd(g, numerator(c));
            l = lcm(l, denominator(c));
        }
        if (g < 0) g = -g;
        return Rational(g, l);
    }

    Real eval(const Real& u) const {
        Real acc = 0;
        for (const auto& [e, c] : coeffs_) {
            acc += c.convert_to<Real>() * pow(u, static_cast<int>(e));
        }
        return acc;
    }

  private:
    std::map<long long, Rational> coeffs_;
};

// --- polynomial algebra on the shifted (ordinary) form ----------------------

// divide a by b (callers keep b shifted to min exponent 0): (quot, rem), max_exp(rem) < max_exp(b)
inline std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a, const LaurentPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    LaurentPoly q;
    long long db = b.max_exp();
    const Rational lb = b.leading();
    while (!a.is_zero() && a.max_exp() >= db) {
        long long e = a.max_exp() - db;
        Rational c = a.leading() / lb;
        LaurentPoly t = LaurentPoly::monomial(c, e);
        q = q + t;
        a = a - t * b;
        if (!a.is_zero() && a.max_exp() >= db + e) throw Error("poly_divmod: no progress");
    }
    return {q, a};
}

inline LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw Error("poly_divexact: remainder nonzero");
    return q;
}

// primitive part with positive leading coefficient, shifted to min exponent 0
inline LaurentPoly primitive_normal(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r = p.shifted(-p.min_exp());
    Rational c = r.content();
    if (r.leading() < 0) c = -c;
    return (Rational(1) / c) * r;
}

// gcd over Q[u] of the shifted forms; result primitive, positive lead, min exp 0.
inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_normal(b);
    if (b.is_zero()) return primitive_normal(a);
    a = primitive_normal(a);
    b = primitive_normal(b);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = b;
        b = r.is_zero() ? r : primitive_normal(r);
    }
    return primitive_normal(a);
}

// Yun's squarefree decomposition of a primitive, min-exp-0, positive-lead poly:
// p = prod_i f_i^i with the f_i squarefree and pairwise coprime.
inline std::vector<LaurentPoly> squarefree_decomposition(const LaurentPoly& p) {
    std::vector<LaurentPoly> out;  // out[i-1] = f_i
    if (p.is_zero() || p.degree_span() <= 0) return out;
    LaurentPoly d = p.derivative();
    LaurentPoly g = poly_gcd(p, d);
    if (g.degree_span() <= 0) {
        out.push_back(primitive_normal(p));
        return out;
    }
    LaurentPoly w = poly_divexact(p, g);
    LaurentPoly y = poly_divexact(d, g);
    LaurentPoly z = y - w.derivative();
    while (true) {
        if (w.degree_span() <= 0) break;
        LaurentPoly f = poly_gcd(w, z);
        out.push_back(f);
        w = poly_divexact(w, f);
        z = poly_divexact(z, f) - w.derivative();
    }
    return out;
}

}  // namespace qybe
