#pragma once

#include "qybe/laurent.hpp"

namespace qybe {

// Reduced fraction of Laurent polynomials. Canonical: gcd(num, den) trivial,
// den has primitive integer coefficients, positive lead, min exponent 0.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(LaurentPoly::one()) {}
    explicit RationalFunction(const Rational& c) : num_(LaurentPoly(c)), den_(LaurentPoly::one()) {}
    explicit RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static RationalFunction monomial(const Rational& c, long long e) {
        return RationalFunction(LaurentPoly::monomial(c, e));
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return a + (-b);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_.is_one() && b.den_.is_one()) {
            RationalFunction r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }

    RationalFunction dual() const { return RationalFunction(num_.dual(), den_.dual()); }

    Real eval(const Real& u) const {
        Real d = den_.eval(u);
        if (d == 0) throw DivisionByZero();
        return num_.eval(u) / d;
    }

  private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero();
        if (num_.is_zero()) {
            den_ = LaurentPoly::one();
            return;
        }
        if (!den_.is_one()) {
            LaurentPoly g = poly_gcd(num_, den_);
            if (g.degree_span() > 0) {
                // gcd is of the shifted forms; align shifts before exact division
                num_ = poly_divexact(num_.shifted(-num_.min_exp()), g).shifted(num_.min_exp());
                den_ = poly_divexact(den_.shifted(-den_.min_exp()), g).shifted(den_.min_exp());
            }
        }
        // normalize denominator: min exp 0, primitive integer, positive lead
        long long sh = den_.min_exp();
        den_ = den_.shifted(-sh);
        num_ = num_.shifted(-sh);
        Rational c = den_.content();
        if (den_.leading() < 0) c = -c;
        if (c != 1) {
            den_ = (Rational(1) / c) * den_;
            num_ = (Rational(1) / c) * num_;
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace qybe
