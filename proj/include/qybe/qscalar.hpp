#pragma once

#include "qybe/ratfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qybe {

// q-evaluation point for numeric mode
struct NumericValue {
    Real value{};
    Real q_point{};
    int precision_bits = kRealBits;
};

// coeff * sqrt(radicand); radicand canonical: d * f(u) with d a positive squarefree
// integer and f primitive integer squarefree, positive lead, min exponent in {0,1}.
// radicand == 1 means a purely rational term.
struct RadicalTerm {
    RationalFunction coeff;
    LaurentPoly radicand = LaurentPoly::one();
};

// Exact scalar: sum of radical terms with pairwise distinct radicands, sorted.
class QScalar {
  public:
    QScalar() = default;
    explicit QScalar(const Rational& c) {
        if (c != 0) terms_.push_back({RationalFunction(c), LaurentPoly::one()});
    }
    explicit QScalar(RationalFunction c) {
        if (!c.is_zero()) terms_.push_back({std::move(c), LaurentPoly::one()});
    }

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(Rational(1)); }
    // c * sqrt(rad) with rad an arbitrary Laurent poly (canonicalized here)
    static QScalar radical(const RationalFunction& c, const LaurentPoly& rad);

    const std::vector<RadicalTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].radicand.is_one());
    }
    bool is_single_term() const { return terms_.size() == 1; }

    // pre: is_rational()
    const RationalFunction& rational_part() const {
        static const RationalFunction kZero{};
        return terms_.empty() ? kZero : terms_[0].coeff;
    }

    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a) {
        QScalar r = a;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }
    friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend bool operator==(const QScalar& a, const QScalar& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].coeff == b.terms_[i].coeff) || !(a.terms_[i].radicand == b.terms_[i].radicand))
                return false;
        return true;
    }

    QScalar inverse() const;
    QScalar dual() const;  // q -> q^{-1}

    Real eval_real(const Real& q_point) const;
    NumericValue evaluate(const NumericValue& at) const {
        return NumericValue{eval_real(at.q_point), at.q_point, at.precision_bits};
    }

    std::string str() const;  // rendering in the q variable

  private:
    void insert_term(RadicalTerm t);
    std::vector<RadicalTerm> terms_;
};

inline QScalar operator*(const Rational& c, const QScalar& a) { return QScalar(c) * a; }

// --- constructors of the basic quantities ------------------------------------

// q-integer [t] = (q^t - q^{-t})/(q - q^{-1}) as a purely rational scalar
QScalar qint(int t);
// u^{e.e}, i.e. q^{e/4}
QScalar qpow(QuarterExp e);
inline QScalar qpow_q(Half t) { return qpow(QuarterExp::of_q(t)); }  // q^t
// [t]! as a Laurent polynomial (t >= 0)
const LaurentPoly& qfact_poly(int t);

// sqrt of a single-term purely rational scalar (used for norms)
QScalar sqrt_rational(const QScalar& a);

// rendering / parsing (round-trip stable)
QScalar parse_qscalar(const std::string& text);

}  // namespace qybe
