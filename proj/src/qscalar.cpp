#include "qybe/qscalar.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <mutex>
#include <sstream>

namespace qybe {

namespace {

const std::vector<int>& small_primes() {
    static const std::vector<int> primes = [] {
        std::vector<int> ps;
        constexpr int kLimit = 1 << 16;
        std::vector<bool> sieve(kLimit, true);
        for (int i = 2; i < kLimit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (long long j = static_cast<long long>(i) * i; j < kLimit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

// n = m^2 * d with d squarefree (trial division below 2^16, then perfect-square
// detection; an unfactored squarefree-unknown remainder stays in d).
void split_square(const Int& n, Int& m, Int& d) {
    m = 1;
    d = 1;
    Int rest = n;
    for (int p : small_primes()) {
        if (rest == 1) break;
        if (Int(p) * p > rest) break;
        int cnt = 0;
        while (rest % p == 0) {
            rest /= p;
            ++cnt;
        }
        for (int i = 0; i < cnt / 2; ++i) m *= p;
        if (cnt % 2) d *= p;
    }
    if (rest > 1) {
        Int r = sqrt(rest);
        if (r * r == rest)
            m *= r;
        else
            d *= rest;
    }
}

// sqrt(c) for positive rational c: returns (rat, d) with sqrt(c) = rat * sqrt(d)
void split_square_rational(const Rational& c, Rational& rat, Int& d) {
    Int pq = numerator(c) * denominator(c);
    Int m;
    split_square(pq, m, d);
    rat = Rational(m, denominator(c));
}

}  // namespace

// canonicalize sqrt(rad): returns factor * sqrt(canonical_radicand)
QScalar QScalar::radical(const RationalFunction& c, const LaurentPoly& rad) {
    if (c.is_zero() || rad.is_zero()) return QScalar();
    // rationalize: sqrt(num/den) = sqrt(num*den)/den
    LaurentPoly r = rad;
    RationalFunction factor = c;
    // (radicands entering here are polynomials; rationalization happens at call sites)
    long long e = r.min_exp();
    long long half = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    r = r.shifted(-2 * half);
    factor = factor * RationalFunction::monomial(Rational(1), half);
    // content
    Rational cont = r.content();
    if (r.leading() < 0) throw NegativeRadicand("leading coefficient negative");
    LaurentPoly prim = (Rational(1) / cont) * r;
    // squarefree split of the primitive part
    LaurentPoly rad_poly = LaurentPoly::one();
    LaurentPoly outside = LaurentPoly::one();
    if (prim.degree_span() > 0) {
        auto sf = squarefree_decomposition(prim.shifted(-prim.min_exp()));
        long long inner_shift = prim.min_exp();  // even after the extraction above? may be 0 or 1
        for (std::size_t i = 0; i < sf.size(); ++i) {
            int mult = static_cast<int>(i) + 1;
            for (int j = 0; j < mult / 2; ++j) outside = outside * sf[i];
            if (mult % 2) rad_poly = rad_poly * sf[i];
        }
        if (inner_shift != 0) rad_poly = rad_poly.shifted(inner_shift);  // inner_shift in {0,1}
    } else if (!prim.is_zero() && prim.min_exp() != 0) {
        rad_poly = rad_poly.shifted(prim.min_exp());
    }
    // rational content: cont = (m/den)^2 * d
    Rational m;
    Int d;
    split_square_rational(cont, m, d);
    LaurentPoly final_rad = Rational(d) * rad_poly;
    factor = factor * RationalFunction(m * Rational(1)) * RationalFunction(outside);
    QScalar out;
    if (final_rad.is_one()) {
        out = QScalar(factor);
    } else if (!factor.is_zero()) {
        out.terms_.push_back({factor, final_rad});
    }
    return out;
}

void QScalar::insert_term(RadicalTerm t) {
    if (t.coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t.radicand,
                               [](const RadicalTerm& a, const LaurentPoly& r) { return a.radicand < r; });
    if (it != terms_.end() && it->radicand == t.radicand) {
        it->coeff = it->coeff + t.coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    QScalar r = a;
    for (const auto& t : b.terms_) r.insert_term(t);
    return r;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    QScalar r;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            RationalFunction c = ta.coeff * tb.coeff;
            if (ta.radicand.is_one()) {
                r.insert_term({c, tb.radicand});
                continue;
            }
            if (tb.radicand.is_one()) {
                r.insert_term({c, ta.radicand});
                continue;
            }
            if (ta.radicand == tb.radicand) {
                r.insert_term({c * RationalFunction(ta.radicand), LaurentPoly::one()});
                continue;
            }
            // sqrt(r1) sqrt(r2) = g * sqrt((r1/g)(r2/g)); both radicands canonical,
            // so apart from the integer contents the cofactors are coprime squarefree.
            Rational c1 = ta.radicand.content();
            Rational c2 = tb.radicand.content();
            Int d1 = numerator(c1), d2 = numerator(c2);
            LaurentPoly p1 = (Rational(1) / c1) * ta.radicand;
            LaurentPoly p2 = (Rational(1) / c2) * tb.radicand;
            long long sh1 = p1.min_exp(), sh2 = p2.min_exp();
            LaurentPoly g = poly_gcd(p1, p2);
            LaurentPoly q1 = poly_divexact(p1.shifted(-sh1), g);
            LaurentPoly q2 = poly_divexact(p2.shifted(-sh2), g);
            Int dg = gcd(d1, d2);
            Int dd = (d1 / dg) * (d2 / dg);
            long long shift_total = sh1 + sh2;  // each in {0,1}
            LaurentPoly rad = (Rational(dd) * (q1 * q2)).shifted(shift_total % 2);
            RationalFunction factor =
                c * RationalFunction(Rational(dg) * g) *
                RationalFunction::monomial(Rational(1), shift_total / 2);
            if (rad.is_one())
                r.insert_term({factor, LaurentPoly::one()});
            else
                r.insert_term({factor, rad});
        }
    }
    return r;
}

QScalar QScalar::inverse() const {
    if (terms_.empty()) throw DivisionByZero();
    if (terms_.size() > 1) throw NonInvertibleRadicalSum();
    const RadicalTerm& t = terms_[0];
    // (c sqrt(r))^{-1} = (1/(c r)) sqrt(r)
    QScalar out;
    RationalFunction c = (t.coeff * RationalFunction(t.radicand)).inverse();
    if (t.radicand.is_one())
        out = QScalar(c);
    else
        out.terms_.push_back({c, t.radicand});
    return out;
}

QScalar QScalar::dual() const {
    QScalar out;
    for (const auto& t : terms_) {
        QScalar piece = QScalar::radical(t.coeff.dual(), t.radicand.dual());
        out = out + piece;
    }
    return out;
}

Real QScalar::eval_real(const Real& q_point) const {
    if (q_point <= 0 || q_point == 1) throw ConfigError("q_point must be positive and != 1");
    Real u = pow(q_point, Real(1) / 4);
    Real acc = 0;
    for (const auto& t : terms_) {
        Real rv = t.radicand.eval(u);
        if (rv < 0) throw NegativeRadicand("radicand negative at q=" + q_point.str());
        acc += t.coeff.eval(u) * sqrt(rv);
    }
    return acc;
}

QScalar qint(int t) {
    if (t == 0) return QScalar();
    if (t < 0) return -qint(-t);
    // [t] = u^{4(t-1)} + u^{4(t-3)} + ... + u^{-4(t-1)}
    LaurentPoly p;
    for (int j = 0; j < t; ++j) p.set(4LL * (t - 1 - 2 * j), Rational(1));
    return QScalar(RationalFunction(p));
}

QScalar qpow(QuarterExp e) { return QScalar(RationalFunction::monomial(Rational(1), e.e)); }

const LaurentPoly& qfact_poly(int t) {
    static std::vector<LaurentPoly> cache{LaurentPoly::one()};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= t) {
        int n = static_cast<int>(cache.size());
        LaurentPoly qi;
        for (int j = 0; j < n; ++j) qi.set(4LL * (n - 1 - 2 * j), Rational(1));
        cache.push_back(cache.back() * qi);
    }
    return cache[t];
}

QScalar sqrt_rational(const QScalar& a) {
    if (a.is_zero()) return a;
    if (!a.is_rational()) throw Error("sqrt of a non-rational scalar");
    const RationalFunction& c = a.rational_part();
    // sqrt(num/den) = sqrt(num*den)/den
    return QScalar::radical(RationalFunction(LaurentPoly::one(), c.den()), c.num() * c.den());
}

// --- rendering ---------------------------------------------------------------

namespace {

std::string rational_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

// one monomial c*q^(e/4); `lead` suppresses an explicit '+'
void render_monomial(std::ostream& os, const Rational& c, long long ue, bool lead) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (!lead)
        os << (c < 0 ? " - " : " + ");
    else if (c < 0)
        os << "-";
    if (ue == 0) {
        os << rational_str(ac);
        return;
    }
    if (ac != 1) os << rational_str(ac) << "*";
    os << "q";
    if (ue == 4) return;
    if (ue % 4 == 0)
        os << "^" << (ue / 4);
    else {
        long long num = ue, den = 4;
        if (num % 2 == 0) {
            num /= 2;
            den = 2;
        }
        os << "^(" << num << "/" << den << ")";
    }
}

void render_poly(std::ostream& os, const LaurentPoly& p) {
    if (p.is_zero()) {
        os << "0";
        return;
    }
    bool lead = true;
    // descending exponents
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        render_monomial(os, it->second, it->first, lead);
        lead = false;
    }
}

void render_ratfun(std::ostream& os, const RationalFunction& f, bool parenthesize_products) {
    if (f.den().is_one()) {
        bool simple = f.num().is_monomial();
        if (parenthesize_products && !simple) {
            os << "(";
            render_poly(os, f.num());
            os << ")";
        } else {
            render_poly(os, f.num());
        }
        return;
    }
    os << "(";
    render_poly(os, f.num());
    os << ")/(";
    render_poly(os, f.den());
    os << ")";
}

}  // namespace

std::string QScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        // pull the sign out of single-monomial numerators so terms join as "a - b"
        bool neg = t.coeff.num().is_monomial() && t.coeff.num().leading() < 0;
        RationalFunction c = neg ? -t.coeff : t.coeff;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (t.radicand.is_one()) {
            render_ratfun(os, c, false);
        } else {
            render_ratfun(os, c, true);
            os << "*sqrt(";
            render_poly(os, t.radicand);
            os << ")";
        }
    }
    return os.str();
}

// --- parsing (grammar limited to what the renderer emits) ---------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw Error(std::string("parse error: expected '") + c + "' at " + std::to_string(pos));
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    Int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw Error("parse error: integer expected at " + std::to_string(pos));
        return Int(s.substr(start, pos - start));
    }

    Rational parse_rational() {
        Int n = parse_int();
        if (peek('/')) {
            // only inside exponents / coefficients: a/b
            ++pos;
            Int d = parse_int();
            return Rational(n, d);
        }
        return Rational(n);
    }

    // q-exponent as u-exponent: 'q' ['^' (int | '(' frac ')')]
    long long parse_q_exponent() {
        if (!eat('q')) throw Error("parse error: 'q' expected");
        if (!peek('^')) return 4;
        ++pos;
        skip_ws();
        Rational ex;
        if (peek('(')) {
            ++pos;
            ex = parse_rational();
            expect(')');
        } else {
            ex = Rational(parse_int());
        }
        Rational ue = ex * 4;
        if (denominator(ue) != 1) throw Error("parse error: exponent not a quarter integer");
        return numerator(ue).convert_to<long long>();
    }

    // monomial := ['-'] [rational ['*']] ['q' ...]
    void parse_monomial(LaurentPoly& acc, int sign) {
        skip_ws();
        Rational c(sign);
        bool have_num = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = c * parse_rational();
            have_num = true;
        }
        if (peek('*')) {
            ++pos;
            skip_ws();
        }
        if (peek('q')) {
            long long ue = parse_q_exponent();
            acc.set(ue, acc.coeff(ue) + c);
        } else {
            if (!have_num) throw Error("parse error: monomial expected at " + std::to_string(pos));
            acc.set(0, acc.coeff(0) + c);
        }
    }

    LaurentPoly parse_poly() {
        LaurentPoly p;
        int sign = 1;
        skip_ws();
        if (peek('-')) {
            ++pos;
            sign = -1;
        } else if (peek('+')) {
            ++pos;
        }
        parse_monomial(p, sign);
        while (true) {
            skip_ws();
            if (peek('+')) {
                ++pos;
                parse_monomial(p, 1);
            } else if (peek('-')) {
                ++pos;
                parse_monomial(p, -1);
            } else {
                break;
            }
        }
        return p;
    }

    // term := coeff ['*sqrt(' poly ')']; coeff := '('poly')' ['/(' poly ')'] | poly-monomial-seq
    QScalar parse_term(int sign) {
        LaurentPoly num, den = LaurentPoly::one();
        bool parenthesized = false;
        if (peek('(')) {
            ++pos;
            num = parse_poly();
            expect(')');
            parenthesized = true;
            if (peek('/')) {
                ++pos;
                expect('(');
                den = parse_poly();
                expect(')');
            }
        } else {
            num = parse_poly_until_sqrt_or_term_end();
        }
        (void)parenthesized;
        RationalFunction coeff(Rational(sign) * num, den);
        if (peek('*')) {
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (s.compare(pos, 5, "sqrt(") == 0) {
                pos += 5;
                LaurentPoly rad = parse_poly();
                expect(')');
                return QScalar::radical(coeff, rad);
            }
            pos = save;
        }
        if (s.compare(pos, 5, "sqrt(") == 0) {
            pos += 5;
            LaurentPoly rad = parse_poly();
            expect(')');
            return QScalar::radical(coeff, rad);
        }
        return QScalar(coeff);
    }

    // a bare (unparenthesized) coefficient is a single monomial in renderer output
    LaurentPoly parse_poly_until_sqrt_or_term_end() {
        LaurentPoly p;
        parse_monomial(p, 1);
        return p;
    }

    QScalar parse() {
        QScalar out;
        skip_ws();
        int sign = 1;
        if (peek('-')) {
            ++pos;
            sign = -1;
        }
        out = out + parse_term(sign);
        while (!at_end()) {
            skip_ws();
            if (peek('+')) {
                ++pos;
                out = out + parse_term(1);
            } else if (peek('-')) {
                ++pos;
                out = out + parse_term(-1);
            } else {
                throw Error("parse error: trailing input at " + std::to_string(pos));
            }
        }
        return out;
    }
};

}  // namespace

QScalar parse_qscalar(const std::string& text) {
    Parser p(text);
    return p.parse();
}

}  // namespace qybe
