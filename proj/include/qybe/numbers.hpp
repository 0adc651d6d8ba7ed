#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace qybe {

namespace mp = boost::multiprecision;

using Int = mp::mpz_int;
using Rational = mp::mpq_rational;
using Real = mp::number<mp::cpp_bin_float<40>>;
using Complex = mp::cpp_complex<40>;

inline constexpr int kRealBits = 134;  // mantissa bits of Real

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NonInvertibleRadicalSum : Error {
    NonInvertibleRadicalSum() : Error("inverse of a multi-radicand sum is not representable") {}
};
struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& what) : Error("negative radicand: " + what) {}
};
struct InvalidN : Error {
    explicit InvalidN(const std::string& what) : Error("invalid n: " + what) {}
};
struct InvalidRange : Error {
    explicit InvalidRange(const std::string& what) : Error("invalid range: " + what) {}
};
struct DegenerateEigenvalues : Error {
    DegenerateEigenvalues() : Error("degenerate spectral coefficients") {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Half-integers (spins, weights, 6j arguments). Stored as twice the value.
struct Half {
    int tw = 0;

    Half() = default;
    explicit constexpr Half(int twice) : tw(twice) {}
    static constexpr Half of_int(int n) { return Half(2 * n); }

    bool is_integer() const { return tw % 2 == 0; }
    int as_int() const {
        if (!is_integer()) throw Error("half-integer where integer expected");
        return tw / 2;
    }
    double approx() const { return tw / 2.0; }

    friend Half operator+(Half a, Half b) { return Half(a.tw + b.tw); }
    friend Half operator-(Half a, Half b) { return Half(a.tw - b.tw); }
    friend Half operator-(Half a) { return Half(-a.tw); }
    friend Half operator*(int c, Half a) { return Half(c * a.tw); }
    friend auto operator<=>(Half, Half) = default;
};

inline Half abs(Half a) { return Half(a.tw < 0 ? -a.tw : a.tw); }

// (-1)^t for integer-valued t; throws if t is a genuine half-integer.
inline int parity_sign(Half t) {
    if (!t.is_integer()) throw Error("(-1)^t with half-integer t");
    return t.as_int() % 2 == 0 ? 1 : -1;
}

// Exponent of u = q^{1/4}; q^t for half-integer t is u^{4t}.
struct QuarterExp {
    long long e = 0;  // power of u
    explicit constexpr QuarterExp(long long ue) : e(ue) {}
    // q^t = u^{4t} = u^{2*tw}
    static QuarterExp of_q(Half t) { return QuarterExp(2LL * t.tw); }
    friend QuarterExp operator+(QuarterExp a, QuarterExp b) { return QuarterExp(a.e + b.e); }
    friend QuarterExp operator-(QuarterExp a, QuarterExp b) { return QuarterExp(a.e - b.e); }
    friend QuarterExp operator-(QuarterExp a) { return QuarterExp(-a.e); }
    friend bool operator==(QuarterExp, QuarterExp) = default;
};

// rho(t) = t(t+1) as a u-exponent: u^{4 t(t+1)} = q^{t(t+1)}; 4t(t+1) = tw(tw+2).
inline QuarterExp rho(Half t) { return QuarterExp(static_cast<long long>(t.tw) * (t.tw + 2)); }

}  // namespace qybe
