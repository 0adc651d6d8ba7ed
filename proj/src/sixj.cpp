#include "qybe/sixj.hpp"

#include <algorithm>
#include <map>
#include <shared_mutex>

namespace qybe {

bool triad_ok(Half a, Half b, Half c) {
    if ((a + b - c).tw < 0 || (a - b + c).tw < 0 || (-a + b + c).tw < 0) return false;
    return (a + b + c).is_integer();
}

namespace {

// Delta^2(a,b,c) = [a+b-c]! [a-b+c]! [-a+b+c]! / [a+b+c+1]!  (exact rational function)
RationalFunction delta_sq(Half a, Half b, Half c) {
    LaurentPoly num = qfact_poly((a + b - c).as_int()) * qfact_poly((a - b + c).as_int()) *
                      qfact_poly((-a + b + c).as_int());
    LaurentPoly den = qfact_poly((a + b + c).as_int() + 1);
    return RationalFunction(num, den);
}

QScalar qsixj_compute(const SixJArgs& a) {
    const Half j1 = a.j[0], j2 = a.j[1], j3 = a.j[2], j4 = a.j[3], j5 = a.j[4], j6 = a.j[5];
    if (!triad_ok(j1, j2, j3) || !triad_ok(j1, j5, j6) || !triad_ok(j4, j2, j6) || !triad_ok(j4, j5, j3))
        return QScalar();
    RationalFunction pref =
        delta_sq(j1, j2, j3) * delta_sq(j1, j5, j6) * delta_sq(j4, j2, j6) * delta_sq(j4, j5, j3);
    // z-sum over integers between the triad sums and the pair sums
    Half s1 = j1 + j2 + j3, s2 = j1 + j5 + j6, s3 = j4 + j2 + j6, s4 = j4 + j5 + j3;
    Half p1 = j1 + j2 + j4 + j5, p2 = j2 + j3 + j5 + j6, p3 = j3 + j1 + j6 + j4;
    int zmin = std::max({s1.as_int(), s2.as_int(), s3.as_int(), s4.as_int()});
    int zmax = std::min({p1.as_int(), p2.as_int(), p3.as_int()});
    RationalFunction total;
    for (int z = zmin; z <= zmax; ++z) {
        LaurentPoly den = qfact_poly(z - s1.as_int()) * qfact_poly(z - s2.as_int()) *
                          qfact_poly(z - s3.as_int()) * qfact_poly(z - s4.as_int()) *
                          qfact_poly(p1.as_int() - z) * qfact_poly(p2.as_int() - z) *
                          qfact_poly(p3.as_int() - z);
        RationalFunction term(qfact_poly(z + 1), den);
        total = (z % 2 == 0) ? total + term : total - term;
    }
    // sqrt(pref) * total, rationalized: sqrt(n/d) = sqrt(n d)/d
    QScalar root = QScalar::radical(RationalFunction(LaurentPoly::one(), pref.den()), pref.num() * pref.den());
    return QScalar(total) * root;
}

}  // namespace

QScalar qsixj(const SixJArgs& args) {
    static std::map<std::array<int, 6>, QScalar> cache;
    static std::shared_mutex mu;
    std::array<int, 6> key;
    for (int i = 0; i < 6; ++i) key[i] = args.j[i].tw;
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QScalar v = qsixj_compute(args);
    std::unique_lock lock(mu);
    return cache.emplace(key, std::move(v)).first->second;
}

AMatrix a_matrix(Spin s, int n) {
    auto ks = k_range(s, n);  // throws InvalidN
    const std::size_t m = ks.size();
    QMatrix e(m, m);
    const Half sh = s.half();
    const Half target = Half(3 * s.twice - 2 * n);  // 3s - n
    int sign = parity_sign(Half(2 * s.twice - 2 * n));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Half lk = Half(2 * (s.twice - ks[i]));   // 2s - k
            Half lkp = Half(2 * (s.twice - ks[j]));  // 2s - k'
            QScalar w = sqrt_rational(qint(2 * (s.twice - ks[i]) + 1) * qint(2 * (s.twice - ks[j]) + 1));
            QScalar v = w * frw(sh, sh, sh, target, lk, lkp);
            e(i, j) = sign > 0 ? v : -v;
        }
    }
    return AMatrix{s, n, std::move(ks), std::move(e)};
}

AMatrix a_matrix_from_basis(Spin s, int n) {
    const HWBasis& b12 = wn_basis_cached(s, n, 12);
    const HWBasis& b23 = wn_basis_cached(s, n, 23);
    const std::size_t m = b12.vectors.size();
    QMatrix e(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            QScalar dot;
            for (std::size_t c = 0; c < b12.vectors[i].size(); ++c) {
                if (b12.vectors[i][c].is_zero() || b23.vectors[j][c].is_zero()) continue;
                dot = dot + b12.vectors[i][c] * b23.vectors[j][c];
            }
            e(i, j) = std::move(dot);
        }
    return AMatrix{s, n, b12.ks, std::move(e)};
}

const AMatrix& a_matrix_cached(Spin s, int n) {
    static std::map<std::pair<int, int>, AMatrix> cache;
    static std::shared_mutex mu;
    auto key = std::make_pair(s.twice, n);
    {
        std::shared_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    AMatrix m = a_matrix(s, n);
    std::unique_lock lock(mu);
    return cache.emplace(key, std::move(m)).first->second;
}

bool racah_admissible(Half r1, Half r2, Half r3, Half r4, Half l, Half lp) {
    // the four triads of the RHS symbol cover the p-independent triads of both
    // LHS symbols; integral p-support needs r2 + r3 (= parity of l + l') integral
    if (!triad_ok(r3, r1, l) || !triad_ok(r3, r4, lp) || !triad_ok(r2, r1, lp) || !triad_ok(r2, r4, l))
        return false;
    return (r2 + r3).is_integer();
}

QScalar racah_identity_check(Half r1, Half r2, Half r3, Half r4, Half l, Half lp, int rho_sign) {
    auto rho_s = [&](Half t) {
        QuarterExp e = rho(t);
        return rho_sign > 0 ? e : -e;
    };
    Half pmin = std::max(abs(r2 - r3), abs(r1 - r4));
    Half pmax = std::min(r2 + r3, r1 + r4);
    QScalar lhs;
    for (Half p = pmin; p <= pmax; p = p + Half::of_int(1)) {
        QScalar t1 = frw(r1, r2, r3, r4, l, p);
        if (t1.is_zero()) continue;
        QScalar t2 = frw(r1, r3, r2, r4, lp, p);
        if (t2.is_zero()) continue;
        QScalar term = qint(2 * p.as_int() + 1) * t1 * t2 * qpow(rho_s(p) - rho_s(r1) - rho_s(r4));
        lhs = parity_sign(p) > 0 ? lhs + term : lhs - term;
    }
    QScalar rhs = frw(r3, r2, r1, r4, l, lp) * qpow(rho_s(r2) - rho_s(l) + rho_s(r3) - rho_s(lp));
    if (parity_sign(l + lp) < 0) rhs = -rhs;
    return lhs - rhs;
}

QScalar entrywise_lemma1(Spin s, int n, int k, int kp) {
    const AMatrix& a = a_matrix_cached(s, n);
    auto pos = [&](int kk) {
        auto it = std::find(a.ks.begin(), a.ks.end(), kk);
        if (it == a.ks.end()) throw InvalidRange("k outside k_range");
        return static_cast<std::size_t>(it - a.ks.begin());
    };
    std::size_t ik = pos(k), ikp = pos(kp);
    QScalar lhs;
    for (std::size_t im = 0; im < a.ks.size(); ++im) {
        int m = a.ks[im];
        // (-1)^m q^{rho(2s-m)-2rho(s)} A_{km} A_{k'm}
        QScalar term = a.entries(ik, im) * a.entries(ikp, im) *
                       qpow(rho(Half(2 * (s.twice - m))) - rho(s.half()) - rho(s.half()));
        lhs = (m % 2 == 0) ? lhs + term : lhs - term;
    }
    QuarterExp e = rho(Half(3 * s.twice - 2 * n)) + rho(s.half()) - rho(Half(2 * (s.twice - k))) -
                   rho(Half(2 * (s.twice - kp)));
    QScalar rhs = qpow(e) * a.entries(ik, ikp);
    if ((n + k + kp) % 2 != 0) rhs = -rhs;
    return lhs - rhs;
}

}  // namespace qybe
