#include "qybe/rmatrix.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qybe {

QScalar xi(Spin s, int k) {
    if (k < 0 || k > s.twice) throw InvalidRange("xi: k out of 0..2s");
    Half two_s_minus_k = Half(2 * s.twice - 2 * k);
    QuarterExp e = rho(two_s_minus_k) - rho(s.half()) - rho(s.half());
    QScalar v = qpow(e);
    return k % 2 == 0 ? v : -v;
}

QScalar theta(Spin s, int n) {
    Half three_s_minus_n = Half(3 * s.twice - 2 * n);
    QuarterExp e = rho(three_s_minus_n) - rho(s.half()) - rho(s.half()) - rho(s.half());
    QScalar v = qpow(e);
    return n % 2 == 0 ? v : -v;
}

QMatrix permutation_matrix(std::size_t d) {
    QMatrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(j * d + i, i * d + j) = QScalar::one();
    return p;
}

QMatrix universal_r(Spin s, int sign) {
    if (sign != 1 && sign != -1) throw ConfigError("sign must be +-1");
    const Rep& rep = rep_cached(s);
    const std::size_t d = s.dim();
    const std::size_t d2 = d * d;
    QMatrix qhh(d2, d2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            long long tw1 = 2 * static_cast<long long>(i) - s.twice;
            long long tw2 = 2 * static_cast<long long>(j) - s.twice;
            // q^{sign k1 k2} = u^{sign tw1 tw2}
            qhh(i * d + j, i * d + j) = qpow(QuarterExp(sign * tw1 * tw2));
        }
    QScalar qm = qpow(QuarterExp(4)) - qpow(QuarterExp(-4));  // q - q^{-1}
    QMatrix x = sign > 0 ? qm * kronecker(rep.xminus, rep.xplus)
                         : (-qm) * kronecker(rep.xplus, rep.xminus);
    QMatrix series(d2, d2);
    QMatrix term = qidentity(d2);
    for (int n = 0; n <= s.twice; ++n) {
        if (n > 0) term = term * x;
        QScalar coef = qpow(QuarterExp(sign * 2LL * n * (n - 1)));  // q^{sign n(n-1)/2}
        coef = coef * QScalar(RationalFunction(LaurentPoly::one(), qfact_poly(n)));
        series = series + coef * term;
    }
    return qhh * series * qhh;
}

BraidOperator braid(Spin s) {
    QMatrix m = permutation_matrix(s.dim()) * universal_r(s, +1);
    std::vector<std::pair<int, QScalar>> spec;
    for (int k = 0; k <= s.twice; ++k) spec.emplace_back(k, xi(s, k));
    return BraidOperator{s, std::move(m), std::move(spec)};
}

ProjectorFamily projectors(Spin s) {
    const BraidOperator& rb = braid_cached(s);
    const std::size_t d2 = rb.matrix.rows();
    ProjectorFamily fam{s, {}};
    for (int k = 0; k <= s.twice; ++k) {
        QMatrix p = qidentity(d2);
        for (int j = 0; j <= s.twice; ++j) {
            if (j == k) continue;
            QScalar denom = xi(s, k) - xi(s, j);
            if (denom.is_zero()) throw DegenerateEigenvalues();
            QScalar c = denom.inverse();
            p = p * (rb.matrix - xi(s, j) * qidentity(d2));
            p = c * p;
        }
        fam.p.push_back(std::move(p));
    }
    return fam;
}

BraidOperator braid_inverse(Spin s) {
    const ProjectorFamily& fam = projectors_cached(s);
    const std::size_t d2 = fam.p[0].rows();
    QMatrix m(d2, d2);
    std::vector<std::pair<int, QScalar>> spec;
    for (int k = 0; k <= s.twice; ++k) {
        QScalar c = xi(s, k).inverse();
        m = m + c * fam.p[k];
        spec.emplace_back(k, c);
    }
    return BraidOperator{s, std::move(m), std::move(spec)};
}

QMatrix from_spectral(Spin s, const std::vector<QScalar>& r) {
    const ProjectorFamily& fam = projectors_cached(s);
    if (r.size() != fam.p.size()) throw InvalidRange("spectral vector length != 2s+1");
    QMatrix m(fam.p[0].rows(), fam.p[0].cols());
    for (std::size_t k = 0; k < r.size(); ++k) m = m + r[k] * fam.p[k];
    return m;
}

const Rep& rep_cached(Spin s) {
    static std::map<int, Rep> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s.twice);
    if (it == cache.end()) it = cache.emplace(s.twice, make_rep(s)).first;
    return it->second;
}

const BraidOperator& braid_cached(Spin s) {
    static std::map<int, BraidOperator> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(s.twice);
        if (it != cache.end()) return it->second;
    }
    BraidOperator b = braid(s);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(s.twice, std::move(b)).first->second;
}

const ProjectorFamily& projectors_cached(Spin s) {
    static std::map<int, ProjectorFamily> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(s.twice);
        if (it != cache.end()) return it->second;
    }
    ProjectorFamily f = projectors(s);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(s.twice, std::move(f)).first->second;
}

const HWBasis& wn_basis_cached(Spin s, int n, int pair) {
    static std::map<std::tuple<int, int, int>, HWBasis> cache;
    static std::mutex mu;
    auto key = std::make_tuple(s.twice, n, pair);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    HWBasis b = wn_basis_pair(rep_cached(s), n, pair);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(b)).first->second;
}

// --- numeric construction ------------------------------------------------------

namespace {

Real qint_num(int t, const Real& q) {
    if (t == 0) return Real(0);
    return (pow(q, t) - pow(q, -t)) / (q - 1 / q);
}

}  // namespace

RMatrix permutation_numeric(std::size_t d) {
    RMatrix p(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p(j * d + i, i * d + j) = Real(1);
    return p;
}

// P * pi^{ot2}(R^{sign}); sign=-1 gives the braid inverse
RMatrix braid_numeric(Spin s, const Real& q, int sign) {
    const std::size_t d = s.dim();
    const std::size_t d2 = d * d;
    RMatrix xp(d, d), xm(d, d);
    for (int i = 0; i < static_cast<int>(d); ++i) {
        int tw_k = 2 * i - s.twice;
        if (i + 1 < static_cast<int>(d)) {
            int a = (s.twice - tw_k) / 2;
            int b = (s.twice + tw_k + 2) / 2;
            xp(i + 1, i) = sqrt(qint_num(a, q) * qint_num(b, q));
        }
        if (i - 1 >= 0) {
            int a = (s.twice + tw_k) / 2;
            int b = (s.twice - tw_k + 2) / 2;
            xm(i - 1, i) = sqrt(qint_num(a, q) * qint_num(b, q));
        }
    }
    RMatrix qhh(d2, d2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Real k1 = Real(2 * static_cast<long long>(i) - s.twice) / 2;
            Real k2 = Real(2 * static_cast<long long>(j) - s.twice) / 2;
            qhh(i * d + j, i * d + j) = pow(q, Real(sign) * k1 * k2);
        }
    RMatrix x = sign > 0 ? kronecker(xm, xp) : kronecker(xp, xm);
    Real pref = (q - 1 / q) * Real(sign);
    x = pref * x;
    RMatrix series(d2, d2);
    RMatrix term = RMatrix::identity(d2, Real(1));
    Real fact = 1;
    for (int n = 0; n <= s.twice; ++n) {
        if (n > 0) {
            term = term * x;
            fact *= qint_num(n, q);
        }
        Real coef = pow(q, Real(sign) * Real(n * (n - 1)) / 2) / fact;
        series = series + coef * term;
    }
    return permutation_numeric(d) * (qhh * series * qhh);
}

}  // namespace qybe
