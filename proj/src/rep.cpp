#include "qybe/rep.hpp"
#include "qybe/rmatrix.hpp"

#include <sstream>

namespace qybe {

Spin parse_spin(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            int n = std::stoi(text);
            return Spin(2 * n);
        }
        int num = std::stoi(text.substr(0, slash));
        int den = std::stoi(text.substr(slash + 1));
        if (den != 2) throw ConfigError("spin denominator must be 2: " + text);
        return Spin(num);
    } catch (const std::invalid_argument&) {
        throw ConfigError("cannot parse spin: " + text);
    }
}

std::string spin_str(Spin s) {
    std::ostringstream os;
    if (s.twice % 2 == 0)
        os << s.twice / 2;
    else
        os << s.twice << "/2";
    return os.str();
}

Rep make_rep(Spin s) {
    const int d = s.dim();
    QMatrix xp(d, d), xm(d, d), qh(d, d), qhi(d, d);
    for (int i = 0; i < d; ++i) {
        Half k = Half(2 * i - s.twice);  // k = i - s
        if (i + 1 < d) {
            // sqrt([s-k][s+k+1])
            int a = (s.half() - k).as_int();
            int b = (s.half() + k + Half::of_int(1)).as_int();
            xp(i + 1, i) = sqrt_rational(qint(a) * qint(b));
        }
        if (i - 1 >= 0) {
            int a = (s.half() + k).as_int();
            int b = (s.half() - k + Half::of_int(1)).as_int();
            xm(i - 1, i) = sqrt_rational(qint(a) * qint(b));
        }
        qh(i, i) = qpow_q(k);
        qhi(i, i) = qpow_q(-k);
    }
    return Rep{s, xp, xm, qh, qhi};
}

QMatrix coproduct(const Rep& rep, Gen gen) {
    switch (gen) {
        case Gen::XPlus: return kronecker(rep.xplus, rep.qh_inv) + kronecker(rep.qh, rep.xplus);
        case Gen::XMinus: return kronecker(rep.xminus, rep.qh_inv) + kronecker(rep.qh, rep.xminus);
        case Gen::QH: return kronecker(rep.qh, rep.qh);
        case Gen::QHInv: return kronecker(rep.qh_inv, rep.qh_inv);
    }
    throw Error("unreachable");
}

QMatrix triple_action(const Rep& rep, Gen gen) {
    const QMatrix& qh = rep.qh;
    const QMatrix& qhi = rep.qh_inv;
    switch (gen) {
        case Gen::XPlus:
            return kronecker(kronecker(rep.xplus, qhi), qhi) + kronecker(kronecker(qh, rep.xplus), qhi) +
                   kronecker(kronecker(qh, qh), rep.xplus);
        case Gen::XMinus:
            return kronecker(kronecker(rep.xminus, qhi), qhi) + kronecker(kronecker(qh, rep.xminus), qhi) +
                   kronecker(kronecker(qh, qh), rep.xminus);
        case Gen::QH: return kronecker(kronecker(qh, qh), qh);
        case Gen::QHInv: return kronecker(kronecker(qhi, qhi), qhi);
    }
    throw Error("unreachable");
}

std::vector<std::size_t> weight_indices(Spin s, int fold, Half w) {
    const int d = s.dim();
    std::vector<std::size_t> out;
    std::size_t total = 1;
    for (int f = 0; f < fold; ++f) total *= d;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t t = idx;
        int tw = 0;
        for (int f = 0; f < fold; ++f) {
            int digit = static_cast<int>(t % d);
            t /= d;
            tw += 2 * digit - s.twice;
        }
        if (tw == w.tw) out.push_back(idx);
    }
    return out;
}

std::vector<std::vector<QScalar>> hw_space(const Rep& rep, int fold, Half weight) {
    if (fold != 2 && fold != 3) throw InvalidRange("fold must be 2 or 3");
    const Spin s = rep.spin;
    QMatrix X = fold == 2 ? coproduct(rep, Gen::XPlus) : triple_action(rep, Gen::XPlus);
    auto idx = weight_indices(s, fold, weight);
    auto idx_up = weight_indices(s, fold, weight + Half::of_int(1));
    if (idx.empty()) return {};
    QMatrix block(idx_up.size(), idx.size());
    for (std::size_t a = 0; a < idx_up.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) block(a, b) = X(idx_up[a], idx[b]);
    auto ker = kernel_basis(block);
    std::size_t dim_full = 1;
    for (int f = 0; f < fold; ++f) dim_full *= s.dim();
    std::vector<std::vector<QScalar>> out;
    for (auto& v : ker) {
        std::vector<QScalar> full(dim_full);
        for (std::size_t b = 0; b < idx.size(); ++b) full[idx[b]] = std::move(v[b]);
        out.push_back(std::move(full));
    }
    return out;
}

int floor_3s(Spin s) { return (3 * s.twice) / 2; }

std::vector<int> k_range(Spin s, int n) {
    if (n < 0 || n > floor_3s(s)) throw InvalidN("n out of 0..floor(3s)");
    std::vector<int> ks;
    if (n <= s.twice)
        for (int k = 0; k <= n; ++k) ks.push_back(k);
    else
        for (int k = n - s.twice; k <= 2 * s.twice - n; ++k) ks.push_back(k);
    return ks;
}

HWBasis wn_basis_pair(const Rep& rep, int n, int pair) {
    if (pair != 12 && pair != 23) throw InvalidRange("pair must be 12 or 23");
    const Spin s = rep.spin;
    auto ks = k_range(s, n);
    Half weight = Half(3 * s.twice - 2 * n);  // 3s - n
    auto hw = hw_space(rep, 3, weight);
    if (hw.size() != ks.size())
        throw Error("hw multiplicity mismatch at n=" + std::to_string(n));
    const auto& fam = projectors_cached(s);
    const std::size_t d = s.dim();
    const std::size_t d3 = d * d * d;
    HWBasis out{s, n, ks, {}};
    for (int k : ks) {
        const QMatrix& p2 = fam.p[k];
        QMatrix p3 = pair == 12 ? kronecker(p2, qidentity(d)) : kronecker(qidentity(d), p2);
        // image of the hw space under the projector is one-dimensional; any
        // nonzero projected basis vector spans it
        std::vector<QScalar> v;
        for (const auto& w : hw) {
            std::vector<QScalar> img(d3);
            bool nonzero = false;
            for (std::size_t i = 0; i < d3; ++i) {
                QScalar acc;
                for (std::size_t j = 0; j < d3; ++j) {
                    if (p3(i, j).is_zero() || w[j].is_zero()) continue;
                    acc = acc + p3(i, j) * w[j];
                }
                if (!acc.is_zero()) nonzero = true;
                img[i] = std::move(acc);
            }
            if (nonzero) {
                v = std::move(img);
                break;
            }
        }
        if (v.empty()) throw Error("projected hw vector vanished unexpectedly");
        // normalize: the squared norm is purely rational by construction
        QScalar norm2;
        for (const auto& c : v) norm2 = norm2 + c * c;
        if (!norm2.is_rational()) throw Error("hw vector norm^2 not rational");
        QScalar inv_norm = sqrt_rational(norm2).inverse();
        for (auto& c : v) c = inv_norm * c;
        // sign rule: first nonzero coordinate positive at the default numeric q
        for (const auto& c : v) {
            if (c.is_zero()) continue;
            if (c.eval_real(kDefaultQ) < 0)
                for (auto& cc : v) cc = -cc;
            break;
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

HWBasis wn_basis(const Rep& rep, int n) { return wn_basis_pair(rep, n, 12); }

}  // namespace qybe
