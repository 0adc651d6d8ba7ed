#pragma once

#include "qybe/matrix.hpp"

namespace qybe {

inline const Real kDefaultQ = Real(13) / 10;

struct Spin {
    int twice = 1;  // 2s
    explicit Spin(int tw) : twice(tw) {
        if (tw < 1) throw ConfigError("spin must satisfy 2s >= 1");
    }
    int dim() const { return twice + 1; }
    Half half() const { return Half(twice); }
    friend bool operator==(Spin, Spin) = default;
    friend bool operator<(Spin a, Spin b) { return a.twice < b.twice; }
};

// parse "1/2", "3/2", "2"
Spin parse_spin(const std::string& text);
std::string spin_str(Spin s);

enum class Gen { XPlus, XMinus, QH, QHInv };

struct Rep {
    Spin spin;
    QMatrix xplus, xminus, qh, qh_inv;
};

Rep make_rep(Spin s);

// pi^{ot 2}(Delta(gen)), tensor factors left-to-right, leftmost most significant
QMatrix coproduct(const Rep& rep, Gen gen);
// pi^{ot 3}((Delta ot id) Delta(gen))
QMatrix triple_action(const Rep& rep, Gen gen);

// indices of the tensor-power basis with total weight w (lexicographic order)
std::vector<std::size_t> weight_indices(Spin s, int fold, Half w);

// exact basis of highest-weight vectors of the given weight in V_s^{ot fold};
// empty when there are none
std::vector<std::vector<QScalar>> hw_space(const Rep& rep, int fold, Half weight);

// the ordered W_n basis: psi_k diagonalizing R_12 (pair=12) or the 23-coupled
// analogue (pair=23); sign rule: first nonzero coordinate positive at q=13/10
struct HWBasis {
    Spin spin;
    int n = 0;
    std::vector<int> ks;                         // k_range, ascending
    std::vector<std::vector<QScalar>> vectors;   // unit hw vectors, cube coordinates
};

std::vector<int> k_range(Spin s, int n);
int floor_3s(Spin s);

HWBasis wn_basis(const Rep& rep, int n);                 // pair = 12
HWBasis wn_basis_pair(const Rep& rep, int n, int pair);  // pair in {12, 23}

}  // namespace qybe
