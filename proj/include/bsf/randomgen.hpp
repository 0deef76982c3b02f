#ifndef BSF_RANDOMGEN_HPP
#define BSF_RANDOMGEN_HPP

#include <random>

#include "bsf/fiedler.hpp"
#include "bsf/matpoly.hpp"
#include "bsf/tuples.hpp"

namespace bsf {

// All randomness in the library flows through one explicitly seeded PRNG;
// identical seeds give identical draws.
using Rng = std::mt19937_64;

inline Matrix<Rat> random_int_matrix(Rng& rng, int rows, int cols, long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(dist(rng));
    return m;
}

inline Matrix<Rat> random_rat_matrix(Rng& rng, int rows, int cols) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    Matrix<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = make_rat(num(rng), den(rng));
    return m;
}

inline Matrix<Rat> random_nonsingular_matrix(Rng& rng, int n, long lo = -5, long hi = 5) {
    for (;;) {
        Matrix<Rat> m = random_int_matrix(rng, n, n, lo, hi);
        if (m.is_nonsingular()) return m;
    }
}

// Random integer-coefficient polynomial of exact grade k; leading and/or
// trailing coefficients can be forced nonsingular.
inline MatrixPolynomial<Rat> random_poly(Rng& rng, int n, int k, bool a0_nonsingular = false,
                                         bool ak_nonsingular = false) {
    std::vector<Matrix<Rat>> coeffs;
    for (int i = 0; i <= k; ++i) coeffs.push_back(random_int_matrix(rng, n, n));
    if (a0_nonsingular) coeffs[0] = random_nonsingular_matrix(rng, n);
    if (ak_nonsingular) coeffs[size_t(k)] = random_nonsingular_matrix(rng, n);
    while (coeffs[size_t(k)].is_zero()) coeffs[size_t(k)] = random_int_matrix(rng, n, n);
    return MatrixPolynomial<Rat>(std::move(coeffs));
}

inline MatrixPolynomial<Rat> random_symmetric_poly(Rng& rng, int n, int k) {
    std::vector<Matrix<Rat>> coeffs;
    for (int i = 0; i <= k; ++i) {
        Matrix<Rat> a = random_int_matrix(rng, n, n);
        coeffs.push_back(a + a.transpose());
    }
    while (coeffs[size_t(k)].is_zero()) {
        Matrix<Rat> a = random_int_matrix(rng, n, n);
        coeffs[size_t(k)] = a + a.transpose();
    }
    return MatrixPolynomial<Rat>(std::move(coeffs));
}

// Random tuple for the w side of a GFPR spec: repeatedly prepends indices
// from 0..h-1 while the full symmetric tuple keeps the SIP.
inline IndexTuple random_w_tuple(Rng& rng, int h, int max_len) {
    IndexTuple t;
    if (h <= 0 || max_len <= 0) return t;
    std::uniform_int_distribution<int> pick(0, h - 1);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    int target = len_dist(rng);
    for (int tries = 0; int(t.size()) < target && tries < 8 * max_len; ++tries) {
        IndexTuple cand = t;
        cand.insert(cand.begin(), pick(rng));
        IndexTuple full = tuple_concat({cand, admissible_tuple(h), symmetric_complement(h),
                                        tuple_reverse(cand)});
        if (satisfies_sip(full)) t = cand;
    }
    return t;
}

// Random GFPR recipe in a given parity cell. Assignments are nonsingular in
// the matrix-assignment sense: forced nonsingular on 0 and -k positions,
// occasionally singular elsewhere.
inline GfprSpec<Rat> random_gfpr_spec(Rng& rng, int k, int h, int n, int max_tuple_len = 4) {
    IndexTuple t_w = random_w_tuple(rng, h, max_tuple_len);
    IndexTuple u = random_w_tuple(rng, k - h - 1, max_tuple_len);
    IndexTuple t_v = tuple_shift(u, -k);

    std::uniform_int_distribution<int> coin(0, 9);
    auto draw_assignment = [&](const IndexTuple& t) {
        MatrixAssignment<Rat> z;
        for (int idx : t) {
            bool must_be_nonsingular = (idx == 0 || idx == -k);
            if (must_be_nonsingular || coin(rng) >= 3)
                z.mats.push_back(random_nonsingular_matrix(rng, n));
            else
                z.mats.push_back(Matrix<Rat>::zero(n, n));
        }
        return z;
    };
    return GfprSpec<Rat>(k, h, t_w, t_v, draw_assignment(t_w), draw_assignment(t_v));
}

}  // namespace bsf

#endif
