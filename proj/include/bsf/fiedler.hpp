#ifndef BSF_FIEDLER_HPP
#define BSF_FIEDLER_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "bsf/blockpencil.hpp"
#include "bsf/tuples.hpp"

namespace bsf {

// k x k block elementary matrix M_i(B). Indices -k..k-1 follow the usual
// templates; i = k is the inverse of M_{-k}(B) and needs B nonsingular.
// The special index "-0" (inverse of M_0) has its own constructor.
template <class T>
Matrix<T> elementary(int i, const Matrix<T>& b, int k, int n) {
    if (k < 1) throw std::invalid_argument("elementary matrix needs k >= 1");
    if (b.rows() != n || b.cols() != n)
        throw std::invalid_argument("elementary matrix block has wrong size");
    if (i < -k || i > k) throw std::invalid_argument("elementary index out of range");
    Matrix<T> m = Matrix<T>::identity(k * n);
    if (i == 0) {
        m.paste((k - 1) * n, (k - 1) * n, b);
    } else if (i == -k) {
        m.paste(0, 0, b);
    } else if (i == k) {
        if (!b.is_nonsingular())
            throw std::domain_error("M_k(B) requires a nonsingular B");
        m.paste(0, 0, b.inverse());
    } else {
        int r = (k - std::abs(i) - 1) * n;  // window at block rows k-|i|, k-|i|+1
        m.paste(r, r, Matrix<T>::zero(n, n));
        m.paste(r, r + n, Matrix<T>::identity(n));
        m.paste(r + n, r, Matrix<T>::identity(n));
        m.paste(r + n, r + n, Matrix<T>::zero(n, n));
        if (i > 0)
            m.paste(r, r, b);
        else
            m.paste(r + n, r + n, b);
    }
    return m;
}

template <class T>
Matrix<T> elementary_minus_zero(const Matrix<T>& b, int k, int n) {
    if (!b.is_nonsingular())
        throw std::domain_error("M_{-0}(B) requires a nonsingular B");
    return elementary(0, b.inverse(), k, n);
}

// Self-test of the conjugation identity R_k M_{-i}(B) R_k = M_{k-i}(B),
// 1 <= i <= k.
template <class T>
bool sip_conjugate_elementary_identity_check(int i, const Matrix<T>& b, int k, int n) {
    if (i < 1 || i > k) throw std::invalid_argument("conjugation identity needs 1 <= i <= k");
    Matrix<T> r = permutation_matrix<T>(BlockPermutation::reversal(k, n));
    return r * elementary(-i, b, k, n) * r == elementary(k - i, b, k, n);
}

// Ordered list of n x n matrices, one per tuple index.
template <class T>
struct MatrixAssignment {
    std::vector<Matrix<T>> mats;

    MatrixAssignment() = default;
    explicit MatrixAssignment(std::vector<Matrix<T>> m) : mats(std::move(m)) {}

    size_t size() const { return mats.size(); }

    MatrixAssignment reversed() const {
        return MatrixAssignment(std::vector<Matrix<T>>(mats.rbegin(), mats.rend()));
    }

    // Nonsingular assignment: matrices sitting on 0 and -k indices are
    // nonsingular (nothing is required elsewhere).
    bool is_nonsingular_for(const IndexTuple& t, int k) const {
        if (t.size() != mats.size())
            throw std::invalid_argument("assignment length differs from tuple length");
        for (size_t p = 0; p < t.size(); ++p)
            if ((t[p] == 0 || t[p] == -k) && !mats[p].is_nonsingular()) return false;
        return true;
    }

    bool is_symmetric() const {
        for (const auto& m : mats)
            if (m != m.transpose()) return false;
        return true;
    }
};

// M_t(Z) = M_{i_1}(Z_1) ... M_{i_r}(Z_r); empty tuple gives I_{kn}.
template <class T>
Matrix<T> tuple_product(const IndexTuple& t, const MatrixAssignment<T>& z, int k, int n) {
    if (t.size() != z.size())
        throw std::invalid_argument("assignment length differs from tuple length");
    Matrix<T> acc = Matrix<T>::identity(k * n);
    for (size_t p = 0; p < t.size(); ++p) {
        if (t[p] < -k || t[p] > k - 1)
            throw std::invalid_argument("tuple index outside -k..k-1");
        acc = acc * elementary(t[p], z.mats[p], k, n);
    }
    return acc;
}

// Standard assignment M_i^P = M_i(-A_i) for 0 <= i < k, M_{-i}^P = M_{-i}(A_i)
// for 1 <= i <= k, and M_k^P the inverse of M_{-k}^P.
template <class T>
Matrix<T> elementary_std(int i, const MatrixPolynomial<T>& p) {
    int k = p.grade(), n = p.n();
    if (i >= 0 && i <= k - 1) return elementary(i, -p.coeff(i), k, n);
    if (i >= -k && i <= -1) return elementary(i, p.coeff(-i), k, n);
    if (i == k) return elementary(k, p.coeff(k), k, n);
    throw std::invalid_argument("standard elementary index out of range");
}

template <class T>
Matrix<T> tuple_product_std(const IndexTuple& t, const MatrixPolynomial<T>& p) {
    Matrix<T> acc = Matrix<T>::identity(p.grade() * p.n());
    for (int i : t) acc = acc * elementary_std(i, p);
    return acc;
}

// The block-symmetric generalized Fiedler pencil, written out from its
// explicit tridiagonal-like template. The even-degree variant embeds the
// inverse of the leading coefficient.
template <class T>
BlockPencil<T> gfp_pencil(const MatrixPolynomial<T>& p) {
    int k = p.grade(), n = p.n();
    if (k < 2) throw std::invalid_argument("the GFP template needs grade >= 2");
    BlockPencil<T> r(n, k, k);
    Matrix<T> id = Matrix<T>::identity(n);
    Matrix<T> zero = Matrix<T>::zero(n, n);
    bool odd = (k % 2 != 0);
    if (!odd && !p.coeff(k).is_nonsingular())
        throw std::domain_error("even-degree GFP needs a nonsingular leading coefficient");
    for (int d = 1; d <= k; ++d) {
        bool coeff_slot = odd ? (d % 2 == 1) : (d % 2 == 0);
        if (coeff_slot) {
            // lambda A_{k-d+1} + A_{k-d}
            r.set_block(d - 1, d - 1, p.coeff(k - d + 1), p.coeff(k - d));
        } else if (!odd && d == 1) {
            r.set_block(0, 0, zero, -p.coeff(k).inverse());
        }
        if (d < k) {
            bool minus_i = odd ? (d % 2 == 1) : (d % 2 == 0);
            if (minus_i) {
                r.set_block(d - 1, d, zero, -id);
                r.set_block(d, d - 1, zero, -id);
            } else {
                r.set_block(d - 1, d, id, zero);
                r.set_block(d, d - 1, id, zero);
            }
        }
    }
    return r;
}

// Same pencil through the defining elementary products; the two routes are
// asserted equal in the test suite.
template <class T>
BlockPencil<T> gfp_pencil_from_products(const MatrixPolynomial<T>& p) {
    int k = p.grade(), n = p.n();
    if (k < 2) throw std::invalid_argument("the GFP product needs grade >= 2");
    IndexTuple neg, pos;
    for (int i = 1; i <= k; i += 2) neg.push_back(-i);
    for (int i = 0; i <= (k % 2 ? k - 1 : k); i += 2) pos.push_back(i);
    if (k % 2 == 0 && !p.coeff(k).is_nonsingular())
        throw std::domain_error("even-degree GFP needs a nonsingular leading coefficient");
    return BlockPencil<T>(n, tuple_product_std(neg, p), -tuple_product_std(pos, p));
}

// Recipe for one block-symmetric GFPR: parameter h, tuples t_w over 0:h-1
// and t_v over -k:-h-2 (stored in the negative range), and their matrix
// assignments.
template <class T>
struct GfprSpec {
    int k = 0;
    int h = 0;
    IndexTuple t_w;
    IndexTuple t_v;
    MatrixAssignment<T> z_w;
    MatrixAssignment<T> z_v;

    enum class TvConvention { Negative, Shifted };

    GfprSpec() = default;
    GfprSpec(int k_, int h_, IndexTuple tw, IndexTuple tv, MatrixAssignment<T> zw,
             MatrixAssignment<T> zv, TvConvention conv = TvConvention::Negative)
        : k(k_), h(h_), t_w(std::move(tw)), t_v(std::move(tv)), z_w(std::move(zw)),
          z_v(std::move(zv)) {
        if (conv == TvConvention::Shifted) t_v = tuple_shift(t_v, -k);
        validate();
    }

    IndexTuple shifted_t_v() const { return tuple_shift(t_v, k); }

    // w-side and (shifted) v-side symmetric tuples whose SIP is required.
    IndexTuple w_side_tuple() const {
        return tuple_concat({t_w, admissible_tuple(h), symmetric_complement(h),
                             tuple_reverse(t_w)});
    }
    IndexTuple v_side_tuple_shifted() const {
        IndexTuple u = shifted_t_v();
        return tuple_concat({u, admissible_tuple(k - h - 1), symmetric_complement(k - h - 1),
                             tuple_reverse(u)});
    }

    bool has_nonsingular_assignments() const {
        return z_w.is_nonsingular_for(t_w, k) && z_v.is_nonsingular_for(t_v, k);
    }

    void validate() const {
        if (k < 1) throw std::invalid_argument("GFPR needs k >= 1");
        if (h < 0 || h >= k) throw std::invalid_argument("GFPR parameter h out of 0..k-1");
        for (int x : t_w)
            if (x < 0 || x > h - 1)
                throw std::invalid_argument("t_w index outside 0..h-1");
        for (int x : t_v)
            if (x + k < 0 || x + k > k - h - 2)
                throw std::invalid_argument("t_v index outside the -k..-h-2 range");
        if (t_w.size() != z_w.size() || t_v.size() != z_v.size())
            throw std::invalid_argument("assignment length differs from tuple length");
        if (!satisfies_sip(w_side_tuple()))
            throw std::invalid_argument("(t_w, w_h, c_h, rev t_w) fails the SIP");
        if (!satisfies_sip(v_side_tuple_shifted()))
            throw std::invalid_argument("(t_v, v_h, -k+c_{k-h-1}, rev t_v) fails the SIP");
    }
};

// M_{t_w,t_v}(Z)(lambda M_{v_h} - M_{w_h}) M_{-k+c_{k-h-1}, c_h} M_{rev...}.
template <class T>
BlockPencil<T> build_gfpr(const MatrixPolynomial<T>& p, const GfprSpec<T>& spec) {
    spec.validate();
    int k = p.grade(), n = p.n();
    if (k != spec.k) throw std::invalid_argument("polynomial grade differs from spec");

    IndexTuple w_h = admissible_tuple(spec.h);
    IndexTuple v_h = tuple_shift(admissible_tuple(k - spec.h - 1), -k);
    IndexTuple inner_right =
        tuple_concat({tuple_shift(symmetric_complement(k - spec.h - 1), -k),
                      symmetric_complement(spec.h)});

    MatrixAssignment<T> z_left;
    z_left.mats.insert(z_left.mats.end(), spec.z_w.mats.begin(), spec.z_w.mats.end());
    z_left.mats.insert(z_left.mats.end(), spec.z_v.mats.begin(), spec.z_v.mats.end());
    Matrix<T> left = tuple_product(tuple_concat({spec.t_w, spec.t_v}), z_left, k, n);

    MatrixAssignment<T> z_right;
    z_right.mats = spec.z_w.reversed().mats;
    MatrixAssignment<T> zv_rev = spec.z_v.reversed();
    IndexTuple right_tuple = tuple_concat({tuple_reverse(spec.t_w), tuple_reverse(spec.t_v)});
    z_right.mats.insert(z_right.mats.end(), zv_rev.mats.begin(), zv_rev.mats.end());

    BlockPencil<T> core(n, tuple_product_std(v_h, p), -tuple_product_std(w_h, p));
    core = core * tuple_product_std(inner_right, p);
    return left * core * tuple_product(right_tuple, z_right, k, n);
}

// Simple FPR with parameter k-1, written from its explicit template and
// checked against the elementary-product construction.
template <class T>
BlockPencil<T> simple_fpr(const MatrixPolynomial<T>& p) {
    int k = p.grade(), n = p.n();
    if (k < 2) throw std::invalid_argument("the simple FPR needs grade >= 2");
    BlockPencil<T> r(n, k, k);
    Matrix<T> id = Matrix<T>::identity(n);
    Matrix<T> zero = Matrix<T>::zero(n, n);
    bool odd = (k % 2 != 0);
    int s = odd ? (k - 1) / 2 : (k - 2) / 2;

    auto body_pos = [&](int j) { return j == 0 ? 1 : 2 * j; };  // one-based
    r.set_block(0, 0, p.coeff(k), p.coeff(k - 1));
    for (int j = 1; j <= s; ++j) {
        int b = body_pos(j), prev = body_pos(j - 1), w = 2 * j + 1;
        r.set_block(b - 1, b - 1, -p.coeff(k - 2 * j), p.coeff(k - 2 * j - 1));
        r.set_block(prev - 1, b - 1, zero, p.coeff(k - 2 * j));
        r.set_block(b - 1, prev - 1, zero, p.coeff(k - 2 * j));
        r.set_block(w - 1, prev - 1, zero, -id);
        r.set_block(prev - 1, w - 1, zero, -id);
        r.set_block(w - 1, b - 1, id, zero);
        r.set_block(b - 1, w - 1, id, zero);
    }
    if (!odd) {
        int b_last = body_pos(s);
        r.set_block(k - 1, k - 1, -p.coeff(0), zero);
        r.set_block(k - 1, b_last - 1, zero, p.coeff(0));
        r.set_block(b_last - 1, k - 1, zero, p.coeff(0));
    }

    GfprSpec<T> spec(k, k - 1, {}, {}, MatrixAssignment<T>{}, MatrixAssignment<T>{});
    if (r != build_gfpr(p, spec))
        throw std::logic_error("simple FPR template disagrees with the product construction");
    return r;
}

}  // namespace bsf

#endif
