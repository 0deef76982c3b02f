#ifndef BSF_FAMILIES_HPP
#define BSF_FAMILIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsf/blockpencil.hpp"
#include "bsf/matpoly.hpp"
#include "bsf/minbases.hpp"

namespace bsf {

enum class FamilyTag { O1, O2, E1, E2 };

inline const char* tag_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::O1: return "O1";
        case FamilyTag::O2: return "O2";
        case FamilyTag::E1: return "E1";
        case FamilyTag::E2: return "E2";
    }
    return "?";
}

inline bool tag_is_odd(FamilyTag t) { return t == FamilyTag::O1 || t == FamilyTag::O2; }

// Wing size of the family templates.
inline int family_wing_size(int k) { return (k % 2 != 0) ? (k - 1) / 2 : (k - 2) / 2; }

// Block-diagonal pencil diag(lambda Q_d + Q_{d-1}, ..., lambda Q_1 + Q_0)
// for a polynomial of odd grade d.
template <class T>
BlockPencil<T> m_of(const MatrixPolynomial<T>& q) {
    int d = q.grade(), n = q.n();
    if (d % 2 == 0) throw std::invalid_argument("m_of needs odd grade");
    int blocks = (d + 1) / 2;
    BlockPencil<T> r(n, blocks, blocks);
    for (int j = 0; j < blocks; ++j)
        r.set_block(j, j, q.coeff(d - 2 * j), q.coeff(d - 2 * j - 1));
    return r;
}

// Parameter shapes in blocks, per tag: rows/cols of B, C, D, E (absent
// parameters are 0 x 0).
struct ParamShape {
    int br = 0, bc = 0, cr = 0, cc = 0, dr = 0, dc = 0, er = 0, ec = 0;
};

inline ParamShape family_param_shape(FamilyTag tag, int k) {
    int s = family_wing_size(k);
    ParamShape ps;
    switch (tag) {
        case FamilyTag::O1:
            ps = {s, s, s + 1, s, 0, 0, 0, 0};
            break;
        case FamilyTag::O2:
            ps = {1, s - 1, s, s - 1, 1, s - 1, s - 1, s - 1};
            break;
        case FamilyTag::E1:
        case FamilyTag::E2:
            ps = {s + 1, s, 1, s, s, s, 0, 0};
            break;
    }
    return ps;
}

// One certified member of a fundamental family: tag plus parameter blocks,
// stored as plain matrices of block shape given by family_param_shape.
template <class T>
struct FamilyForm {
    FamilyTag tag = FamilyTag::O1;
    int n = 1;
    int k = 1;
    Matrix<T> b, c, d, e;

    static FamilyForm zero_params(FamilyTag tag, int k, int n) {
        ParamShape ps = family_param_shape(tag, k);
        FamilyForm f;
        f.tag = tag;
        f.n = n;
        f.k = k;
        f.b = Matrix<T>(ps.br * n, ps.bc * n);
        f.c = Matrix<T>(ps.cr * n, ps.cc * n);
        f.d = Matrix<T>(ps.dr * n, ps.dc * n);
        f.e = Matrix<T>(ps.er * n, ps.ec * n);
        // the skeletons carry identity wing coefficients
        if (tag == FamilyTag::O1) f.b = Matrix<T>::identity(ps.br * n);
        if (tag == FamilyTag::O2) f.e = Matrix<T>::identity(ps.er * n);
        if (tag == FamilyTag::E1 || tag == FamilyTag::E2)
            f.d = Matrix<T>::identity(ps.dr * n);
        return f;
    }

    void validate() const {
        ParamShape ps = family_param_shape(tag, k);
        auto chk = [&](const Matrix<T>& m, int r, int c2, const char* name) {
            if (m.rows() != r * n || m.cols() != c2 * n)
                throw std::invalid_argument(std::string("parameter ") + name +
                                            " has the wrong block shape");
        };
        chk(b, ps.br, ps.bc, "B");
        chk(c, ps.cr, ps.cc, "C");
        chk(d, ps.dr, ps.dc, "D");
        chk(e, ps.er, ps.ec, "E");
    }
};

namespace detail {

// X * K_t and K_t^T * X^B as full-size matrix pairs of the pencil parts.
template <class T>
BlockPencil<T> left_K_product(const Matrix<T>& x, int t, int n) {
    BlockPencil<T> k = make_K<T>(t, n);
    return BlockPencil<T>(n, x * k.lambda_part(), x * k.const_part());
}
template <class T>
BlockPencil<T> right_KT_product(const Matrix<T>& x, int t, int n) {
    BlockPencil<T> k = make_K<T>(t, n);
    Matrix<T> xb = block_transpose(x, n);
    return BlockPencil<T>(n, k.lambda_part().transpose() * xb,
                          k.const_part().transpose() * xb);
}

}  // namespace detail

// The four zero-parameter generators.
template <class T>
BlockPencil<T> skeleton(const MatrixPolynomial<T>& p, FamilyTag tag) {
    int k = p.grade(), n = p.n();
    bool odd = (k % 2 != 0);
    if (odd != tag_is_odd(tag))
        throw std::invalid_argument("family tag parity does not match the grade");
    int s = family_wing_size(k);
    BlockPencil<T> r(n, k, k);
    BlockPencil<T> ks = make_K<T>(s, n);
    BlockPencil<T> kst = block_transpose(ks);

    switch (tag) {
        case FamilyTag::O1: {
            if (k < 1) throw std::invalid_argument("O1 needs k >= 1");
            r.paste_window(0, 0, m_of(p));
            r.paste_window(s + 1, 0, ks);
            r.paste_window(0, s + 1, kst);
            break;
        }
        case FamilyTag::O2: {
            if (k < 3) throw std::invalid_argument("O2 needs k >= 3");
            r.set_block(0, 0, Matrix<T>::zero(n, n), -p.coeff(k));
            r.set_block(0, 1, p.coeff(k), Matrix<T>::zero(n, n));
            r.set_block(1, 0, p.coeff(k), Matrix<T>::zero(n, n));
            r.paste_window(1, 1, m_of(p.middle_part()));
            r.set_block(s, s + 1, Matrix<T>::zero(n, n), p.coeff(0));
            r.set_block(s + 1, s, Matrix<T>::zero(n, n), p.coeff(0));
            r.set_block(s + 1, s + 1, -p.coeff(0), Matrix<T>::zero(n, n));
            BlockPencil<T> km = make_K<T>(s - 1, n);
            r.paste_window(s + 2, 1, km);
            r.paste_window(1, s + 2, block_transpose(km));
            break;
        }
        case FamilyTag::E1: {
            if (k < 2) throw std::invalid_argument("E1 needs k >= 2");
            r.paste_window(0, 0, m_of(p.horner_shift()));
            r.set_block(s, s + 1, Matrix<T>::zero(n, n), p.coeff(0));
            r.set_block(s + 1, s, Matrix<T>::zero(n, n), p.coeff(0));
            r.set_block(s + 1, s + 1, -p.coeff(0), Matrix<T>::zero(n, n));
            r.paste_window(s + 2, 0, ks);
            r.paste_window(0, s + 2, kst);
            break;
        }
        case FamilyTag::E2: {
            if (k < 2) throw std::invalid_argument("E2 needs k >= 2");
            r.set_block(0, 0, Matrix<T>::zero(n, n), -p.coeff(k));
            r.set_block(0, 1, p.coeff(k), Matrix<T>::zero(n, n));
            r.set_block(1, 0, p.coeff(k), Matrix<T>::zero(n, n));
            r.paste_window(1, 1, m_of(p.truncate_low()));
            r.paste_window(s + 2, 1, ks);
            r.paste_window(1, s + 2, kst);
            break;
        }
    }
    return r;
}

// Full template instantiation with the parameter blocks in place.
template <class T>
BlockPencil<T> build_family(const MatrixPolynomial<T>& p, const FamilyForm<T>& form) {
    if (p.grade() != form.k || p.n() != form.n)
        throw std::invalid_argument("family form does not match the polynomial");
    form.validate();
    int k = form.k, n = form.n;
    int s = family_wing_size(k);
    BlockPencil<T> r = skeleton(p, form.tag);

    switch (form.tag) {
        case FamilyTag::O1: {
            r.add_window(0, 0, detail::left_K_product(form.c, s, n));
            r.add_window(0, 0, detail::right_KT_product(form.c, s, n));
            r.paste_window(s + 1, 0, detail::left_K_product(form.b, s, n));
            r.paste_window(0, s + 1, detail::right_KT_product(form.b, s, n));
            break;
        }
        case FamilyTag::O2: {
            int t = s - 1;
            r.add_window(0, 1, detail::left_K_product(form.b, t, n));
            r.add_window(1, 0, detail::right_KT_product(form.b, t, n));
            r.add_window(1, 1, detail::left_K_product(form.c, t, n));
            r.add_window(1, 1, detail::right_KT_product(form.c, t, n));
            r.add_window(s + 1, 1, detail::left_K_product(form.d, t, n));
            r.add_window(1, s + 1, detail::right_KT_product(form.d, t, n));
            r.paste_window(s + 2, 1, detail::left_K_product(form.e, t, n));
            r.paste_window(1, s + 2, detail::right_KT_product(form.e, t, n));
            break;
        }
        case FamilyTag::E1: {
            r.add_window(0, 0, detail::left_K_product(form.b, s, n));
            r.add_window(0, 0, detail::right_KT_product(form.b, s, n));
            r.add_window(s + 1, 0, detail::left_K_product(form.c, s, n));
            r.add_window(0, s + 1, detail::right_KT_product(form.c, s, n));
            r.paste_window(s + 2, 0, detail::left_K_product(form.d, s, n));
            r.paste_window(0, s + 2, detail::right_KT_product(form.d, s, n));
            break;
        }
        case FamilyTag::E2: {
            r.add_window(0, 1, detail::left_K_product(form.c, s, n));
            r.add_window(1, 0, detail::right_KT_product(form.c, s, n));
            r.add_window(1, 1, detail::left_K_product(form.b, s, n));
            r.add_window(1, 1, detail::right_KT_product(form.b, s, n));
            r.paste_window(s + 2, 1, detail::left_K_product(form.d, s, n));
            r.paste_window(1, s + 2, detail::right_KT_product(form.d, s, n));
            break;
        }
    }
    return r;
}

// Column cyclic shifts carrying the O2/E2 generators into extended block
// Kronecker pencils: the first block column moves to position s+2.
inline BlockPermutation family_column_shift(FamilyTag tag, int k, int n) {
    if (tag != FamilyTag::O2 && tag != FamilyTag::E2)
        throw std::invalid_argument("column shift applies to the O2/E2 layouts");
    int s = family_wing_size(k);
    std::vector<int> c;
    for (int j = 2; j <= s + 2; ++j) c.push_back(j);
    c.push_back(1);
    for (int j = s + 3; j <= k; ++j) c.push_back(j);
    return BlockPermutation(std::move(c), n);
}

// Antidiagonal sums AS(M, s) of a (q+1) x (p+1) block pencil, and the AS
// condition against a grade p+q+1 polynomial.
template <class T>
struct AsReport {
    bool holds = false;
    std::vector<Matrix<T>> sums;   // AS(M, s), s = 0..k
    std::vector<int> violated;     // s with AS(M, s) != A_s
};

template <class T>
std::vector<Matrix<T>> antidiagonal_sums(const BlockPencil<T>& m, int k) {
    int n = m.n();
    std::vector<Matrix<T>> sums(size_t(k) + 1, Matrix<T>::zero(n, n));
    for (int s = 0; s <= k; ++s) {
        for (int i = 1; i <= m.block_rows(); ++i)
            for (int j = 1; j <= m.block_cols(); ++j) {
                if (i + j == k + 2 - s) sums[size_t(s)] += m.block_lambda(i - 1, j - 1);
                if (i + j == k + 1 - s) sums[size_t(s)] += m.block_const(i - 1, j - 1);
            }
    }
    return sums;
}

template <class T>
AsReport<T> as_condition(const BlockPencil<T>& m, const MatrixPolynomial<T>& p) {
    int k = p.grade();
    if (m.block_rows() + m.block_cols() != k + 1)
        throw std::invalid_argument("body block counts do not match the grade");
    if (m.n() != p.n()) throw std::invalid_argument("block size mismatch");
    AsReport<T> rep;
    rep.sums = antidiagonal_sums(m, k);
    for (int s = 0; s <= k; ++s)
        if (rep.sums[size_t(s)] != p.coeff(s)) rep.violated.push_back(s);
    rep.holds = rep.violated.empty();
    return rep;
}

// Checks the equivalence between the AS condition and the two-sided
// Lambda product recovering P, evaluating both routes independently.
template <class T>
bool as_equiv_product_check(const BlockPencil<T>& m, const MatrixPolynomial<T>& p) {
    int k = p.grade(), n = p.n();
    int q = m.block_rows() - 1, pp = m.block_cols() - 1;
    if (q + pp + 1 != k) throw std::invalid_argument("body block counts do not match the grade");
    MatrixPolynomial<T> lam_q = make_Lambda<T>(q, n);
    MatrixPolynomial<T> lam_p = make_Lambda<T>(pp, n);
    MatrixPolynomial<T> product = lam_q * m.as_polynomial() * lam_p.transpose();
    bool product_is_p = product.with_grade(k) == p.with_grade(k);
    bool as_holds = as_condition(m, p).holds;
    if (product_is_p != as_holds)
        throw std::logic_error("AS condition and Lambda product routes disagree");
    return product_is_p;
}

// Nonsingularity hypotheses of the per-tag linearization theorems
// (sufficient conditions only).
template <class T>
struct LinearizationConditions {
    std::vector<std::pair<std::string, bool>> conditions;
    bool all_hold = false;
};

template <class T>
LinearizationConditions<T> linearization_conditions(const FamilyForm<T>& form,
                                                    const MatrixPolynomial<T>& p) {
    LinearizationConditions<T> rep;
    int n = form.n;
    auto add = [&](const std::string& name, const Matrix<T>& m) {
        rep.conditions.emplace_back(name, m.is_nonsingular());
    };
    switch (form.tag) {
        case FamilyTag::O1:
            add("B", form.b);
            add("B^B", block_transpose(form.b, n));
            break;
        case FamilyTag::O2:
            add("A_0", p.coeff(0));
            add("A_k", p.coeff(p.grade()));
            add("E", form.e);
            add("E^B", block_transpose(form.e, n));
            break;
        case FamilyTag::E1:
            add("A_0", p.coeff(0));
            add("D", form.d);
            add("D^B", block_transpose(form.d, n));
            break;
        case FamilyTag::E2:
            add("A_k", p.coeff(p.grade()));
            add("D", form.d);
            add("D^B", block_transpose(form.d, n));
            break;
    }
    rep.all_hold = true;
    for (const auto& [name, ok] : rep.conditions) rep.all_hold = rep.all_hold && ok;
    return rep;
}

// ---------------------------------------------------------------------------
// Template matching: read the parameters back out of a pencil that claims to
// sit in one of the four families, then certify by exact rebuild.

namespace detail {

// W = E K_t determines E uniquely: the lambda part of E K_t is [0 | E].
template <class T>
std::optional<Matrix<T>> read_wing_coefficient(const BlockPencil<T>& w, int t) {
    int n = w.n();
    if (w.block_cols() != t + 1) return std::nullopt;
    int r = w.block_rows();
    Matrix<T> e(r * n, t * n);
    if (t > 0) e = w.lambda_part().submatrix(0, n, r * n, t * n);
    BlockPencil<T> rebuilt = left_K_product(e, t, n);
    if (rebuilt != w) return std::nullopt;
    return e;
}

// Solves Delta = C K_t + K_t^T C^B for the (t+1) x t block parameter C.
// Entrywise the two relations read
//   Delta_const(i,j) = -C(i,j)[j<=t] - C(j,i)[i<=t]
//   Delta_lambda(i,j) = C(i,j-1)[j>=2] + C(j,i-1)[i>=2],
// so rows 1 and t+1 of C are read off directly and each antidiagonal of C
// is recovered by a walk alternating the two relations from its boundary
// entry. The solution is unique over a field of characteristic zero; a
// final exact rebuild rejects inconsistent input.
template <class T>
std::optional<Matrix<T>> solve_symmetric_border(const BlockPencil<T>& delta, int t) {
    int n = delta.n();
    if (delta.block_rows() != t + 1 || delta.block_cols() != t + 1) return std::nullopt;
    Matrix<T> c((t + 1) * n, t * n);
    auto dc = [&](int i, int j) { return delta.block_const(i - 1, j - 1); };
    auto dl = [&](int i, int j) { return delta.block_lambda(i - 1, j - 1); };
    auto set = [&](int i, int j, const Matrix<T>& v) { c.paste((i - 1) * n, (j - 1) * n, v); };
    auto get = [&](int i, int j) { return c.submatrix((i - 1) * n, (j - 1) * n, n, n); };

    if (t > 0) {
        for (int j = 1; j <= t; ++j) set(1, j, dl(1, j + 1));
        for (int j = 1; j <= t; ++j) set(t + 1, j, -dc(j, t + 1));
        for (int m = 2; m <= 2 * t + 1; ++m) {
            int a = (m <= t + 1) ? 1 : t + 1;
            int b = m - a;
            bool const_step = (m <= t + 1);
            while (true) {
                if (const_step) {
                    if (a == b || a > t) break;
                    set(b, a, -dc(a, b) - get(a, b));
                    std::swap(a, b);
                } else {
                    if (a == b + 1 || a == 1) break;
                    set(b + 1, a - 1, dl(a, b + 1) - get(a, b));
                    int na = b + 1, nb = a - 1;
                    a = na;
                    b = nb;
                }
                const_step = !const_step;
            }
        }
    }

    BlockPencil<T> full(n, t + 1, t + 1);
    full.add_window(0, 0, left_K_product(c, t, n));
    full.add_window(0, 0, right_KT_product(c, t, n));
    if (full != delta) return std::nullopt;
    return c;
}

}  // namespace detail

// Attempts to read (B, C, D, E) out of a k x k block pencil so that
// build_family reproduces it exactly; nullopt when the pencil is not a
// member of the family.
template <class T>
std::optional<FamilyForm<T>> match_family(const BlockPencil<T>& x,
                                          const MatrixPolynomial<T>& p, FamilyTag tag) {
    int k = p.grade(), n = p.n();
    if (!x.square() || x.block_rows() != k || x.n() != n) return std::nullopt;
    if ((k % 2 != 0) != tag_is_odd(tag)) return std::nullopt;
    int s = family_wing_size(k);
    FamilyForm<T> form = FamilyForm<T>::zero_params(tag, k, n);

    auto wing = [&](int i0, int j0, int r, int t) -> std::optional<Matrix<T>> {
        return detail::read_wing_coefficient(x.block_window(i0, j0, r, t + 1), t);
    };
    auto border = [&](BlockPencil<T> row, int t) {
        return detail::read_wing_coefficient(row, t);
    };

    switch (tag) {
        case FamilyTag::O1: {
            auto b = wing(s + 1, 0, s, s);
            if (!b) return std::nullopt;
            BlockPencil<T> delta = x.block_window(0, 0, s + 1, s + 1) - m_of(p);
            auto c = detail::solve_symmetric_border(delta, s);
            if (!c) return std::nullopt;
            form.b = *b;
            form.c = *c;
            break;
        }
        case FamilyTag::O2: {
            if (k < 3) return std::nullopt;
            int t = s - 1;
            BlockPencil<T> row_b = x.block_window(0, 1, 1, s);
            row_b.set_block(0, 0, row_b.block_lambda(0, 0) - p.coeff(k), row_b.block_const(0, 0));
            auto b = border(row_b, t);
            BlockPencil<T> row_d = x.block_window(s + 1, 1, 1, s);
            row_d.set_block(0, t, row_d.block_lambda(0, t),
                            row_d.block_const(0, t) - p.coeff(0));
            auto d = border(row_d, t);
            auto e = wing(s + 2, 1, t, t);
            if (!b || !d || !e) return std::nullopt;
            BlockPencil<T> delta = x.block_window(1, 1, s, s) - m_of(p.middle_part());
            auto c = detail::solve_symmetric_border(delta, t);
            if (!c) return std::nullopt;
            form.b = *b;
            form.c = *c;
            form.d = *d;
            form.e = *e;
            break;
        }
        case FamilyTag::E1: {
            BlockPencil<T> delta = x.block_window(0, 0, s + 1, s + 1) - m_of(p.horner_shift());
            auto b = detail::solve_symmetric_border(delta, s);
            BlockPencil<T> row_c = x.block_window(s + 1, 0, 1, s + 1);
            row_c.set_block(0, s, row_c.block_lambda(0, s),
                            row_c.block_const(0, s) - p.coeff(0));
            auto c = border(row_c, s);
            auto d = wing(s + 2, 0, s, s);
            if (!b || !c || !d) return std::nullopt;
            form.b = *b;
            form.c = *c;
            form.d = *d;
            break;
        }
        case FamilyTag::E2: {
            BlockPencil<T> row_c = x.block_window(0, 1, 1, s + 1);
            row_c.set_block(0, 0, row_c.block_lambda(0, 0) - p.coeff(k), row_c.block_const(0, 0));
            auto c = border(row_c, s);
            BlockPencil<T> delta = x.block_window(1, 1, s + 1, s + 1) - m_of(p.truncate_low());
            auto b = detail::solve_symmetric_border(delta, s);
            auto d = wing(s + 2, 1, s, s);
            if (!b || !c || !d) return std::nullopt;
            form.b = *b;
            form.c = *c;
            form.d = *d;
            break;
        }
    }
    if (build_family(p, form) != x) return std::nullopt;
    return form;
}

}  // namespace bsf

#endif
