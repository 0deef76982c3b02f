#ifndef BSF_VERIFY_HPP
#define BSF_VERIFY_HPP

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "bsf/blockpencil.hpp"
#include "bsf/eigen_backend.hpp"
#include "bsf/matpoly.hpp"

namespace bsf {

// First Frobenius companion form; the trusted oracle linearization.
template <class T>
BlockPencil<T> frobenius_companion(const MatrixPolynomial<T>& p) {
    int k = p.grade(), n = p.n();
    if (k < 1) throw std::invalid_argument("companion form needs grade >= 1");
    BlockPencil<T> r(n, k, k);
    r.set_block(0, 0, p.coeff(k), p.coeff(k - 1));
    for (int j = 1; j < k; ++j)
        r.set_block(0, j, Matrix<T>::zero(n, n), p.coeff(k - 1 - j));
    for (int i = 1; i < k; ++i) {
        r.set_block(i, i - 1, Matrix<T>::zero(n, n), -Matrix<T>::identity(n));
        r.set_block(i, i, Matrix<T>::identity(n), Matrix<T>::zero(n, n));
    }
    return r;
}

// Chordal distance on the Riemann sphere between projective pairs,
// d(x, y) = |x - y| / (sqrt(1+|x|^2) sqrt(1+|y|^2)) with infinity at the
// north pole; computed on normalized (alpha, beta) to keep infinite
// eigenvalues exact.
inline double chordal_distance(const EigenPair& u, const EigenPair& v) {
    double nu = std::sqrt(std::norm(u.alpha) + std::norm(u.beta));
    double nv = std::sqrt(std::norm(v.alpha) + std::norm(v.beta));
    if (nu == 0.0 || nv == 0.0)
        throw std::invalid_argument("degenerate projective pair (0, 0)");
    return std::abs(u.alpha * v.beta - v.alpha * u.beta) / (nu * nv);
}

inline bool is_infinite(const EigenPair& u, double tol = 1e-8) {
    return chordal_distance(u, EigenPair{Cplx(1, 0), Cplx(0, 0)}) < tol;
}

namespace detail {

// Minimum-cost perfect matching on a square cost matrix (Hungarian
// algorithm with potentials, O(m^3)); returns the column matched to each row.
inline std::vector<int> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    int m = int(cost.size());
    if (m == 0) return {};
    std::vector<double> u(size_t(m) + 1), v(size_t(m) + 1);
    std::vector<int> match(size_t(m) + 1, 0), way(size_t(m) + 1, 0);
    for (int i = 1; i <= m; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(size_t(m) + 1, std::numeric_limits<double>::infinity());
        std::vector<bool> used(size_t(m) + 1, false);
        do {
            used[size_t(j0)] = true;
            int i0 = match[size_t(j0)], j1 = 0;
            double delta = std::numeric_limits<double>::infinity();
            for (int j = 1; j <= m; ++j) {
                if (used[size_t(j)]) continue;
                double cur = cost[size_t(i0 - 1)][size_t(j - 1)] - u[size_t(i0)] - v[size_t(j)];
                if (cur < minv[size_t(j)]) {
                    minv[size_t(j)] = cur;
                    way[size_t(j)] = j0;
                }
                if (minv[size_t(j)] < delta) {
                    delta = minv[size_t(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[size_t(j)]) {
                    u[size_t(match[size_t(j)])] += delta;
                    v[size_t(j)] -= delta;
                } else {
                    minv[size_t(j)] -= delta;
                }
            }
            j0 = j1;
        } while (match[size_t(j0)] != 0);
        do {
            int j1 = way[size_t(j0)];
            match[size_t(j0)] = match[size_t(j1)];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j)
        if (match[size_t(j)] > 0) row_to_col[size_t(match[size_t(j)] - 1)] = j - 1;
    return row_to_col;
}

}  // namespace detail

struct SpectralReport {
    bool pass = false;
    double max_matched_distance = 0.0;
    int finite_left = 0, infinite_left = 0;
    int finite_right = 0, infinite_right = 0;
    // (alpha, beta) = (0, 0) outputs of the backend; they flag a singular
    // pencil and always fail the check without being matchable
    int degenerate_left = 0, degenerate_right = 0;
    std::vector<double> matched_distances;
    std::vector<std::pair<EigenPair, EigenPair>> matched_pairs;
};

// Matches two equally sized spectra by minimum-weight assignment in the
// chordal metric.
inline SpectralReport match_spectra(const std::vector<EigenPair>& left,
                                    const std::vector<EigenPair>& right, double tol) {
    if (left.size() != right.size())
        throw std::invalid_argument("spectra of different cardinality");
    SpectralReport rep;
    auto degenerate = [](const EigenPair& e) {
        return std::norm(e.alpha) + std::norm(e.beta) == 0.0;
    };
    std::vector<EigenPair> l, r;
    for (const auto& e : left) (degenerate(e) ? (void)++rep.degenerate_left : (void)l.push_back(e));
    for (const auto& e : right)
        (degenerate(e) ? (void)++rep.degenerate_right : (void)r.push_back(e));
    for (const auto& e : l) (is_infinite(e, tol) ? rep.infinite_left : rep.finite_left)++;
    for (const auto& e : r) (is_infinite(e, tol) ? rep.infinite_right : rep.finite_right)++;
    if (rep.degenerate_left || rep.degenerate_right || l.size() != r.size()) {
        rep.pass = false;
        return rep;
    }
    int m = int(l.size());
    std::vector<std::vector<double>> cost(static_cast<size_t>(m),
                                          std::vector<double>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            cost[size_t(i)][size_t(j)] = chordal_distance(l[size_t(i)], r[size_t(j)]);
    std::vector<int> assign = detail::min_cost_assignment(cost);
    for (int i = 0; i < m; ++i) {
        double d = cost[size_t(i)][size_t(assign[size_t(i)])];
        rep.matched_distances.push_back(d);
        rep.matched_pairs.emplace_back(l[size_t(i)], r[size_t(assign[size_t(i)])]);
        rep.max_matched_distance = std::max(rep.max_matched_distance, d);
    }
    rep.pass = rep.max_matched_distance < tol && rep.infinite_left == rep.infinite_right;
    return rep;
}

// Regularity certificate: det P(x0) != 0 at some rational probe. det(P) has
// degree at most n*k, so k*n+1 distinct probes either certify regularity or
// prove det P identically zero.
inline bool certify_regular(const MatrixPolynomial<Rat>& p, unsigned long seed = 424242ul) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 97);
    int probes = p.n() * p.grade() + 1;
    std::set<std::pair<long, long>> seen;
    for (int i = 0; i < probes;) {
        long a = num(rng), b = den(rng);
        if (!seen.insert({a, b}).second) continue;
        ++i;
        if (!field<Rat>::is_zero(p.evaluate(make_rat(a, b)).determinant())) return true;
    }
    return false;
}

// Spectral certification at desk scale: the generalized eigenvalues of L
// are matched against the Frobenius companion oracle of P; pass when every
// matched chordal distance is below tol and the infinite counts agree.
inline SpectralReport check_strong_linearization(const BlockPencil<Rat>& l,
                                                 const MatrixPolynomial<Rat>& p,
                                                 double tol = 1e-8) {
    int k = p.grade(), n = p.n();
    if (!l.square() || l.block_rows() != k || l.n() != n)
        throw std::invalid_argument("pencil is not kn x kn for the given polynomial");
    if (!certify_regular(p))
        throw std::domain_error("spectral verification requires a regular polynomial");
    BlockPencil<Rat> comp = frobenius_companion(p);
    auto left = generalized_eigenvalues(to_cplx(l.lambda_part()), to_cplx(l.const_part()));
    auto right =
        generalized_eigenvalues(to_cplx(comp.lambda_part()), to_cplx(comp.const_part()));
    return match_spectra(left, right, tol);
}

// Rank-deficiency proxy for the infinite eigenvalue counts: kn - rank of
// the lambda part of L against n - rank of rev P at 0 (that is, of A_k).
// Exact ranks over the rationals.
inline std::pair<int, int> infinite_ev_count(const BlockPencil<Rat>& l,
                                             const MatrixPolynomial<Rat>& p) {
    int k = p.grade(), n = p.n();
    if (!l.square() || l.block_rows() != k || l.n() != n)
        throw std::invalid_argument("pencil is not kn x kn for the given polynomial");
    int from_l = k * n - l.lambda_part().rank();
    int from_p = n - p.reversal().evaluate(field<Rat>::zero()).rank();
    return {from_l, from_p};
}

}  // namespace bsf

#endif
