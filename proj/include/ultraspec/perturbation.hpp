#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ultraspec/matrix.hpp"
#include "ultraspec/polynomial.hpp"
#include "ultraspec/vectors.hpp"

namespace ultraspec {

/**
 * Finite-rank perturbation F = u_1 (x) v_1 + ... + u_m (x) v_m of a
 * diagonal operator, at truncation t. Each u (x) v acts as
 * x |-> <x, v>_omega * u; the weighted form is what plants the omega_j
 * factor on the perturbed diagonal.
 */
struct FiniteRankPerturbation {
    WeightSeq weights;
    std::vector<std::pair<Vec, Vec>> pairs; // (u_k, v_k)

    FiniteRankPerturbation(WeightSeq w, std::vector<std::pair<Vec, Vec>> p)
        : weights(std::move(w)), pairs(std::move(p)) {
        if (pairs.empty()) throw std::invalid_argument("perturbation needs at least one pair");
        for (const auto& [u, v] : pairs)
            if (u.size() != weights.size() || v.size() != weights.size())
                throw std::invalid_argument("vector length mismatch");
    }

    std::size_t t() const { return weights.size(); }
    std::size_t rank_bound() const { return pairs.size(); }
};

// (u (x) v)(x) = <x, v>_omega * u.
inline Vec rank_one_apply(const WeightSeq& w, const Vec& u, const Vec& v, const Vec& x) {
    return vec_scale(inner_omega(w, x, v), u);
}

/**
 * Truncated operator T = D + F as an explicit t x t matrix,
 * entries[i][j] = lambda_i [i=j] + sum_k u_k[i] * omega_j * v_k[j].
 */
struct TruncatedOperator {
    Matrix entries;
    std::vector<Rational> lambda;
    FiniteRankPerturbation pert;
};

inline TruncatedOperator assemble(const std::vector<Rational>& lambda_prefix,
                                  const FiniteRankPerturbation& pert) {
    const std::size_t t = pert.t();
    if (lambda_prefix.size() != t) throw std::invalid_argument("vector length mismatch");

    Matrix m(t, t);
    for (std::size_t i = 0; i < t; ++i) m.at(i, i) = lambda_prefix[i];
    for (const auto& [u, v] : pert.pairs)
        for (std::size_t i = 0; i < t; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < t; ++j)
                m.at(i, j) += u[i] * pert.weights[j] * v[j];
        }
    return TruncatedOperator{std::move(m), lambda_prefix, pert};
}

/**
 * Perturbed diagonal theta_j = lambda_j + omega_j * sum_k u_k[j] v_k[j];
 * for a single pair this is theta_j = lambda_j + omega_j alpha_j beta_j.
 * Asserted against the diagonal of the assembled matrix, which is an
 * independent route through the full entry formula.
 */
inline std::vector<Rational> theta_sequence(const std::vector<Rational>& lambda_prefix,
                                            const FiniteRankPerturbation& pert) {
    const std::size_t t = pert.t();
    if (lambda_prefix.size() != t) throw std::invalid_argument("vector length mismatch");

    std::vector<Rational> theta(t);
    for (std::size_t j = 0; j < t; ++j) {
        Rational s = 0;
        for (const auto& [u, v] : pert.pairs) s += u[j] * v[j];
        theta[j] = lambda_prefix[j] + pert.weights[j] * s;
    }

    const TruncatedOperator op = assemble(lambda_prefix, pert);
    for (std::size_t j = 0; j < t; ++j)
        if (op.entries.at(j, j) != theta[j])
            throw std::logic_error("theta sequence disagrees with assembled diagonal");
    return theta;
}

struct EigenReport {
    Rational lam;
    bool is_eigen;
    std::size_t rank;       // rank of lam*I - T
    std::size_t kernel_dim; // geometric multiplicity
    std::vector<Vec> kernel;
};

/**
 * Exact eigenvalue test: rank of lam*I - T by fraction-free
 * elimination, kernel by row reduction. Every kernel vector is
 * verified by applying T, and rank-nullity is asserted.
 */
inline EigenReport is_eigenvalue(const TruncatedOperator& op, const Rational& lam) {
    const std::size_t t = op.entries.rows();
    Matrix m = Matrix::identity(t).scaled(lam) - op.entries;

    EigenReport rep;
    rep.lam = lam;
    rep.rank = bareiss_rank(m);
    rep.kernel = kernel_basis(m);
    rep.kernel_dim = rep.kernel.size();
    rep.is_eigen = rep.kernel_dim > 0;

    if (rep.rank + rep.kernel_dim != t) throw std::logic_error("rank-nullity violated");
    for (const Vec& x : rep.kernel)
        if (op.entries.apply(x) != vec_scale(lam, x))
            throw std::logic_error("kernel vector fails eigen equation");
    return rep;
}

/**
 * Characteristic polynomial det(xI - T) by the Faddeev-LeVerrier
 * recurrence (matrix products and traces only — no elimination, so it
 * is independent of the rank route). Desk-scale only.
 */
inline Poly char_poly_oracle(const TruncatedOperator& op) {
    const std::size_t t = op.entries.rows();
    if (t > 12) throw std::domain_error("oracle limited to small truncations");

    // c_t = 1; M_1 = I; c_{t-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{t-k} I.
    std::vector<Rational> c(t + 1, Rational(0));
    c[t] = 1;
    Matrix m = Matrix::identity(t);
    for (std::size_t k = 1; k <= t; ++k) {
        const Matrix am = op.entries * m;
        c[t - k] = -(am.trace() / Rational(static_cast<long long>(k)));
        if (k < t) m = am + Matrix::identity(t).scaled(c[t - k]);
    }
    return Poly(std::move(c));
}

struct ComparisonReport {
    std::vector<Rational> theta;              // diagonal sequence, in index order
    std::vector<Rational> theta_set;          // sorted, distinct
    Poly char_poly;
    std::vector<std::pair<Rational, unsigned>> rational_eigen; // (root, algebraic mult)
    std::vector<Rational> sigma_p;            // sorted rational eigenvalues
    bool char_poly_splits;                    // all roots rational at this truncation
    std::vector<Rational> theta_not_eigen;    // theta values that are not eigenvalues
    std::vector<Rational> eigen_not_theta;    // eigenvalues missing from the theta set
    std::string relation;
};

/**
 * Desk-scale comparison of {theta_j} with the rational point spectrum
 * of the truncated operator. Reports containments only: the identity
 * sigma(A) = {theta_j} U sigma_p(A) concerns the full operator under
 * extra hypotheses, and a truncation can only ever provide evidence.
 */
inline ComparisonReport spectrum_compare(const std::vector<Rational>& lambda_prefix,
                                         const FiniteRankPerturbation& pert) {
    const TruncatedOperator op = assemble(lambda_prefix, pert);

    ComparisonReport rep;
    rep.theta = theta_sequence(lambda_prefix, pert);
    rep.theta_set = rep.theta;
    std::sort(rep.theta_set.begin(), rep.theta_set.end());
    rep.theta_set.erase(std::unique(rep.theta_set.begin(), rep.theta_set.end()),
                        rep.theta_set.end());

    rep.char_poly = char_poly_oracle(op);
    rep.rational_eigen = rational_roots(rep.char_poly);

    unsigned total_mult = 0;
    for (const auto& [root, mult] : rep.rational_eigen) {
        rep.sigma_p.push_back(root);
        total_mult += mult;
        // Cross-check the elimination route against the root.
        if (!is_eigenvalue(op, root).is_eigen)
            throw std::logic_error("characteristic root rejected by elimination");
    }
    std::sort(rep.sigma_p.begin(), rep.sigma_p.end());
    rep.char_poly_splits =
        total_mult == static_cast<unsigned>(rep.char_poly.degree());

    for (const Rational& th : rep.theta_set)
        if (!std::binary_search(rep.sigma_p.begin(), rep.sigma_p.end(), th))
            rep.theta_not_eigen.push_back(th);
    for (const Rational& ev : rep.sigma_p)
        if (!std::binary_search(rep.theta_set.begin(), rep.theta_set.end(), ev))
            rep.eigen_not_theta.push_back(ev);

    if (rep.theta_not_eigen.empty() && rep.eigen_not_theta.empty())
        rep.relation = "equal as sets";
    else if (rep.eigen_not_theta.empty())
        rep.relation = "rational eigenvalues form a strict subset of the theta set";
    else if (rep.theta_not_eigen.empty())
        rep.relation = "theta set forms a strict subset of the rational eigenvalues";
    else
        rep.relation = "neither set contains the other";
    return rep;
}

} // namespace ultraspec
