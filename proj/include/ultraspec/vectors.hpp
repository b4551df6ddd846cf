#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ultraspec/valuation.hpp"

namespace ultraspec {

// Element of K^t with exact rational coordinates.
using Vec = std::vector<Rational>;

inline void require_same_length(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch");
}

// Sup norm: max_r |x_r|_p. Value 0 only for the zero vector.
inline AbsValue norm_max(const PAdicContext& ctx, const Vec& x) {
    AbsValue best = AbsValue::zero();
    for (const Rational& c : x) best = max(best, abs_p(ctx, c));
    return best;
}

// Unweighted bilinear form <x, y> = sum_r x_r y_r.
inline Rational inner_t(const Vec& x, const Vec& y) {
    require_same_length(x, y);
    Rational s = 0;
    for (std::size_t r = 0; r < x.size(); ++r) s += x[r] * y[r];
    return s;
}

/**
 * Weight sequence for the weighted form on K^t: every weight must be
 * nonzero or the form degenerates.
 */
class WeightSeq {
public:
    explicit WeightSeq(std::vector<Rational> w) : w_(std::move(w)) {
        for (const Rational& c : w_)
            if (c.is_zero()) throw std::invalid_argument("weights must be nonzero");
    }

    std::size_t size() const { return w_.size(); }
    const Rational& operator[](std::size_t i) const { return w_.at(i); }
    const std::vector<Rational>& coords() const { return w_; }

private:
    std::vector<Rational> w_;
};

// Weighted form <x, y>_omega = sum_r omega_r x_r y_r.
inline Rational inner_omega(const WeightSeq& omega, const Vec& x, const Vec& y) {
    require_same_length(x, y);
    if (omega.size() < x.size()) throw std::invalid_argument("weight sequence too short");
    Rational s = 0;
    for (std::size_t r = 0; r < x.size(); ++r) s += omega[r] * x[r] * y[r];
    return s;
}

// |<x,y>|_p <= |x| * |y| in the sup norm (Cauchy-Schwarz for the
// unweighted form; the ultrametric sum bound gives it coordinatewise).
inline bool cauchy_schwarz_holds(const PAdicContext& ctx, const Vec& x, const Vec& y) {
    const AbsValue lhs = abs_p(ctx, inner_t(x, y));
    const AbsValue rhs = norm_max(ctx, x) * norm_max(ctx, y);
    return lhs <= rhs;
}

// Standard basis vector e_r in K^t.
inline Vec basis_vector(std::size_t t, std::size_t r) {
    if (r >= t) throw std::invalid_argument("basis index out of range");
    Vec e(t, Rational(0));
    e[r] = 1;
    return e;
}

/**
 * Coordinate subspace of K^t spanned by a subset of the standard
 * basis. Its complement (remaining coordinates) satisfies
 * span + complement = K^t, span ∩ complement = 0.
 */
class CoordSubspace {
public:
    CoordSubspace(std::size_t ambient, std::vector<std::size_t> indices)
        : ambient_(ambient), indices_(std::move(indices)) {
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
        for (std::size_t i : indices_)
            if (i >= ambient_) throw std::invalid_argument("coordinate index out of range");
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return indices_.size(); }
    const std::vector<std::size_t>& indices() const { return indices_; }

    bool contains_index(std::size_t i) const {
        return std::binary_search(indices_.begin(), indices_.end(), i);
    }

    // x lies in the span iff its coordinates vanish off the index set.
    bool contains(const Vec& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!contains_index(i) && !x[i].is_zero()) return false;
        return true;
    }

    CoordSubspace complement() const {
        std::vector<std::size_t> rest;
        rest.reserve(ambient_ - indices_.size());
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!contains_index(i)) rest.push_back(i);
        return CoordSubspace(ambient_, std::move(rest));
    }

    // Coordinate projection onto the span (kills the complement).
    Vec project(const Vec& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("vector length mismatch");
        Vec out(ambient_, Rational(0));
        for (std::size_t i : indices_) out[i] = x[i];
        return out;
    }

private:
    std::size_t ambient_;
    std::vector<std::size_t> indices_;
};

inline Vec vec_add(const Vec& x, const Vec& y) {
    require_same_length(x, y);
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

inline Vec vec_sub(const Vec& x, const Vec& y) {
    require_same_length(x, y);
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

inline Vec vec_scale(const Rational& c, const Vec& x) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
    return out;
}

inline bool is_zero_vec(const Vec& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); });
}

} // namespace ultraspec
