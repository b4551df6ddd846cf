#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "ultraspec/polynomial.hpp"
#include "ultraspec/rational_function.hpp"
#include "ultraspec/valuation.hpp"

namespace ultraspec {

/**
 * A place of Q(x): either the finite place attached to a monic
 * irreducible p(x), or the infinite place attached to degree.
 *
 * Irreducibility of the finite-place polynomial is asserted by the
 * caller and not verified; the valuation axioms can fail for a
 * reducible p(x).
 */
class PlaceSpec {
public:
    static PlaceSpec finite(Poly p) {
        if (p.degree() < 1) throw std::invalid_argument("place polynomial must have degree >= 1");
        if (!p.is_monic()) throw std::invalid_argument("place polynomial must be monic");
        return PlaceSpec(std::move(p));
    }
    static PlaceSpec infinite() { return PlaceSpec(); }

    bool is_infinite() const { return !p_.has_value(); }
    const Poly& poly() const {
        if (!p_) throw std::domain_error("infinite place has no polynomial");
        return *p_;
    }

private:
    PlaceSpec() = default;
    explicit PlaceSpec(Poly p) : p_(std::move(p)) {}
    std::optional<Poly> p_;
};

/**
 * Valuation of f/g at the finite place p(x): the multiplicity of p in
 * the numerator minus its multiplicity in the denominator. Infinity
 * for the zero function.
 */
inline ValuationValue vfunc_px(const RationalFunction& rf, const Poly& p) {
    if (p.degree() < 1) throw std::invalid_argument("place polynomial must have degree >= 1");
    if (!p.is_monic()) throw std::invalid_argument("place polynomial must be monic");
    if (rf.is_zero()) return ValuationValue::infinity();
    const long long vn = factor_multiplicity(rf.num(), p);
    const long long vd = factor_multiplicity(rf.den(), p);
    return ValuationValue::finite(vn - vd);
}

/**
 * Valuation at the infinite place: deg(den) - deg(num). Nonnegative
 * exactly on the ring of functions with deg num <= deg den, positive
 * exactly on its maximal ideal (deg num < deg den).
 */
inline ValuationValue vfunc_inf(const RationalFunction& rf) {
    if (rf.is_zero()) return ValuationValue::infinity();
    return ValuationValue::finite(rf.den().degree() - rf.num().degree());
}

struct MembershipReport {
    ValuationValue valuation;
    bool in_ring;          // valuation >= 0
    bool in_maximal_ideal; // valuation > 0
};

// Membership of rf in the valuation ring / maximal ideal of a place.
inline MembershipReport ring_membership(const RationalFunction& rf, const PlaceSpec& place) {
    const ValuationValue v =
        place.is_infinite() ? vfunc_inf(rf) : vfunc_px(rf, place.poly());
    return MembershipReport{
        v,
        v >= ValuationValue::finite(0),
        v > ValuationValue::finite(0),
    };
}

} // namespace ultraspec
