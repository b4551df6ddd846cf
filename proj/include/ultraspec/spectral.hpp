#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ultraspec/matrix.hpp"
#include "ultraspec/valuation.hpp"
#include "ultraspec/vectors.hpp"

namespace ultraspec {

/**
 * Eigenvalue multiplicity: 0 (not an eigenvalue), a finite count >= 1,
 * or infinite. Profile entries never store 0; the zero state exists
 * only as a query result.
 */
class Multiplicity {
public:
    static Multiplicity zero() { return Multiplicity(Kind::Zero, 0); }
    static Multiplicity finite(unsigned long long n) {
        if (n == 0) return zero();
        return Multiplicity(Kind::Finite, n);
    }
    static Multiplicity infinite() { return Multiplicity(Kind::Infinite, 0); }

    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_finite() const { return kind_ != Kind::Infinite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }

    unsigned long long count() const {
        if (is_infinite()) throw std::domain_error("count of infinite multiplicity");
        return n_;
    }

    Multiplicity operator+(const Multiplicity& o) const {
        if (is_infinite() || o.is_infinite()) return infinite();
        return finite(n_ + o.n_);
    }

    bool operator==(const Multiplicity& o) const { return kind_ == o.kind_ && n_ == o.n_; }
    bool operator!=(const Multiplicity& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_infinite()) return "inf";
        return std::to_string(n_);
    }

private:
    enum class Kind { Zero, Finite, Infinite };
    Multiplicity(Kind k, unsigned long long n) : kind_(k), n_(n) {}
    Kind kind_;
    unsigned long long n_;
};

struct ExplicitEntry {
    Rational value;
    Multiplicity mult;
};

// Finitely many listed eigenvalues with multiplicities.
struct ExplicitProfile {
    std::vector<ExplicitEntry> entries;
};

/**
 * The family lambda_i = c * alpha^i for i = 0, 1, 2, ... with
 * |alpha|_p < 1, so the members are pairwise distinct, each of
 * multiplicity one, and accumulate exactly at 0.
 */
struct GeometricFamily {
    PAdicContext ctx;
    Rational c;
    Rational alpha;
    std::size_t count_hint = 0; // display/probe prefix length, not a truncation
};

class SpectralProfile;

// Disjoint-union of sub-profiles; multiplicities at shared values add.
// Accumulation points beyond the analytically known ones must be
// declared and are validated by prefix sampling.
struct UnionProfile {
    std::vector<SpectralProfile> parts;
    std::vector<Rational> declared_accumulation;
};

/**
 * Symbolic description of the eigenvalue family of a diagonal
 * operator D(u) = sum_i lambda_i u_i e_i. Infinite index sets are
 * never enumerated; anything truncation-dependent takes an explicit t.
 */
class SpectralProfile {
public:
    using Variant = std::variant<ExplicitProfile, GeometricFamily, UnionProfile>;

    static SpectralProfile explicit_profile(std::vector<ExplicitEntry> entries) {
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].mult.is_zero())
                throw std::invalid_argument("explicit entry with zero multiplicity");
            for (std::size_t j = i + 1; j < entries.size(); ++j)
                if (entries[i].value == entries[j].value)
                    throw std::invalid_argument("explicit entries must have distinct values");
        }
        return SpectralProfile(ExplicitProfile{std::move(entries)});
    }

    static SpectralProfile geometric(PAdicContext ctx, Rational c, Rational alpha,
                                     std::size_t count_hint) {
        if (c.is_zero()) throw std::invalid_argument("geometric family needs c != 0");
        if (alpha.is_zero() || vp_rat(ctx, alpha) < ValuationValue::finite(1))
            throw std::invalid_argument("geometric family needs |alpha|_p < 1");
        return SpectralProfile(GeometricFamily{std::move(ctx), std::move(c), std::move(alpha), count_hint});
    }

    static SpectralProfile union_profile(std::vector<SpectralProfile> parts,
                                         std::vector<Rational> declared_accumulation);

    const Variant& v() const { return v_; }

    bool is_explicit() const { return std::holds_alternative<ExplicitProfile>(v_); }
    bool is_geometric() const { return std::holds_alternative<GeometricFamily>(v_); }
    bool is_union() const { return std::holds_alternative<UnionProfile>(v_); }

    const ExplicitProfile& as_explicit() const { return std::get<ExplicitProfile>(v_); }
    const GeometricFamily& as_geometric() const { return std::get<GeometricFamily>(v_); }
    const UnionProfile& as_union() const { return std::get<UnionProfile>(v_); }

private:
    explicit SpectralProfile(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/**
 * Kernel dimension of lambda*I - D: the number of indices i with
 * lambda_i = lambda. For the geometric family the valuation equation
 * v(lambda) - v(c) = i * v(alpha) pins the only candidate exponent,
 * which is then verified exactly.
 */
inline Multiplicity multiplicity(const SpectralProfile& profile, const Rational& lam) {
    if (profile.is_explicit()) {
        for (const auto& e : profile.as_explicit().entries)
            if (e.value == lam) return e.mult;
        return Multiplicity::zero();
    }
    if (profile.is_geometric()) {
        const GeometricFamily& g = profile.as_geometric();
        if (lam.is_zero()) return Multiplicity::zero(); // members are all nonzero
        const Rational q = lam / g.c;
        const long long va = vp_rat(g.ctx, g.alpha).exponent(); // >= 1 by invariant
        const long long vq = vp_rat(g.ctx, q).exponent();
        if (vq < 0 || vq % va != 0) return Multiplicity::zero();
        if (pow_rational(g.alpha, vq / va) == q) return Multiplicity::finite(1);
        return Multiplicity::zero();
    }
    Multiplicity total = Multiplicity::zero();
    for (const auto& part : profile.as_union().parts) total = total + multiplicity(part, lam);
    return total;
}

/**
 * Cokernel dimension of lambda*I - D, computed through the image
 * characterization: Im(lambda*I - D) is spanned by the e_k with
 * lambda_k != lambda, so the defect counts the complementary indices.
 * Deliberately a different route from multiplicity() — geometric
 * families are scanned member by member until the valuation outgrows
 * v(lambda) — so the two can be asserted equal.
 */
inline Multiplicity cokernel_dim(const SpectralProfile& profile, const Rational& lam) {
    if (profile.is_explicit()) {
        Multiplicity missing = Multiplicity::zero();
        for (const auto& e : profile.as_explicit().entries) {
            const bool in_image = (e.value != lam);
            if (!in_image) missing = missing + e.mult;
        }
        return missing;
    }
    if (profile.is_geometric()) {
        const GeometricFamily& g = profile.as_geometric();
        if (lam.is_zero()) return Multiplicity::zero();
        const ValuationValue vlam = vp_rat(g.ctx, lam);
        unsigned long long missing = 0;
        Rational member = g.c;
        while (vp_rat(g.ctx, member) <= vlam) { // valuations strictly increase with i
            if (member == lam) ++missing;
            member *= g.alpha;
        }
        return Multiplicity::finite(missing);
    }
    Multiplicity total = Multiplicity::zero();
    for (const auto& part : profile.as_union().parts) total = total + cokernel_dim(part, lam);
    return total;
}

// Parameterized infinite member family, for set descriptions.
struct FamilyDesc {
    Int p;
    Rational c;
    Rational alpha;
    std::size_t count_hint;
};

/**
 * A possibly-infinite subset of Q described exactly: finitely many
 * listed members plus finitely many geometric families.
 */
struct SetDescription {
    std::vector<Rational> listed;     // sorted, distinct
    std::vector<FamilyDesc> families; // each contributes {c * alpha^i : i >= 0}

    bool is_finite() const { return families.empty(); }
};

namespace detail {

inline void sort_unique(std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool sorted_contains(const std::vector<Rational>& v, const Rational& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

inline void collect_eigen_description(const SpectralProfile& profile, SetDescription& out) {
    if (profile.is_explicit()) {
        for (const auto& e : profile.as_explicit().entries) out.listed.push_back(e.value);
    } else if (profile.is_geometric()) {
        const GeometricFamily& g = profile.as_geometric();
        out.families.push_back(FamilyDesc{g.ctx.p(), g.c, g.alpha, g.count_hint});
    } else {
        for (const auto& part : profile.as_union().parts) collect_eigen_description(part, out);
    }
}

inline void collect_geometric_parts(const SpectralProfile& profile,
                                    std::vector<const GeometricFamily*>& out) {
    if (profile.is_geometric()) {
        out.push_back(&profile.as_geometric());
    } else if (profile.is_union()) {
        for (const auto& part : profile.as_union().parts) collect_geometric_parts(part, out);
    }
}

inline void collect_declared_accumulation(const SpectralProfile& profile,
                                          std::vector<Rational>& out) {
    if (profile.is_union()) {
        const UnionProfile& u = profile.as_union();
        out.insert(out.end(), u.declared_accumulation.begin(), u.declared_accumulation.end());
        for (const auto& part : u.parts) collect_declared_accumulation(part, out);
    }
}

} // namespace detail

// Eigenvalue set Lambda as a description (listed values + families).
inline SetDescription eigenvalue_set(const SpectralProfile& profile) {
    SetDescription out;
    detail::collect_eigen_description(profile, out);
    detail::sort_unique(out.listed);
    return out;
}

struct AccumulationReport {
    std::vector<Rational> points; // sorted, distinct
    std::vector<std::string> warnings;
};

/**
 * Accumulation points of the eigenvalue family. Geometric families
 * contribute {0} analytically (|c*alpha^i| -> 0). Declared points on
 * union profiles are validated by sampling member prefixes: a declared
 * point nothing approaches within p^(-8) draws a warning, since
 * accumulation cannot be decided from finite data.
 */
inline AccumulationReport accumulation_points(const SpectralProfile& profile) {
    AccumulationReport rep;

    std::vector<const GeometricFamily*> geoms;
    detail::collect_geometric_parts(profile, geoms);
    if (!geoms.empty()) rep.points.push_back(Rational(0));

    std::vector<Rational> declared;
    detail::collect_declared_accumulation(profile, declared);
    detail::sort_unique(declared);

    for (const Rational& d : declared) {
        bool approached = false;
        for (const GeometricFamily* g : geoms) {
            // Sample far enough that valuations can clear v(d) + 8.
            const long long vc = vp_rat(g->ctx, g->c).exponent();
            long long need = 16 + (vc < 0 ? -vc : 0);
            if (!d.is_zero()) need += std::max(0LL, vp_rat(g->ctx, d).exponent());
            const std::size_t bound =
                std::max<std::size_t>(g->count_hint, static_cast<std::size_t>(need));
            Rational member = g->c;
            for (std::size_t i = 0; i < bound && !approached; ++i) {
                if (member != d && vp_rat(g->ctx, member - d) >= ValuationValue::finite(8))
                    approached = true;
                member *= g->alpha;
            }
            if (approached) break;
        }
        rep.points.push_back(d);
        if (!approached)
            rep.warnings.push_back("declared accumulation point " + d.to_string() +
                                   " not approached within sampled prefix");
    }

    detail::sort_unique(rep.points);
    return rep;
}

inline SpectralProfile SpectralProfile::union_profile(std::vector<SpectralProfile> parts,
                                                      std::vector<Rational> declared_accumulation) {
    SpectralProfile p(UnionProfile{std::move(parts), std::move(declared_accumulation)});
    for (const Rational& d : p.as_union().declared_accumulation)
        if (!multiplicity(p, d).is_zero())
            throw std::invalid_argument("declared accumulation point is an eigenvalue");
    return p;
}

enum class SpectralClass {
    Resolvent,                    // mult 0, lambda outside the closure: invertible
    EigenvalueIndexZero,          // finite mult >= 1: Fredholm of index 0
    BoundaryEssential,            // mult 0 but in the closure: injective, not surjective
    InfiniteMultiplicityEssential // infinite mult
};

inline std::string to_string(SpectralClass c) {
    switch (c) {
        case SpectralClass::Resolvent: return "resolvent";
        case SpectralClass::EigenvalueIndexZero: return "eigenvalue-index-zero";
        case SpectralClass::BoundaryEssential: return "boundary-essential";
        case SpectralClass::InfiniteMultiplicityEssential: return "infinite-multiplicity-essential";
    }
    throw std::logic_error("unreachable");
}

struct FredholmStatus {
    Multiplicity eta;   // kernel dimension
    Multiplicity delta; // cokernel dimension
    SpectralClass cls;
    bool index_zero;    // Fredholm of index 0; false means not Fredholm of index 0
};

/**
 * Classification of lambda*I - D. Kernel and cokernel dimensions come
 * from independent routes and must agree (eta = delta: both count
 * {e_i : lambda_i = lambda}). Fredholm of index 0 holds exactly for
 * finite multiplicity away from the boundary: at a boundary point
 * (closure minus members) the operator is injective with non-closed
 * dense range, at infinite multiplicity the kernel is too big.
 */
inline FredholmStatus fredholm_status(const SpectralProfile& profile, const Rational& lam) {
    const Multiplicity eta = multiplicity(profile, lam);
    const Multiplicity delta = cokernel_dim(profile, lam);
    if (eta != delta) throw std::logic_error("kernel/cokernel dimension mismatch");

    if (eta.is_infinite())
        return FredholmStatus{eta, delta, SpectralClass::InfiniteMultiplicityEssential, false};
    if (!eta.is_zero())
        return FredholmStatus{eta, delta, SpectralClass::EigenvalueIndexZero, true};

    const AccumulationReport acc = accumulation_points(profile);
    if (detail::sorted_contains(acc.points, lam))
        return FredholmStatus{eta, delta, SpectralClass::BoundaryEssential, false};
    return FredholmStatus{eta, delta, SpectralClass::Resolvent, true};
}

// Closure of the eigenvalue set: members plus accumulation points.
inline SetDescription closure_points(const SpectralProfile& profile) {
    SetDescription out = eigenvalue_set(profile);
    const AccumulationReport acc = accumulation_points(profile);
    out.listed.insert(out.listed.end(), acc.points.begin(), acc.points.end());
    detail::sort_unique(out.listed);
    return out;
}

struct ValueStatus {
    Rational lam;
    FredholmStatus status;
};

struct SpectrumReport {
    SetDescription point_spectrum;            // sigma_p = Lambda
    std::vector<Rational> sigma_e_prime;      // closure(Lambda) - Lambda
    std::vector<Rational> sigma_e_double_prime; // infinite-multiplicity eigenvalues
    std::vector<Rational> sigma_e;            // union of the two parts
    SetDescription sigma;                     // closure(Lambda)
    std::vector<ValueStatus> statuses;        // per probed value
    std::vector<std::string> warnings;
};

namespace detail {

inline void collect_probe_values(const SpectralProfile& profile, std::vector<Rational>& out) {
    if (profile.is_explicit()) {
        for (const auto& e : profile.as_explicit().entries) out.push_back(e.value);
    } else if (profile.is_geometric()) {
        const GeometricFamily& g = profile.as_geometric();
        Rational member = g.c;
        for (std::size_t i = 0; i < g.count_hint; ++i) {
            out.push_back(member);
            member *= g.alpha;
        }
    } else {
        for (const auto& part : profile.as_union().parts) collect_probe_values(part, out);
    }
}

inline void collect_infinite_mult_values(const SpectralProfile& profile, std::vector<Rational>& out) {
    if (profile.is_explicit()) {
        for (const auto& e : profile.as_explicit().entries)
            if (e.mult.is_infinite()) out.push_back(e.value);
    } else if (profile.is_union()) {
        for (const auto& part : profile.as_union().parts) collect_infinite_mult_values(part, out);
    }
    // geometric members all have multiplicity one
}

} // namespace detail

/**
 * Full spectral decomposition of the diagonal operator described by
 * the profile:
 *
 *   sigma    = closure(Lambda)
 *   sigma_p  = Lambda
 *   sigma'_e = closure(Lambda) - Lambda       (boundary)
 *   sigma''_e = {lambda : multiplicity infinite}
 *   sigma_e  = sigma'_e  U  sigma''_e
 *
 * The parts are disjoint by construction (boundary points are not
 * members; infinite-multiplicity points are). Statuses are evaluated
 * at every listed value, at count_hint members of each geometric
 * family, and at every accumulation point.
 */
inline SpectrumReport spectrum_report(const SpectralProfile& profile) {
    SpectrumReport rep;
    rep.point_spectrum = eigenvalue_set(profile);

    const AccumulationReport acc = accumulation_points(profile);
    rep.warnings = acc.warnings;

    rep.sigma = rep.point_spectrum;
    rep.sigma.listed.insert(rep.sigma.listed.end(), acc.points.begin(), acc.points.end());
    detail::sort_unique(rep.sigma.listed);

    // Boundary: accumulation points that are not themselves eigenvalues.
    for (const Rational& a : acc.points)
        if (multiplicity(profile, a).is_zero()) rep.sigma_e_prime.push_back(a);
    detail::sort_unique(rep.sigma_e_prime);

    detail::collect_infinite_mult_values(profile, rep.sigma_e_double_prime);
    detail::sort_unique(rep.sigma_e_double_prime);

    rep.sigma_e = rep.sigma_e_prime;
    rep.sigma_e.insert(rep.sigma_e.end(), rep.sigma_e_double_prime.begin(),
                       rep.sigma_e_double_prime.end());
    detail::sort_unique(rep.sigma_e);

    for (const Rational& b : rep.sigma_e_double_prime)
        if (detail::sorted_contains(rep.sigma_e_prime, b))
            throw std::logic_error("essential spectrum parts not disjoint");

    std::vector<Rational> probes;
    detail::collect_probe_values(profile, probes);
    probes.insert(probes.end(), acc.points.begin(), acc.points.end());
    detail::sort_unique(probes);
    for (const Rational& lam : probes)
        rep.statuses.push_back(ValueStatus{lam, fredholm_status(profile, lam)});

    return rep;
}

/**
 * Spectral report for a finite-rank diagonal operator: all but
 * finitely many diagonal entries vanish, so the profile must carry the
 * entry (0, infinite) plus finitely many nonzero values of finite
 * multiplicity. Consequences checked here: the spectrum is the finite
 * set of diagonal values, every nonzero eigenvalue is Fredholm of
 * index 0, and the essential spectrum is exactly {0}.
 */
inline SpectrumReport finite_rank_diag_report(const SpectralProfile& profile) {
    if (!profile.is_explicit())
        throw std::invalid_argument("not a finite-rank diagonal profile");
    bool has_zero_infinite = false;
    for (const auto& e : profile.as_explicit().entries) {
        if (e.value.is_zero() && e.mult.is_infinite()) has_zero_infinite = true;
        else if (e.mult.is_infinite())
            throw std::invalid_argument("not a finite-rank diagonal profile");
    }
    if (!has_zero_infinite)
        throw std::invalid_argument("not a finite-rank diagonal profile");

    SpectrumReport rep = spectrum_report(profile);
    if (!rep.sigma.is_finite() || rep.sigma.listed != rep.point_spectrum.listed)
        throw std::logic_error("finite-rank spectrum must be the finite eigenvalue set");
    if (rep.sigma_e != std::vector<Rational>{Rational(0)})
        throw std::logic_error("finite-rank essential spectrum must be {0}");
    for (const auto& vs : rep.statuses)
        if (!vs.lam.is_zero() && !vs.status.index_zero)
            throw std::logic_error("nonzero eigenvalue of a finite-rank diagonal must be index 0");
    return rep;
}

// Total number of diagonal slots, when finite.
inline std::optional<std::size_t> support_bound(const SpectralProfile& profile) {
    if (profile.is_explicit()) {
        std::size_t total = 0;
        for (const auto& e : profile.as_explicit().entries) {
            if (e.mult.is_infinite()) return std::nullopt;
            total += static_cast<std::size_t>(e.mult.count());
        }
        return total;
    }
    if (profile.is_geometric()) return std::nullopt;
    std::size_t total = 0;
    for (const auto& part : profile.as_union().parts) {
        const auto b = support_bound(part);
        if (!b) return std::nullopt;
        total += *b;
    }
    return total;
}

/**
 * Streams the diagonal entries lambda_0, lambda_1, ... realized from a
 * profile. Explicit profiles emit their finite entries first, in
 * declaration order with repetition, then cycle the infinite-
 * multiplicity values round-robin (the pairing that hands each such
 * value countably many slots). Union parts are interleaved round-robin
 * with exhausted parts skipped.
 */
class ProfileStream {
public:
    explicit ProfileStream(const SpectralProfile& profile) {
        if (profile.is_explicit()) {
            const auto& es = profile.as_explicit().entries;
            for (const auto& e : es)
                if (e.mult.is_finite())
                    for (unsigned long long k = 0; k < e.mult.count(); ++k)
                        finite_queue_.push_back(e.value);
            for (const auto& e : es)
                if (e.mult.is_infinite()) cycle_.push_back(e.value);
        } else if (profile.is_geometric()) {
            geom_ = profile.as_geometric();
            member_ = geom_->c;
        } else {
            for (const auto& part : profile.as_union().parts)
                children_.push_back(std::make_unique<ProfileStream>(part));
        }
    }

    std::optional<Rational> next() {
        if (geom_) {
            Rational out = member_;
            member_ *= geom_->alpha;
            return out;
        }
        if (!children_.empty()) {
            for (std::size_t tries = 0; tries < children_.size(); ++tries) {
                auto& child = children_[child_at_];
                child_at_ = (child_at_ + 1) % children_.size();
                if (auto v = child->next()) return v;
            }
            return std::nullopt;
        }
        if (!finite_queue_.empty()) {
            Rational out = finite_queue_.front();
            finite_queue_.pop_front();
            return out;
        }
        if (!cycle_.empty()) {
            Rational out = cycle_[cycle_at_];
            cycle_at_ = (cycle_at_ + 1) % cycle_.size();
            return out;
        }
        return std::nullopt;
    }

private:
    std::deque<Rational> finite_queue_;
    std::vector<Rational> cycle_;
    std::size_t cycle_at_ = 0;
    std::optional<GeometricFamily> geom_;
    Rational member_;
    std::vector<std::unique_ptr<ProfileStream>> children_;
    std::size_t child_at_ = 0;
};

// First t diagonal entries of the realized operator.
inline std::vector<Rational> realize_prefix(const SpectralProfile& profile, std::size_t t) {
    ProfileStream s(profile);
    std::vector<Rational> out;
    out.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        auto v = s.next();
        if (!v) throw std::invalid_argument("truncation exceeds profile support");
        out.push_back(std::move(*v));
    }
    return out;
}

struct DualityReport {
    std::vector<std::size_t> kernel_indices;
    std::vector<std::size_t> range_indices;
    bool ok;
};

/**
 * Truncated range/kernel duality for the diagonal operator: within the
 * first t coordinates, the kernel of lambda*I - D is spanned by the
 * e_i with lambda_i = lambda and the range by the e_k with
 * lambda_k != lambda, so the range must be the coordinate complement
 * of the kernel. Checked three ways: by index sets, by exact
 * orthogonality of the spanning vectors, and by rank/kernel
 * computations on the truncated matrix.
 */
inline DualityReport range_equals_kernel_perp(const SpectralProfile& profile, const Rational& lam,
                                             std::size_t t) {
    const std::vector<Rational> lambda = realize_prefix(profile, t);

    DualityReport rep;
    for (std::size_t i = 0; i < t; ++i) {
        if (lambda[i] == lam) rep.kernel_indices.push_back(i);
        else rep.range_indices.push_back(i);
    }

    const CoordSubspace kernel(t, rep.kernel_indices);
    rep.ok = kernel.complement().indices() == rep.range_indices;

    // The split must be orthogonal under the coordinate form.
    for (std::size_t i : rep.kernel_indices)
        for (std::size_t k : rep.range_indices)
            if (!inner_t(basis_vector(t, i), basis_vector(t, k)).is_zero()) rep.ok = false;

    // Cross-check against elimination on the truncated matrix.
    Matrix m(t, t);
    for (std::size_t i = 0; i < t; ++i) m.at(i, i) = lam - lambda[i];
    if (bareiss_rank(m) != rep.range_indices.size()) rep.ok = false;
    const auto kb = kernel_basis(m);
    if (kb.size() != rep.kernel_indices.size()) rep.ok = false;
    for (const Vec& x : kb)
        if (!kernel.contains(x)) rep.ok = false;

    return rep;
}

} // namespace ultraspec
