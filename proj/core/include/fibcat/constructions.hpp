#pragma once

#include <string>

#include "fibcat/nat_trans.hpp"
#include "fibcat/report.hpp"

namespace fibcat {

/// A commuting square f ∘ proj0 = g ∘ proj1 over the cospan (f, g). When built
/// by pullback() the apex is the canonical one with objects pb(a,b).
struct PullbackResult {
    Functor f, g;
    CatRef apex;
    Functor proj0, proj1;

    /// Wrap an arbitrary commuting square; throws SquareDoesNotCommute.
    static PullbackResult cone(Functor f, Functor g, Functor proj0, Functor proj1);
};

PullbackResult pullback(const Functor& f, const Functor& g);
/// A × B as the pullback over 1.
PullbackResult product(const CatRef& a, const CatRef& b);

/// The unique m: X → apex with proj0 m = q0 and proj1 m = q1. Throws
/// SquareDoesNotCommute if f q0 ≠ g q1, NotAPullback if `pb` admits no unique
/// fill-in.
Functor mediate_pullback(const PullbackResult& pb, const Functor& q0, const Functor& q1);

/// Comparison p2.apex → p1.apex for two cones over the same cospan; throws
/// NotAPullback unless it is an isomorphism.
Functor pullback_comparison(const PullbackResult& p1, const PullbackResult& p2);

/// The comma category r/s with objects comma(a,b,σ: r a → s b) and morphisms
/// cm(ξ,η,σ,σ') satisfying s(η) σ = σ' r(ξ).
struct CommaResult {
    Functor r, s;
    CatRef apex;
    Functor d0, d1;
    NatTrans lambda;  // r d0 ⇒ s d1, component σ at comma(a,b,σ)
};

Term comma_object(const Term& a, const Term& b, const Term& sigma);
Term comma_morphism(const Term& xi, const Term& eta, const Term& sigma, const Term& sigma2);

CommaResult comma(const Functor& r, const Functor& s);
/// ΦA = id/id; its objects are the morphisms of A.
CommaResult phi(const CatRef& a);

/// Data (u0, u1, σ) of a functor into the comma apex.
struct CommaCone {
    Functor u0, u1;
    NatTrans sigma;  // r u0 ⇒ s u1
};

Functor mediate_comma(const CommaResult& cr, const CommaCone& cone);
CommaCone comma_extract(const CommaResult& cr, const Functor& f);

/// The unique φ: f ⇒ g with d0 φ = ξ and d1 φ = η. Throws PastingMismatch when
/// (λ g)(r ξ) ≠ (s η)(λ f).
NatTrans mediate_comma_2cell(const CommaResult& cr, const Functor& f, const Functor& g, const NatTrans& xi,
                             const NatTrans& eta);

/// Universal property of a comma object tested against every functor and
/// 2-cell from the stages 1, 2 and 1+1 (bounded enumeration): mediation and
/// extraction are mutually inverse both ways, and 2-cells are determined by
/// their projections. Check ids end in [label].
Report verify_comma_universality(const CommaResult& cr, const std::string& label);

/// A span A ⇸ B: legs leg0: S → A, leg1: S → B.
struct Span {
    Functor leg0, leg1;
    const CatRef& apex() const { return leg0.dom(); }
};

Span identity_span(const CatRef& a);
/// T ∘ S via the pullback of S.leg1 and T.leg0.
Span span_compose(const Span& s, const Span& t);

}  // namespace fibcat
