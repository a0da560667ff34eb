#pragma once

// A deliberately wrong multiplication used to show the law checks have teeth.
// On bundles of the form id_B it forgets the first leg of a doubly iterated
// comma object: c'(x, b2, a1) = (d1 x, b2, a1). Elsewhere it defers to the
// real multiplication.

#include "fibcat/street.hpp"
#include "fibcat/transport.hpp"

namespace mutation {

using namespace fibcat;

inline BundleSquare forgetful_c(const Bundle& p) {
    if (!is_isomorphism(p.proj) || !(p.proj == Functor::identity(p.base()))) return c_component(p);
    const LResult l1 = L_obj(p);
    const LResult l2 = L_obj(l1.bundle);
    Functor up = Functor::from_terms(
        l2.bundle.total(), l1.bundle.total(),
        [](const Term& x) { return comma_object(x.arg(0).arg(1), x.arg(1), x.arg(2)); },
        [](const Term& m) { return comma_morphism(m.arg(0).arg(1), m.arg(1), m.arg(2), m.arg(3)); });
    return BundleSquare(l2.bundle, l1.bundle, up, Functor::identity(p.base()));
}

// The transition map precomposed with the automorphism of L(T q) that
// multiplies every comma arrow by the generator g1 of the base Z/2.
// Breaks the unit law. Bundles over other bases get the real transition.
inline PsiProvider twisted_psi(const IndexedEndofunctor& t) {
    return [t](const Bundle& q) {
        BundleSquare psi = Psi_component(t, q);
        const Category& b = *q.base();
        if (b.num_objects() != 1 || b.num_morphisms() != 2) return psi;
        const Term g = b.morphism(b.identity(0) == 0 ? 1 : 0);
        const auto times_g = [&b, g](const Term& a) { return b.morphism(b.compose(b.morphism_index(g), b.morphism_index(a))); };
        const Bundle ltq = psi.src();
        Functor sigma = Functor::from_terms(
            ltq.total(), ltq.total(),
            [&](const Term& x) { return comma_object(x.arg(0), x.arg(1), times_g(x.arg(2))); },
            [&](const Term& m) { return comma_morphism(m.arg(0), m.arg(1), times_g(m.arg(2)), times_g(m.arg(3))); });
        return compose(psi, BundleSquare(ltq, ltq, sigma, Functor::identity(q.base())));
    };
}

}  // namespace mutation
