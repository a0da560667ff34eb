#pragma once

#include <functional>
#include <vector>

#include "fibcat/arrowcat.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/report.hpp"

namespace fibcat {

/// L p = p/B over B. Objects comma(e, b, α: p e → b); the bundle is d1.
struct LResult {
    Bundle source;
    CommaResult comma;
    Bundle bundle;

    const Functor& d0() const { return comma.d0; }
    const Functor& d1() const { return comma.d1; }
    const NatTrans& lambda() const { return comma.lambda; }
};

LResult L_obj(const Bundle& p);
/// L on a square f: p → p': (e,b,α) ↦ (↑f e, ↓f b, ↓f α) upstairs, ↓f downstairs.
BundleSquare L_mor(const BundleSquare& f);
/// L on a 2-cell α: component cm(↑α_e, ↓α_b, ↓f β, ↓g β) at (e, b, β).
BundleTwoCell L_2cell(const BundleTwoCell& a);

/// L^n p, L^n f, L^n α by literal re-application.
Bundle L_pow(const Bundle& p, int n);
BundleSquare L_pow(const BundleSquare& f, int n);
BundleTwoCell L_pow(const BundleTwoCell& a, int n);

/// i: p → L p, e ↦ (e, pe, 1).
BundleSquare i_component(const Bundle& p);
/// c: L² p → L p, ((e,b1,α), b2, α1) ↦ (e, b2, α1 α).
BundleSquare c_component(const Bundle& p);

/// Replacement for the multiplication, used to exercise the verifiers.
using CProvider = std::function<BundleSquare(const Bundle&)>;

/// Monad laws, the structural equations of i and c, functoriality of L and
/// 2-naturality of i and c over the corpus squares and 2-cells.
Report verify_L_monad(const Corpus& corpus, const CProvider& c = c_component);

// R side, obtained from L by op-duality: R p = op L(op p). Its objects are
// comma(e, b, α: b → p e) and the bundle is the first projection to B.
struct RResult {
    Bundle source;
    Bundle bundle;  // R p → B
    Functor d0;     // to B
    Functor d1;     // to E
};

RResult R_obj(const Bundle& p);
BundleSquare R_mor(const BundleSquare& f);
BundleTwoCell R_2cell(const BundleTwoCell& a);
BundleSquare iR_component(const Bundle& p);
BundleSquare cR_component(const Bundle& p);
/// B/p built directly as comma(id_B, p), bundle d0.
CommaResult R_direct(const Bundle& p);
/// The relabelling comma(e,b,α) ↦ comma(b,e,α) from the dual construction to
/// the direct one; throws TheoremViolation if it is not an isomorphism over B.
Functor R_comparison(const Bundle& p);

/// K_n p: L^n E → dom L^n(I B), the total part of L^n(cc_p). n ∈ {0, 1, 2}.
Bundle K_n(const Bundle& p, int n);
BundleSquare K_mor(const BundleSquare& f, int n);
/// d0: K_{n+1} p → K_n p.
BundleSquare d0K(const Bundle& p, int n);
/// d1: K_{n+1} p → K_n (L p); identity upstairs.
BundleSquare d1K(const Bundle& p, int n);
/// i: p → K_1 p and c: K_2 p → K_1 p.
BundleSquare iK(const Bundle& p);
BundleSquare cK(const Bundle& p, const CProvider& c = c_component);

Report verify_K_lemmas(const Corpus& corpus, const CProvider& c = c_component);

}  // namespace fibcat
