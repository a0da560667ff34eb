#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fibcat/algebra.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/report.hpp"

namespace fibcat {

/// A 2-endofunctor of the arrow category that keeps the base fixed. The three
/// maps must be pure functions of their arguments.
struct IndexedEndofunctor {
    std::string name;
    std::function<Bundle(const Bundle&)> on_bundle;
    std::function<BundleSquare(const BundleSquare&)> on_square;
    std::function<BundleTwoCell(const BundleTwoCell&)> on_2cell;

    Bundle operator()(const Bundle& p) const { return on_bundle(p); }
    BundleSquare operator()(const BundleSquare& f) const { return on_square(f); }
    BundleTwoCell operator()(const BundleTwoCell& a) const { return on_2cell(a); }
};

IndexedEndofunctor identity_endofunctor();
/// p ↦ π: B×F → B; squares act on the base factor only.
IndexedEndofunctor const_fiber(const CatRef& f, const std::string& label);
/// p ↦ E ×_B ... ×_B E (n factors) → B.
IndexedEndofunctor fiber_power(int n);
/// p ↦ π: B×B → B. Bundle-preserving but not indexed.
IndexedEndofunctor base_square();
/// op ∘ T ∘ op.
IndexedEndofunctor op_conjugate(const IndexedEndofunctor& t);

/// identity, const_fiber:2 and fiber_power:2.
std::vector<IndexedEndofunctor> builtin_functors();
/// "identity", "const_fiber:N" (fibre chain(N)), "fiber_power:N", "base_square".
/// Throws UnknownReference.
IndexedEndofunctor builtin_functor(const std::string& name);

/// Base preservation, 2-functoriality and preservation of prone squares.
Report validate_indexed(const IndexedEndofunctor& t, const Corpus& corpus);

/// ψ_n: T K_n p → K_n T p over the identity; ψ_0 is the identity.
BundleSquare psi_n(const IndexedEndofunctor& t, const Bundle& p, int n);
/// Ψ: L T p → T L p over the identity.
BundleSquare Psi_component(const IndexedEndofunctor& t, const Bundle& p);

struct TransitionData {
    BundleSquare psi1, psi2, Psi;
};
TransitionData transition_data(const IndexedEndofunctor& t, const Bundle& p);

using PsiProvider = std::function<BundleSquare(const Bundle&)>;

/// Unit and multiplication laws for Ψ, its 2-naturality, and the auxiliary
/// ψ equations. `psi` replaces Ψ in the transition laws when given.
Report verify_transition(const IndexedEndofunctor& t, const Corpus& corpus, const PsiProvider& psi = {});

/// (T E, T c ∘ Ψ, T ζ, T θ whiskered by Ψ L ∘ L Ψ).
PseudoAlgebra lift_algebra(const IndexedEndofunctor& t, const PseudoAlgebra& alg, const PsiProvider& psi = {});

enum class PreservationMode { opfibration, pseudo_opfibration, fibration, pseudo_fibration };
std::string_view to_string(PreservationMode m) noexcept;
/// Throws UnknownReference.
PreservationMode parse_mode(const std::string& s);

/// If p satisfies the mode, checks that T p does and exhibits the lifted
/// algebra; otherwise a single vacuous check. Throws TheoremViolation when
/// the conclusion fails.
Report check_preservation(const IndexedEndofunctor& t, const Bundle& p, PreservationMode mode,
                          const std::string& label = "p");

}  // namespace fibcat
