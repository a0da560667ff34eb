#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fibcat/arrowcat.hpp"
#include "fibcat/report.hpp"

namespace fibcat {

// ---------------------------------------------------------------------------
// Adjoint search

enum class UnitMode { identity, iso };

/// Unit and counit of F ⊣ G (or G ⊣ F for a right adjoint search).
struct AdjointWitness {
    Functor adjoint;
    NatTrans unit;    // Id ⇒ R L
    NatTrans counit;  // L R ⇒ Id
};

struct AdjointSearch {
    std::optional<AdjointWitness> witness;
    /// Object of the codomain of G at which no universal arrow was found.
    std::optional<int> failed_at;
};

/// Left adjoint of G: A → X, one initial object of x/G per x. The unit
/// components are constrained by `mode`; when `vertical_over` is given they
/// must also map to identities under it. Ties go to objects satisfying
/// `preferred`, then to an identity unit, then to the least object index.
AdjointSearch search_left_adjoint(const Functor& g, UnitMode mode,
                                  const std::optional<Functor>& vertical_over = std::nullopt,
                                  const std::function<bool(int)>& preferred = {});
/// Right adjoint of G, with the counit constrained by `mode`.
AdjointSearch search_right_adjoint(const Functor& g, UnitMode mode,
                                   const std::optional<Functor>& vertical_over = std::nullopt,
                                   const std::function<bool(int)>& preferred = {});

std::optional<AdjointWitness> find_left_adjoint(const Functor& g, UnitMode mode);
std::optional<AdjointWitness> find_right_adjoint(const Functor& g, UnitMode mode);

// ---------------------------------------------------------------------------
// Chevalley criterion

/// ΦE → p/B, (e0 →m e1) ↦ (e0, p e1, p m).
Functor chevalley_tilde(const Bundle& p);
/// ΦE → B/p, (e0 →m e1) ↦ (p e0, e1, p m).
Functor chevalley_hat(const Bundle& p);

enum class CleavageKind { opcleavage, cleavage };

/// Chosen lifts: for an opcleavage (e, α: pe → b) ↦ supine f out of e over α;
/// for a cleavage (e, α: b → pe) ↦ prone f into e over α. Keys and values are
/// object / morphism indices.
struct Cleavage {
    CleavageKind kind = CleavageKind::opcleavage;
    Bundle bundle;
    std::map<std::pair<int, int>, int> lifts;

    int lift(int e, int alpha) const;
    bool normalized() const;
};

/// Throws InvalidCleavage unless every lift exists, projects to α and has the
/// right endpoint.
void validate_cleavage(const Cleavage& cl);
/// A cleavage of p read as an opcleavage of op p, and vice versa.
Cleavage op_dual(const Cleavage& cl);

struct FibrationResult {
    bool holds = false;
    std::optional<Cleavage> cleavage;
    std::vector<std::string> witnesses;
};

FibrationResult is_opfibration(const Bundle& p);
bool is_pseudo_opfibration(const Bundle& p);
/// Dual criterion through chevalley_hat; throws TheoremViolation if it
/// disagrees with is_opfibration(op p).
FibrationResult is_fibration(const Bundle& p);
bool is_pseudo_fibration(const Bundle& p);

/// Brute-force search for supine lifts straight from the universal property.
/// Shares no code with the adjoint search.
FibrationResult direct_supine_oracle(const Bundle& p);
FibrationResult direct_prone_oracle(const Bundle& p);

// ---------------------------------------------------------------------------
// Pseudoalgebras for L

/// (E, c, ζ, θ) with c: L p → p over the identity, ζ: 1 ⇒ c i and
/// θ: c (L c) ⇒ c (multiplication).
struct PseudoAlgebra {
    Bundle carrier;
    BundleSquare structure;
    BundleTwoCell zeta;
    BundleTwoCell theta;
};

enum class AlgebraKind { lax, pseudo, normalized, strict };
std::string_view to_string(AlgebraKind k) noexcept;
AlgebraKind classify(const PseudoAlgebra& alg);

/// Structure map from an opcleavage: c(e, b, α) = cod of the lift of α at e.
/// Throws InvalidCleavage when a mediator is missing or not unique.
PseudoAlgebra cleavage_to_algebra(const Cleavage& cl);
/// (L p, c, 1, 1).
PseudoAlgebra free_algebra(const Bundle& p);

/// Equations (unit on both sides, associativity coherence), invertibility of
/// ζ and θ, and the downstairs-identity condition. Check ids end in [label].
Report verify_pseudoalgebra(const PseudoAlgebra& alg, const std::string& label = "alg");

/// θ_f: c' (L f) ⇒ f c.
Report verify_lax_homomorphism(const PseudoAlgebra& src, const PseudoAlgebra& tgt, const BundleSquare& f,
                               const BundleTwoCell& theta_f, const std::string& label = "hom");
/// i: p → L p as a lax morphism from `alg` to the free algebra.
std::pair<BundleSquare, BundleTwoCell> unit_as_lax_homomorphism(const PseudoAlgebra& alg);

}  // namespace fibcat
