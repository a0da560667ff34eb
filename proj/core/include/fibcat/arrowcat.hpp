#pragma once

#include <optional>
#include <string>

#include "fibcat/constructions.hpp"

namespace fibcat {

/// An object of the arrow 2-category: a functor p: E → B.
struct Bundle {
    Functor proj;

    const CatRef& total() const { return proj.dom(); }
    const CatRef& base() const { return proj.cod(); }

    friend bool operator==(const Bundle& a, const Bundle& b) { return a.proj == b.proj; }
};

/// A 1-cell p → p': functors up: E → E', down: B → B' with p' up = down p.
class BundleSquare {
public:
    BundleSquare() = default;
    /// Throws BoundaryMismatch / SquareDoesNotCommute.
    BundleSquare(Bundle src, Bundle tgt, Functor up, Functor down);

    const Bundle& src() const { return src_; }
    const Bundle& tgt() const { return tgt_; }
    const Functor& up() const { return up_; }
    const Functor& down() const { return down_; }

    friend bool operator==(const BundleSquare& a, const BundleSquare& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.up_ == b.up_ && a.down_ == b.down_;
    }

private:
    Bundle src_, tgt_;
    Functor up_, down_;
};

/// A 2-cell f ⇒ g between parallel squares, with p' up = down p.
class BundleTwoCell {
public:
    BundleTwoCell() = default;
    BundleTwoCell(BundleSquare src, BundleSquare tgt, NatTrans up, NatTrans down);

    const BundleSquare& src() const { return src_; }
    const BundleSquare& tgt() const { return tgt_; }
    const NatTrans& up() const { return up_; }
    const NatTrans& down() const { return down_; }
    bool is_identity() const { return up_.is_identity() && down_.is_identity(); }

    friend bool operator==(const BundleTwoCell& a, const BundleTwoCell& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.up_ == b.up_ && a.down_ == b.down_;
    }

private:
    BundleSquare src_, tgt_;
    NatTrans up_, down_;
};

BundleSquare identity_square(const Bundle& p);
/// g ∘ f.
BundleSquare compose(const BundleSquare& g, const BundleSquare& f);
bool equal_square(const BundleSquare& f, const BundleSquare& g);
std::optional<std::string> square_difference(const BundleSquare& f, const BundleSquare& g);
std::optional<BundleSquare> inverse(const BundleSquare& f);
bool is_isomorphism(const BundleSquare& f);

BundleTwoCell identity_2cell(const BundleSquare& f);
/// β ∘ α.
BundleTwoCell vcompose(const BundleTwoCell& beta, const BundleTwoCell& alpha);
/// h α: post-whiskering by a square.
BundleTwoCell whisker_left(const BundleSquare& h, const BundleTwoCell& alpha);
/// α h: pre-whiskering by a square.
BundleTwoCell whisker_right(const BundleTwoCell& alpha, const BundleSquare& h);
bool equal_2cell(const BundleTwoCell& a, const BundleTwoCell& b);
std::optional<std::string> two_cell_difference(const BundleTwoCell& a, const BundleTwoCell& b);
std::optional<BundleTwoCell> inverse(const BundleTwoCell& a);

/// Whether the square is a pullback: the comparison to the canonical
/// pullback of (down, tgt.proj) is invertible.
bool is_prone(const BundleSquare& f);
/// Whether up is invertible.
bool is_supine(const BundleSquare& f);

struct VerticalProne {
    BundleSquare vert;   // over the identity of the base
    BundleSquare prone;  // the pullback square f*E' → E'
};
VerticalProne vertical_prone_factorize(const BundleSquare& f);

/// The fibre of p over b: pullback of p along the point b: 1 → B.
CatRef fibre(const Bundle& p, const Term& b);

/// For prone f: p → p', the unique h: q → p with f h = g and down h = h'.
/// Throws NotProne if f is not prone, IncompatibleData if down g ≠ down f ∘ h'.
BundleSquare prone_fill(const BundleSquare& f, const BundleSquare& g, const Functor& h_down);

/// For prone f, α: g1 ⇒ g2 into p' and β': h'1 ⇒ h'2 with ↓α = ↓f β', the
/// unique β: h1 ⇒ h2 (h_i the prone fills) with f β = α and ↓β = β'.
BundleTwoCell lift_2cell_prone(const BundleSquare& f, const BundleTwoCell& alpha, const NatTrans& beta_down);

/// I B: the identity bundle on B.
Bundle I_of(const CatRef& b);
/// (p, id): p → I B.
BundleSquare cc_square(const Bundle& p);
/// I applied to a functor: (g, g): I B → I B'.
BundleSquare I_of(const Functor& g);
/// I applied to a 2-cell.
BundleTwoCell I_of(const NatTrans& a);
/// cod(cc_p) composed with cod I = Id is the identity of cod p.
bool check_yanking(const Bundle& p);

/// Opposite bundle op p: op E → op B.
Bundle op_dual(const Bundle& p);
BundleSquare op_dual(const BundleSquare& f);
/// op reverses 2-cells: α: f ⇒ g becomes op g ⇒ op f.
BundleTwoCell op_dual(const BundleTwoCell& a);

}  // namespace fibcat
