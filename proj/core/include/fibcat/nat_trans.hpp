#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fibcat/functor.hpp"

namespace fibcat {

/// A natural transformation src ⇒ tgt, one component per object of the domain.
class NatTrans {
public:
    NatTrans() = default;

    /// Throws BoundaryMismatch for mismatched functors and NotNatural when a
    /// component is ill-typed or a naturality square fails.
    static NatTrans make(Functor src, Functor tgt, std::vector<int> components);
    static NatTrans identity(const Functor& f);

    bool valid() const noexcept { return static_cast<bool>(d_); }
    const Functor& src() const { return d_->src; }
    const Functor& tgt() const { return d_->tgt; }
    const CatRef& dom() const { return d_->src.dom(); }
    const CatRef& cod() const { return d_->src.cod(); }
    int component(int x) const { return d_->comp[static_cast<std::size_t>(x)]; }
    const std::vector<int>& components() const { return d_->comp; }
    bool is_identity() const;

    friend bool operator==(const NatTrans& a, const NatTrans& b);

private:
    struct Data {
        Functor src, tgt;
        std::vector<int> comp;
    };
    std::shared_ptr<const Data> d_;
};

/// β ∘ α (vertical).
NatTrans vcompose(const NatTrans& beta, const NatTrans& alpha);
/// F α: components F(α_x).
NatTrans whisker_left(const Functor& f, const NatTrans& alpha);
/// α F: components α_{F x}.
NatTrans whisker_right(const NatTrans& alpha, const Functor& f);
/// β ⋆ α for α: H ⇒ H' and β: K ⇒ K' with dom K = cod H; components β_{H' x} ∘ K(α_x).
NatTrans hcompose(const NatTrans& beta, const NatTrans& alpha);

bool equal_nat(const NatTrans& a, const NatTrans& b);
std::optional<std::string> nat_difference(const NatTrans& a, const NatTrans& b);

std::optional<NatTrans> inverse(const NatTrans& a);
bool is_isomorphism(const NatTrans& a);

/// α: F ⇒ G becomes op G ⇒ op F with the same components.
NatTrans op_dual(const NatTrans& a);

}  // namespace fibcat
