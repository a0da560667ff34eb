#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "fibcat/nat_trans.hpp"

namespace fibcat {

/// A pair of functors out of the two candidate categories into a common one;
/// a functor φ: A → B sought must satisfy second ∘ φ = first.
using LegConstraint = std::pair<Functor, Functor>;

/// Backtracking search for an isomorphism A → B compatible with the legs.
std::optional<Functor> find_isomorphism(const CatRef& a, const CatRef& b,
                                        const std::vector<LegConstraint>& legs = {});

/// All functors A → B compatible with the legs, in a deterministic order, up to `max`.
std::vector<Functor> enumerate_functors(const CatRef& a, const CatRef& b,
                                        const std::vector<LegConstraint>& legs = {},
                                        std::size_t max = std::numeric_limits<std::size_t>::max());

/// All natural transformations F ⇒ G, up to `max`.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g,
                                          std::size_t max = std::numeric_limits<std::size_t>::max());

}  // namespace fibcat
