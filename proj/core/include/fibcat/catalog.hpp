#pragma once

#include <string>
#include <vector>

#include "fibcat/functor.hpp"

namespace fibcat {

/// The terminal category 1: one object `*`.
CatRef terminal();
/// Discrete category on the given object names.
CatRef discrete(const std::vector<Term>& objects);
/// Discrete category on 0..n-1.
CatRef discrete(int n);
/// Walking arrow 2: objects 0, 1 and a: 0 → 1.
CatRef walking_arrow();
/// Chain 0 ≤ 1 ≤ … ≤ n-1; non-identity arrows named le(i,j).
CatRef chain(int n);
/// Walking isomorphism: u: 0 → 1, v: 1 → 0, mutually inverse.
CatRef walking_iso();
/// One-object category `*` with the cyclic group Z/n; generator powers named g1 … g(n-1).
CatRef cyclic_group(int n);
/// One-object category `*` with a single non-identity idempotent e.
CatRef idempotent_monoid();

/// The functor 1 → C picking object x.
Functor point(const CatRef& c, int x);
/// The unique functor C → 1.
Functor to_terminal(const CatRef& c);

Term atom(const std::string& s);

}  // namespace fibcat
