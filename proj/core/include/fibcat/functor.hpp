#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "fibcat/category.hpp"

namespace fibcat {

/// A functor between finite categories, stored as index maps.
///
/// Construction validates the functor laws exhaustively. Copies share the
/// underlying maps.
class Functor {
public:
    Functor() = default;

    /// Throws Error(NotAFunctor) naming the first offending element.
    static Functor make(CatRef dom, CatRef cod, std::vector<int> obj_map, std::vector<int> mor_map);
    /// Maps given on names; unknown images raise UnknownObject / UnknownMorphism.
    static Functor from_terms(CatRef dom, CatRef cod, const std::function<Term(const Term&)>& on_obj,
                              const std::function<Term(const Term&)>& on_mor);
    /// No validation; for maps that are functors by construction.
    static Functor unchecked(CatRef dom, CatRef cod, std::vector<int> obj_map, std::vector<int> mor_map);
    static Functor identity(CatRef c);
    /// Constant functor at object `x` of `cod`.
    static Functor constant(CatRef dom, CatRef cod, int x);

    bool valid() const noexcept { return static_cast<bool>(d_); }
    const CatRef& dom() const { return d_->dom; }
    const CatRef& cod() const { return d_->cod; }
    int obj(int x) const { return d_->obj[static_cast<std::size_t>(x)]; }
    int mor(int m) const { return d_->mor[static_cast<std::size_t>(m)]; }
    const Term& obj(const Term& x) const { return cod()->object(obj(dom()->object_index(x))); }
    const Term& mor(const Term& m) const { return cod()->morphism(mor(dom()->morphism_index(m))); }
    const std::vector<int>& obj_map() const { return d_->obj; }
    const std::vector<int>& mor_map() const { return d_->mor; }

    friend bool operator==(const Functor& a, const Functor& b);

private:
    struct Data {
        CatRef dom, cod;
        std::vector<int> obj, mor;
    };
    std::shared_ptr<const Data> d_;
};

/// g ∘ f. Throws DomainMismatch unless cod(f) is dom(g).
Functor compose(const Functor& g, const Functor& f);
/// Structural equality; throws BoundaryMismatch when the boundary categories differ.
bool equal_functor(const Functor& f, const Functor& g);
/// First element on which f and g differ, for diagnostics.
std::optional<std::string> functor_difference(const Functor& f, const Functor& g);

std::optional<Functor> inverse(const Functor& f);
bool is_isomorphism(const Functor& f);

/// The same maps viewed between opposite categories.
Functor op_dual(const Functor& f);

}  // namespace fibcat
