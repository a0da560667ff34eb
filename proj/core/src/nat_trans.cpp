#include "fibcat/nat_trans.hpp"

#include <string>

namespace fibcat {

NatTrans NatTrans::make(Functor src, Functor tgt, std::vector<int> components) {
    if (src.dom() != tgt.dom() || src.cod() != tgt.cod())
        throw Error(ErrorCode::BoundaryMismatch, "natural transformation between functors with different boundaries");
    const Category& a = *src.dom();
    const Category& b = *src.cod();
    if (components.size() != a.num_objects())
        throw Error(ErrorCode::NotNatural, "wrong number of components");
    for (int x = 0; x < static_cast<int>(a.num_objects()); ++x) {
        const int c = components[static_cast<std::size_t>(x)];
        if (c < 0 || c >= static_cast<int>(b.num_morphisms()) || b.src(c) != src.obj(x) ||
            b.tgt(c) != tgt.obj(x))
            throw Error(ErrorCode::NotNatural, "component at " + a.object(x).to_string() + " is ill-typed");
    }
    for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m) {
        const int cx = components[static_cast<std::size_t>(a.src(m))];
        const int cy = components[static_cast<std::size_t>(a.tgt(m))];
        if (b.compose(tgt.mor(m), cx) != b.compose(cy, src.mor(m)))
            throw Error(ErrorCode::NotNatural, "naturality square at " + a.morphism(m).to_string() + " fails");
    }
    NatTrans out;
    out.d_ = std::make_shared<const Data>(Data{std::move(src), std::move(tgt), std::move(components)});
    return out;
}

NatTrans NatTrans::identity(const Functor& f) {
    std::vector<int> comp(f.dom()->num_objects());
    for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = f.cod()->identity(f.obj_map()[x]);
    NatTrans out;
    out.d_ = std::make_shared<const Data>(Data{f, f, std::move(comp)});
    return out;
}

bool NatTrans::is_identity() const {
    if (!(src() == tgt())) return false;
    for (int c : components())
        if (!cod()->is_identity(c)) return false;
    return true;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.src() == b.src() && a.tgt() == b.tgt() && a.components() == b.components();
}

NatTrans vcompose(const NatTrans& beta, const NatTrans& alpha) {
    if (!(alpha.tgt() == beta.src()))
        throw Error(ErrorCode::BoundaryMismatch, "vcompose: target of alpha is not source of beta");
    std::vector<int> comp(alpha.components().size());
    for (std::size_t x = 0; x < comp.size(); ++x)
        comp[x] = alpha.cod()->compose(beta.components()[x], alpha.components()[x]);
    return NatTrans::make(alpha.src(), beta.tgt(), std::move(comp));
}

NatTrans whisker_left(const Functor& f, const NatTrans& alpha) {
    if (f.dom() != alpha.cod()) throw Error(ErrorCode::BoundaryMismatch, "whisker_left: functor does not follow alpha");
    std::vector<int> comp(alpha.components().size());
    for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = f.mor(alpha.components()[x]);
    return NatTrans::make(compose(f, alpha.src()), compose(f, alpha.tgt()), std::move(comp));
}

NatTrans whisker_right(const NatTrans& alpha, const Functor& f) {
    if (f.cod() != alpha.dom()) throw Error(ErrorCode::BoundaryMismatch, "whisker_right: functor does not precede alpha");
    std::vector<int> comp(f.dom()->num_objects());
    for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = alpha.component(f.obj_map()[x]);
    return NatTrans::make(compose(alpha.src(), f), compose(alpha.tgt(), f), std::move(comp));
}

NatTrans hcompose(const NatTrans& beta, const NatTrans& alpha) {
    if (beta.dom() != alpha.cod()) throw Error(ErrorCode::BoundaryMismatch, "hcompose: boundaries do not meet");
    return vcompose(whisker_right(beta, alpha.tgt()), whisker_left(beta.src(), alpha));
}

std::optional<std::string> nat_difference(const NatTrans& a, const NatTrans& b) {
    if (a.dom() != b.dom() || a.cod() != b.cod())
        throw Error(ErrorCode::BoundaryMismatch, "2-cells have different boundaries");
    if (auto d = functor_difference(a.src(), b.src())) return "source functors differ " + *d;
    if (auto d = functor_difference(a.tgt(), b.tgt())) return "target functors differ " + *d;
    for (int x = 0; x < static_cast<int>(a.dom()->num_objects()); ++x)
        if (a.component(x) != b.component(x))
            return "component at " + a.dom()->object(x).to_string() + ": " +
                   a.cod()->morphism(a.component(x)).to_string() + " vs " +
                   a.cod()->morphism(b.component(x)).to_string();
    return std::nullopt;
}

bool equal_nat(const NatTrans& a, const NatTrans& b) { return !nat_difference(a, b); }

std::optional<NatTrans> inverse(const NatTrans& a) {
    std::vector<int> comp(a.components().size());
    for (std::size_t x = 0; x < comp.size(); ++x) {
        auto inv = a.cod()->inverse(a.components()[x]);
        if (!inv) return std::nullopt;
        comp[x] = *inv;
    }
    return NatTrans::make(a.tgt(), a.src(), std::move(comp));
}

bool is_isomorphism(const NatTrans& a) { return inverse(a).has_value(); }

NatTrans op_dual(const NatTrans& a) {
    return NatTrans::make(op_dual(a.tgt()), op_dual(a.src()), a.components());
}

}  // namespace fibcat
