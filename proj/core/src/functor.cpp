#include "fibcat/functor.hpp"

#include <string>

namespace fibcat {

namespace {

[[noreturn]] void not_a_functor(const std::string& what) { throw Error(ErrorCode::NotAFunctor, what); }

}  // namespace

Functor Functor::make(CatRef dom, CatRef cod, std::vector<int> obj_map, std::vector<int> mor_map) {
    const Category& a = *dom;
    const Category& b = *cod;
    if (obj_map.size() != a.num_objects() || mor_map.size() != a.num_morphisms())
        not_a_functor("map sizes do not match the domain");
    const auto no = static_cast<int>(b.num_objects());
    const auto nm = static_cast<int>(b.num_morphisms());
    for (int v : obj_map)
        if (v < 0 || v >= no) not_a_functor("object image out of range");
    for (int v : mor_map)
        if (v < 0 || v >= nm) not_a_functor("morphism image out of range");
    const auto name = [&](int m) { return a.morphism(m).to_string(); };
    const auto at = [&](const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i)]; };
    for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m) {
        const int fm = at(mor_map, m);
        if (b.src(fm) != at(obj_map, a.src(m)) || b.tgt(fm) != at(obj_map, a.tgt(m)))
            not_a_functor("image of " + name(m) + " has the wrong endpoints");
    }
    for (int x = 0; x < static_cast<int>(a.num_objects()); ++x)
        if (at(mor_map, a.identity(x)) != b.identity(at(obj_map, x)))
            not_a_functor("identity of " + a.object(x).to_string() + " not preserved");
    for (int f = 0; f < static_cast<int>(a.num_morphisms()); ++f) {
        const int ff = at(mor_map, f);
        for (int y = 0; y < static_cast<int>(a.num_objects()); ++y)
            for (int g : a.hom(a.tgt(f), y))
                if (at(mor_map, a.compose(g, f)) != b.compose(at(mor_map, g), ff))
                    not_a_functor("composite " + name(g) + " . " + name(f) + " not preserved");
    }
    Functor out;
    out.d_ = std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(obj_map), std::move(mor_map)});
    return out;
}

Functor Functor::from_terms(CatRef dom, CatRef cod, const std::function<Term(const Term&)>& on_obj,
                            const std::function<Term(const Term&)>& on_mor) {
    std::vector<int> om, mm;
    om.reserve(dom->num_objects());
    mm.reserve(dom->num_morphisms());
    for (const auto& x : dom->objects()) om.push_back(cod->object_index(on_obj(x)));
    for (const auto& m : dom->morphisms()) mm.push_back(cod->morphism_index(on_mor(m)));
    return make(std::move(dom), std::move(cod), std::move(om), std::move(mm));
}

Functor Functor::unchecked(CatRef dom, CatRef cod, std::vector<int> obj_map, std::vector<int> mor_map) {
    Functor out;
    out.d_ = std::make_shared<const Data>(Data{std::move(dom), std::move(cod), std::move(obj_map), std::move(mor_map)});
    return out;
}

Functor Functor::identity(CatRef c) {
    std::vector<int> om(c->num_objects()), mm(c->num_morphisms());
    for (std::size_t i = 0; i < om.size(); ++i) om[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < mm.size(); ++i) mm[i] = static_cast<int>(i);
    Functor out;
    out.d_ = std::make_shared<const Data>(Data{c, c, std::move(om), std::move(mm)});
    return out;
}

Functor Functor::constant(CatRef dom, CatRef cod, int x) {
    std::vector<int> om(dom->num_objects(), x);
    std::vector<int> mm(dom->num_morphisms(), cod->identity(x));
    return make(std::move(dom), std::move(cod), std::move(om), std::move(mm));
}

bool operator==(const Functor& a, const Functor& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.dom() == b.dom() && a.cod() == b.cod() && a.d_->obj == b.d_->obj && a.d_->mor == b.d_->mor;
}

Functor compose(const Functor& g, const Functor& f) {
    if (f.cod() != g.dom()) throw Error(ErrorCode::DomainMismatch, "compose: cod(f) is not dom(g)");
    std::vector<int> om(f.obj_map().size()), mm(f.mor_map().size());
    for (std::size_t i = 0; i < om.size(); ++i) om[i] = g.obj(f.obj_map()[i]);
    for (std::size_t i = 0; i < mm.size(); ++i) mm[i] = g.mor(f.mor_map()[i]);
    return Functor::unchecked(f.dom(), g.cod(), std::move(om), std::move(mm));
}

std::optional<std::string> functor_difference(const Functor& f, const Functor& g) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw Error(ErrorCode::BoundaryMismatch, "functors have different boundaries");
    const Category& a = *f.dom();
    const Category& b = *f.cod();
    for (int x = 0; x < static_cast<int>(a.num_objects()); ++x)
        if (f.obj(x) != g.obj(x))
            return "at object " + a.object(x).to_string() + ": " + b.object(f.obj(x)).to_string() +
                   " vs " + b.object(g.obj(x)).to_string();
    for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m)
        if (f.mor(m) != g.mor(m))
            return "at morphism " + a.morphism(m).to_string() + ": " + b.morphism(f.mor(m)).to_string() +
                   " vs " + b.morphism(g.mor(m)).to_string();
    return std::nullopt;
}

bool equal_functor(const Functor& f, const Functor& g) { return !functor_difference(f, g); }

std::optional<Functor> inverse(const Functor& f) {
    const Category& a = *f.dom();
    const Category& b = *f.cod();
    if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms()) return std::nullopt;
    std::vector<int> om(b.num_objects(), -1), mm(b.num_morphisms(), -1);
    for (std::size_t i = 0; i < a.num_objects(); ++i) {
        int& slot = om[static_cast<std::size_t>(f.obj_map()[i])];
        if (slot >= 0) return std::nullopt;
        slot = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < a.num_morphisms(); ++i) {
        int& slot = mm[static_cast<std::size_t>(f.mor_map()[i])];
        if (slot >= 0) return std::nullopt;
        slot = static_cast<int>(i);
    }
    return Functor::unchecked(f.cod(), f.dom(), std::move(om), std::move(mm));
}

bool is_isomorphism(const Functor& f) { return inverse(f).has_value(); }

Functor op_dual(const Functor& f) {
    return Functor::unchecked(op_dual(f.dom()), op_dual(f.cod()), f.obj_map(), f.mor_map());
}

}  // namespace fibcat
