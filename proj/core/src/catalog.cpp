#include "fibcat/catalog.hpp"

namespace fibcat {

Term atom(const std::string& s) { return Term::atom(s); }

CatRef terminal() {
    static const CatRef one = discrete({atom("*")});
    return one;
}

CatRef discrete(const std::vector<Term>& objects) { return make_poset(objects, {}); }

CatRef discrete(int n) {
    std::vector<Term> objs;
    for (int i = 0; i < n; ++i) objs.push_back(atom(std::to_string(i)));
    return discrete(objs);
}

CatRef walking_arrow() {
    static const CatRef two = make_poset({atom("0"), atom("1")}, {{atom("a"), atom("0"), atom("1")}});
    return two;
}

CatRef chain(int n) {
    std::vector<Term> objs;
    std::vector<RawCategory::Morphism> arrows;
    for (int i = 0; i < n; ++i) objs.push_back(atom(std::to_string(i)));
    for (int i = 0; i + 1 < n; ++i)
        arrows.push_back({Term::tuple("le", {objs[static_cast<std::size_t>(i)], objs[static_cast<std::size_t>(i + 1)]}),
                          objs[static_cast<std::size_t>(i)], objs[static_cast<std::size_t>(i + 1)]});
    return make_poset(objs, arrows);
}

CatRef walking_iso() {
    RawCategory raw;
    const Term o0 = atom("0"), o1 = atom("1"), u = atom("u"), v = atom("v");
    raw.objects = {o0, o1};
    raw.morphisms = {{u, o0, o1}, {v, o1, o0}};
    raw.composites = {{v, u, identity_term(o0)}, {u, v, identity_term(o1)}};
    return validate_category(raw);
}

CatRef cyclic_group(int n) {
    RawCategory raw;
    const Term star = atom("*");
    raw.objects = {star};
    const auto elem = [&](int k) { return k == 0 ? identity_term(star) : atom("g" + std::to_string(k)); };
    for (int k = 1; k < n; ++k) raw.morphisms.push_back({elem(k), star, star});
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b) raw.composites.push_back({elem(a), elem(b), elem((a + b) % n)});
    return validate_category(raw);
}

CatRef idempotent_monoid() {
    RawCategory raw;
    const Term star = atom("*"), e = atom("e");
    raw.objects = {star};
    raw.morphisms = {{e, star, star}};
    raw.composites = {{e, e, e}};
    return validate_category(raw);
}

Functor point(const CatRef& c, int x) { return Functor::constant(terminal(), c, x); }

Functor to_terminal(const CatRef& c) { return Functor::constant(c, terminal(), 0); }

}  // namespace fibcat
