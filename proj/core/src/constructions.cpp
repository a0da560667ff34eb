#include "fibcat/constructions.hpp"

#include <map>
#include <unordered_map>

#include "fibcat/catalog.hpp"

namespace fibcat {

namespace {

using Key = std::pair<int, int>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        return std::hash<long long>{}((static_cast<long long>(k.first) << 32) ^ static_cast<unsigned>(k.second));
    }
};

// Looks up, in the built apex, each builder-side element by name.
Functor functor_from_builder(const CatRef& apex, const CatRef& cod, const std::vector<Term>& obj_names,
                             const std::vector<int>& obj_img, const std::vector<Term>& mor_names,
                             const std::vector<int>& mor_img) {
    std::vector<int> om(apex->num_objects()), mm(apex->num_morphisms());
    for (std::size_t i = 0; i < obj_names.size(); ++i)
        om[static_cast<std::size_t>(apex->object_index(obj_names[i]))] = obj_img[i];
    for (std::size_t i = 0; i < mor_names.size(); ++i)
        mm[static_cast<std::size_t>(apex->morphism_index(mor_names[i]))] = mor_img[i];
    return Functor::make(apex, cod, std::move(om), std::move(mm));
}

}  // namespace

PullbackResult PullbackResult::cone(Functor f, Functor g, Functor proj0, Functor proj1) {
    if (f.cod() != g.cod()) throw Error(ErrorCode::CodomainMismatch, "cospan legs have different codomains");
    if (proj0.dom() != proj1.dom() || proj0.cod() != f.dom() || proj1.cod() != g.dom())
        throw Error(ErrorCode::BoundaryMismatch, "cone legs do not match the cospan");
    if (!equal_functor(compose(f, proj0), compose(g, proj1)))
        throw Error(ErrorCode::SquareDoesNotCommute, "cone square does not commute");
    CatRef apex = proj0.dom();
    return PullbackResult{std::move(f), std::move(g), std::move(apex), std::move(proj0), std::move(proj1)};
}

PullbackResult pullback(const Functor& f, const Functor& g) {
    if (f.cod() != g.cod()) throw Error(ErrorCode::CodomainMismatch, "pullback of functors with different codomains");
    const Category& a = *f.dom();
    const Category& b = *g.dom();
    const Category& c = *f.cod();

    std::vector<std::vector<int>> b_over(c.num_objects());
    for (int y = 0; y < static_cast<int>(b.num_objects()); ++y) b_over[static_cast<std::size_t>(g.obj(y))].push_back(y);
    std::vector<std::vector<int>> bm_over(c.num_morphisms());
    for (int n = 0; n < static_cast<int>(b.num_morphisms()); ++n) bm_over[static_cast<std::size_t>(g.mor(n))].push_back(n);

    CategoryBuilder bld;
    std::vector<Term> onames, mnames;
    std::vector<int> o0, o1, m0, m1;
    std::unordered_map<Key, int, KeyHash> oidx, midx;
    for (int x = 0; x < static_cast<int>(a.num_objects()); ++x)
        for (int y : b_over[static_cast<std::size_t>(f.obj(x))]) {
            Term name = Term::tuple("pb", {a.object(x), b.object(y)});
            oidx[{x, y}] = bld.add_object(name);
            onames.push_back(name);
            o0.push_back(x);
            o1.push_back(y);
        }
    std::vector<std::vector<int>> out_of(onames.size());
    for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m)
        for (int n : bm_over[static_cast<std::size_t>(f.mor(m))]) {
            Term name = Term::tuple("pb", {a.morphism(m), b.morphism(n)});
            const int s = oidx.at({a.src(m), b.src(n)});
            const int t = oidx.at({a.tgt(m), b.tgt(n)});
            const int k = bld.add_morphism(name, s, t);
            midx[{m, n}] = k;
            out_of[static_cast<std::size_t>(s)].push_back(k);
            mnames.push_back(name);
            m0.push_back(m);
            m1.push_back(n);
        }
    for (std::size_t i = 0; i < onames.size(); ++i)
        bld.set_identity(static_cast<int>(i), midx.at({a.identity(o0[i]), b.identity(o1[i])}));
    for (std::size_t k = 0; k < mnames.size(); ++k) {
        const int t = bld.tgt(static_cast<int>(k));
        for (int l : out_of[static_cast<std::size_t>(t)])
            bld.set_composite(l, static_cast<int>(k),
                              midx.at({a.compose(m0[static_cast<std::size_t>(l)], m0[k]),
                                       b.compose(m1[static_cast<std::size_t>(l)], m1[k])}));
    }
    CatRef apex = bld.build();
    Functor p0 = functor_from_builder(apex, f.dom(), onames, o0, mnames, m0);
    Functor p1 = functor_from_builder(apex, g.dom(), onames, o1, mnames, m1);
    return PullbackResult{f, g, apex, std::move(p0), std::move(p1)};
}

PullbackResult product(const CatRef& a, const CatRef& b) { return pullback(to_terminal(a), to_terminal(b)); }

Functor mediate_pullback(const PullbackResult& pb, const Functor& q0, const Functor& q1) {
    if (q0.dom() != q1.dom() || q0.cod() != pb.f.dom() || q1.cod() != pb.g.dom())
        throw Error(ErrorCode::BoundaryMismatch, "mediate_pullback: legs do not match the cospan");
    if (!equal_functor(compose(pb.f, q0), compose(pb.g, q1)))
        throw Error(ErrorCode::SquareDoesNotCommute, "mediate_pullback: outer square does not commute");
    const Category& ap = *pb.apex;
    std::unordered_map<Key, std::vector<int>, KeyHash> objs, mors;
    for (int y = 0; y < static_cast<int>(ap.num_objects()); ++y) objs[{pb.proj0.obj(y), pb.proj1.obj(y)}].push_back(y);
    for (int n = 0; n < static_cast<int>(ap.num_morphisms()); ++n) mors[{pb.proj0.mor(n), pb.proj1.mor(n)}].push_back(n);
    const Category& x = *q0.dom();
    std::vector<int> om(x.num_objects()), mm(x.num_morphisms());
    for (int i = 0; i < static_cast<int>(x.num_objects()); ++i) {
        auto it = objs.find({q0.obj(i), q1.obj(i)});
        if (it == objs.end() || it->second.size() != 1)
            throw Error(ErrorCode::NotAPullback, "no unique fill-in at object " + x.object(i).to_string());
        om[static_cast<std::size_t>(i)] = it->second[0];
    }
    for (int i = 0; i < static_cast<int>(x.num_morphisms()); ++i) {
        auto it = mors.find({q0.mor(i), q1.mor(i)});
        if (it == mors.end() || it->second.size() != 1)
            throw Error(ErrorCode::NotAPullback, "no unique fill-in at morphism " + x.morphism(i).to_string());
        mm[static_cast<std::size_t>(i)] = it->second[0];
    }
    return Functor::make(q0.dom(), pb.apex, std::move(om), std::move(mm));
}

Functor pullback_comparison(const PullbackResult& p1, const PullbackResult& p2) {
    if (!(p1.f == p2.f) || !(p1.g == p2.g))
        throw Error(ErrorCode::NotAPullback, "pullback_comparison: cones over different cospans");
    Functor m = mediate_pullback(p1, p2.proj0, p2.proj1);
    if (!is_isomorphism(m)) throw Error(ErrorCode::NotAPullback, "comparison functor is not invertible");
    return m;
}

// ---------------------------------------------------------------------------

Term comma_object(const Term& a, const Term& b, const Term& sigma) { return Term::tuple("comma", {a, b, sigma}); }

Term comma_morphism(const Term& xi, const Term& eta, const Term& sigma, const Term& sigma2) {
    return Term::tuple("cm", {xi, eta, sigma, sigma2});
}

CommaResult comma(const Functor& r, const Functor& s) {
    if (r.cod() != s.cod()) throw Error(ErrorCode::CodomainMismatch, "comma of functors with different codomains");
    const Category& a = *r.dom();
    const Category& b = *s.dom();
    const Category& d = *r.cod();

    struct Obj {
        int a, b, sigma;
    };
    CategoryBuilder bld;
    std::vector<Obj> objs;
    std::vector<Term> onames, mnames;
    for (int x = 0; x < static_cast<int>(a.num_objects()); ++x)
        for (int y = 0; y < static_cast<int>(b.num_objects()); ++y)
            for (int sg : d.hom(r.obj(x), s.obj(y))) {
                Term name = comma_object(a.object(x), b.object(y), d.morphism(sg));
                bld.add_object(name);
                onames.push_back(name);
                objs.push_back({x, y, sg});
            }
    const auto n = objs.size();
    std::vector<int> mxi, meta;
    // hom[u * n + v]: builder morphisms u → v.
    std::vector<std::vector<int>> hom(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const Obj& o = objs[u];
            const Obj& p = objs[v];
            for (int xi : a.hom(o.a, p.a))
                for (int eta : b.hom(o.b, p.b)) {
                    if (d.compose(s.mor(eta), o.sigma) != d.compose(p.sigma, r.mor(xi))) continue;
                    Term name = comma_morphism(a.morphism(xi), b.morphism(eta), d.morphism(o.sigma), d.morphism(p.sigma));
                    const int k = bld.add_morphism(name, static_cast<int>(u), static_cast<int>(v));
                    hom[u * n + v].push_back(k);
                    mnames.push_back(name);
                    mxi.push_back(xi);
                    meta.push_back(eta);
                }
        }
    const auto find = [&](std::size_t u, std::size_t v, int xi, int eta) {
        for (int k : hom[u * n + v])
            if (mxi[static_cast<std::size_t>(k)] == xi && meta[static_cast<std::size_t>(k)] == eta) return k;
        throw Error(ErrorCode::NoSuchTwoCell, "comma: composite square missing");
    };
    for (std::size_t u = 0; u < n; ++u) {
        bld.set_identity(static_cast<int>(u), find(u, u, a.identity(objs[u].a), b.identity(objs[u].b)));
        for (std::size_t v = 0; v < n; ++v)
            for (int k : hom[u * n + v])
                for (std::size_t w = 0; w < n; ++w)
                    for (int l : hom[v * n + w])
                        bld.set_composite(l, k,
                                          find(u, w, a.compose(mxi[static_cast<std::size_t>(l)], mxi[static_cast<std::size_t>(k)]),
                                               b.compose(meta[static_cast<std::size_t>(l)], meta[static_cast<std::size_t>(k)])));
    }
    CatRef apex = bld.build();
    std::vector<int> oa, ob;
    for (const auto& o : objs) {
        oa.push_back(o.a);
        ob.push_back(o.b);
    }
    Functor d0 = functor_from_builder(apex, r.dom(), onames, oa, mnames, mxi);
    Functor d1 = functor_from_builder(apex, s.dom(), onames, ob, mnames, meta);
    std::vector<int> comp(apex->num_objects());
    for (std::size_t i = 0; i < n; ++i) comp[static_cast<std::size_t>(apex->object_index(onames[i]))] = objs[i].sigma;
    NatTrans lambda = NatTrans::make(compose(r, d0), compose(s, d1), std::move(comp));
    return CommaResult{r, s, apex, std::move(d0), std::move(d1), std::move(lambda)};
}

CommaResult phi(const CatRef& a) {
    auto id = Functor::identity(a);
    return comma(id, id);
}

Functor mediate_comma(const CommaResult& cr, const CommaCone& cone) {
    const Functor& u0 = cone.u0;
    const Functor& u1 = cone.u1;
    if (u0.dom() != u1.dom() || u0.cod() != cr.r.dom() || u1.cod() != cr.s.dom())
        throw Error(ErrorCode::BoundaryMismatch, "mediate_comma: span legs do not match");
    if (!(cone.sigma.src() == compose(cr.r, u0)) || !(cone.sigma.tgt() == compose(cr.s, u1)))
        throw Error(ErrorCode::BoundaryMismatch, "mediate_comma: sigma has the wrong boundary");
    const Category& s = *u0.dom();
    const Category& a = *cr.r.dom();
    const Category& b = *cr.s.dom();
    const Category& d = *cr.r.cod();
    const Category& ap = *cr.apex;
    std::vector<int> om(s.num_objects()), mm(s.num_morphisms());
    for (int x = 0; x < static_cast<int>(s.num_objects()); ++x)
        om[static_cast<std::size_t>(x)] = ap.object_index(
            comma_object(a.object(u0.obj(x)), b.object(u1.obj(x)), d.morphism(cone.sigma.component(x))));
    for (int m = 0; m < static_cast<int>(s.num_morphisms()); ++m)
        mm[static_cast<std::size_t>(m)] = ap.morphism_index(
            comma_morphism(a.morphism(u0.mor(m)), b.morphism(u1.mor(m)), d.morphism(cone.sigma.component(s.src(m))),
                           d.morphism(cone.sigma.component(s.tgt(m)))));
    return Functor::make(u0.dom(), cr.apex, std::move(om), std::move(mm));
}

CommaCone comma_extract(const CommaResult& cr, const Functor& f) {
    if (f.cod() != cr.apex) throw Error(ErrorCode::BoundaryMismatch, "comma_extract: functor does not land in the apex");
    return CommaCone{compose(cr.d0, f), compose(cr.d1, f), whisker_right(cr.lambda, f)};
}

NatTrans mediate_comma_2cell(const CommaResult& cr, const Functor& f, const Functor& g, const NatTrans& xi,
                             const NatTrans& eta) {
    if (f.cod() != cr.apex || g.cod() != cr.apex || f.dom() != g.dom())
        throw Error(ErrorCode::BoundaryMismatch, "mediate_comma_2cell: functors do not land in the apex");
    if (!(xi.src() == compose(cr.d0, f)) || !(xi.tgt() == compose(cr.d0, g)) || !(eta.src() == compose(cr.d1, f)) ||
        !(eta.tgt() == compose(cr.d1, g)))
        throw Error(ErrorCode::BoundaryMismatch, "mediate_comma_2cell: 2-cells have the wrong boundary");
    const NatTrans lhs = vcompose(whisker_right(cr.lambda, g), whisker_left(cr.r, xi));
    const NatTrans rhs = vcompose(whisker_left(cr.s, eta), whisker_right(cr.lambda, f));
    if (auto diff = nat_difference(lhs, rhs))
        throw Error(ErrorCode::PastingMismatch, "pasted composites differ " + *diff);
    const Category& s = *f.dom();
    const Category& ap = *cr.apex;
    std::vector<int> comp(s.num_objects());
    for (int x = 0; x < static_cast<int>(s.num_objects()); ++x) {
        const Term& fx = ap.object(f.obj(x));
        const Term& gx = ap.object(g.obj(x));
        Term name = comma_morphism(cr.r.dom()->morphism(xi.component(x)), cr.s.dom()->morphism(eta.component(x)),
                                   fx.arg(2), gx.arg(2));
        auto k = ap.find_morphism(name);
        if (!k) throw Error(ErrorCode::NoSuchTwoCell, "no comma morphism " + name.to_string());
        comp[static_cast<std::size_t>(x)] = *k;
    }
    return NatTrans::make(f, g, std::move(comp));
}

// ---------------------------------------------------------------------------

Span identity_span(const CatRef& a) { return Span{Functor::identity(a), Functor::identity(a)}; }

Span span_compose(const Span& s, const Span& t) {
    if (s.leg1.cod() != t.leg0.cod()) throw Error(ErrorCode::BoundaryMismatch, "span_compose: middle objects differ");
    PullbackResult pb = pullback(s.leg1, t.leg0);
    return Span{compose(s.leg0, pb.proj0), compose(t.leg1, pb.proj1)};
}

}  // namespace fibcat
