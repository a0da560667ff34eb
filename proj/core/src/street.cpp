#include "fibcat/street.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace fibcat {

namespace {

void require(const std::optional<std::string>& diff, const std::string& what) {
    if (diff) throw Error(ErrorCode::TheoremViolation, what + ": " + *diff);
}

using FunctorKey = std::tuple<const Category*, const Category*, std::vector<int>, std::vector<int>>;

FunctorKey key_of(const Functor& f) { return {f.dom().get(), f.cod().get(), f.obj_map(), f.mor_map()}; }

struct LCache {
    std::mutex mu;
    std::map<FunctorKey, LResult> entries;
};

LCache& l_cache() {
    static LCache c;
    return c;
}

const Term& morph(const Category& c, int m) { return c.morphism(m); }

}  // namespace

LResult L_obj(const Bundle& p) {
    auto& cache = l_cache();
    FunctorKey key = key_of(p.proj);
    {
        std::lock_guard lock(cache.mu);
        if (auto it = cache.entries.find(key); it != cache.entries.end()) return it->second;
    }
    CommaResult cr = comma(p.proj, Functor::identity(p.base()));
    LResult out{p, cr, Bundle{cr.d1}};
    std::lock_guard lock(cache.mu);
    return cache.entries.emplace(std::move(key), std::move(out)).first->second;
}

BundleSquare L_mor(const BundleSquare& f) {
    const LResult ls = L_obj(f.src());
    const LResult lt = L_obj(f.tgt());
    const Functor& u = f.up();
    const Functor& d = f.down();
    Functor up = Functor::from_terms(
        ls.bundle.total(), lt.bundle.total(),
        [&](const Term& x) { return comma_object(u.obj(x.arg(0)), d.obj(x.arg(1)), d.mor(x.arg(2))); },
        [&](const Term& m) {
            return comma_morphism(u.mor(m.arg(0)), d.mor(m.arg(1)), d.mor(m.arg(2)), d.mor(m.arg(3)));
        });
    BundleSquare out(ls.bundle, lt.bundle, up, d);
    require(functor_difference(compose(lt.d0(), up), compose(u, ls.d0())), "L f: d0' Lf = f d0");
    require(functor_difference(compose(lt.d1(), up), compose(d, ls.d1())), "L f: d1' Lf = f d1");
    require(nat_difference(whisker_right(lt.lambda(), up), whisker_left(d, ls.lambda())), "L f: lambda' Lf = f lambda");
    return out;
}

BundleTwoCell L_2cell(const BundleTwoCell& a) {
    const BundleSquare lf = L_mor(a.src());
    const BundleSquare lg = L_mor(a.tgt());
    const LResult ls = L_obj(a.src().src());
    const LResult lt = L_obj(a.src().tgt());
    const Category& lte = *lt.bundle.total();
    const Category& lse = *ls.bundle.total();
    const Category& e2 = *a.up().cod();
    const Category& b2 = *a.down().cod();
    const Category& e1 = *a.up().dom();
    const Category& b1 = *a.down().dom();
    std::vector<int> comp(lse.num_objects());
    for (int x = 0; x < static_cast<int>(lse.num_objects()); ++x) {
        const Term& ob = lse.object(x);
        const int e = e1.object_index(ob.arg(0));
        const int b = b1.object_index(ob.arg(1));
        const int beta = b1.morphism_index(ob.arg(2));
        comp[static_cast<std::size_t>(x)] = lte.morphism_index(
            comma_morphism(morph(e2, a.up().component(e)), morph(b2, a.down().component(b)),
                           morph(b2, a.src().down().mor(beta)), morph(b2, a.tgt().down().mor(beta))));
    }
    BundleTwoCell out(lf, lg, NatTrans::make(lf.up(), lg.up(), std::move(comp)), a.down());
    require(nat_difference(whisker_left(lt.d0(), out.up()), whisker_right(a.up(), ls.d0())), "L alpha: d0' La = a d0");
    require(nat_difference(whisker_left(lt.d1(), out.up()), whisker_right(a.down(), ls.d1())), "L alpha: d1' La = a d1");
    return out;
}

Bundle L_pow(const Bundle& p, int n) {
    Bundle out = p;
    for (int k = 0; k < n; ++k) out = L_obj(out).bundle;
    return out;
}

BundleSquare L_pow(const BundleSquare& f, int n) {
    BundleSquare out = f;
    for (int k = 0; k < n; ++k) out = L_mor(out);
    return out;
}

BundleTwoCell L_pow(const BundleTwoCell& a, int n) {
    BundleTwoCell out = a;
    for (int k = 0; k < n; ++k) out = L_2cell(out);
    return out;
}

BundleSquare i_component(const Bundle& p) {
    const LResult l = L_obj(p);
    const Functor& q = p.proj;
    const Category& b = *p.base();
    Functor up = Functor::from_terms(
        p.total(), l.bundle.total(),
        [&](const Term& e) { return comma_object(e, q.obj(e), b.morphism(b.identity(q.obj(p.total()->object_index(e))))); },
        [&](const Term& m) {
            const int qm = q.mor(p.total()->morphism_index(m));
            return comma_morphism(m, b.morphism(qm), b.morphism(b.identity(b.src(qm))),
                                  b.morphism(b.identity(b.tgt(qm))));
        });
    BundleSquare out(p, l.bundle, up, Functor::identity(p.base()));
    require(functor_difference(compose(l.d0(), up), Functor::identity(p.total())), "d0 i = 1");
    require(functor_difference(compose(l.d1(), up), p.proj), "d1 i = p");
    require(whisker_right(l.lambda(), up).is_identity() ? std::nullopt : std::optional<std::string>("non-identity"),
            "lambda i = 1");
    return out;
}

BundleSquare c_component(const Bundle& p) {
    const LResult l1 = L_obj(p);
    const LResult l2 = L_obj(l1.bundle);
    const Category& b = *p.base();
    const auto comp = [&](const Term& g, const Term& f) {
        return b.morphism(b.compose(b.morphism_index(g), b.morphism_index(f)));
    };
    Functor up = Functor::from_terms(
        l2.bundle.total(), l1.bundle.total(),
        [&](const Term& x) {
            const Term& inner = x.arg(0);
            return comma_object(inner.arg(0), x.arg(1), comp(x.arg(2), inner.arg(2)));
        },
        [&](const Term& m) {
            const Term& inner = m.arg(0);
            return comma_morphism(inner.arg(0), m.arg(1), comp(m.arg(2), inner.arg(2)), comp(m.arg(3), inner.arg(3)));
        });
    BundleSquare out(l2.bundle, l1.bundle, up, Functor::identity(p.base()));
    require(functor_difference(compose(l1.d0(), up), compose(l1.d0(), l2.d0())), "d0 c = d0 d0");
    require(functor_difference(compose(l1.d1(), up), l2.d1()), "d1 c = d1");
    require(nat_difference(whisker_right(l1.lambda(), up),
                           vcompose(l2.lambda(), whisker_right(l1.lambda(), l2.d0()))),
            "lambda c = lambda' . lambda d0");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::string> square_eq(const BundleSquare& a, const BundleSquare& b) { return square_difference(a, b); }

std::optional<std::string> cell_eq(const BundleTwoCell& a, const BundleTwoCell& b) { return two_cell_difference(a, b); }

}  // namespace

Report verify_L_monad(const Corpus& corpus, const CProvider& c) {
    Report r;
    for (const auto& nb : corpus.bundles) {
        const Bundle& p = nb.bundle;
        const std::string tag = "[" + nb.name + "]";
        r.run("L.identity" + tag, "L preserves identity squares", [&] {
            return square_eq(L_mor(identity_square(p)), identity_square(L_obj(p).bundle));
        });
        r.run("L.unit_left" + tag, "unit law c . iL = 1", [&] {
            const Bundle lp = L_obj(p).bundle;
            return square_eq(compose(c(p), i_component(lp)), identity_square(lp));
        });
        r.run("L.unit_right" + tag, "unit law c . Li = 1", [&] {
            const Bundle lp = L_obj(p).bundle;
            return square_eq(compose(c(p), L_mor(i_component(p))), identity_square(lp));
        });
        r.run("L.assoc" + tag, "associativity c . cL = c . Lc", [&] {
            const Bundle lp = L_obj(p).bundle;
            return square_eq(compose(c(p), c(lp)), compose(c(p), L_mor(c(p))));
        });
        r.run("L.i_structure" + tag, "d0 i = 1, d1 i = p, lambda i = 1", [&]() -> std::optional<std::string> {
            const LResult l = L_obj(p);
            const BundleSquare i = i_component(p);
            if (auto d = functor_difference(compose(l.d0(), i.up()), Functor::identity(p.total()))) return "d0 i " + *d;
            if (auto d = functor_difference(compose(l.d1(), i.up()), p.proj)) return "d1 i " + *d;
            if (!whisker_right(l.lambda(), i.up()).is_identity()) return "lambda i is not an identity";
            return std::nullopt;
        });
        r.run("L.c_structure" + tag, "d0 c = d0 d0, d1 c = d1, lambda c = lambda' . lambda d0",
              [&]() -> std::optional<std::string> {
                  const LResult l1 = L_obj(p);
                  const LResult l2 = L_obj(l1.bundle);
                  const BundleSquare cc = c(p);
                  if (auto d = functor_difference(compose(l1.d0(), cc.up()), compose(l1.d0(), l2.d0())))
                      return "d0 c " + *d;
                  if (auto d = functor_difference(compose(l1.d1(), cc.up()), l2.d1())) return "d1 c " + *d;
                  if (auto d = nat_difference(whisker_right(l1.lambda(), cc.up()),
                                              vcompose(l2.lambda(), whisker_right(l1.lambda(), l2.d0()))))
                      return "lambda c " + *d;
                  return std::nullopt;
              });
    }
    for (const auto& ns : corpus.squares) {
        const BundleSquare& f = ns.square;
        const std::string tag = "[" + ns.name + "]";
        r.run("L.base_change" + tag, "L f satisfies d0' Lf = f d0, d1' Lf = f d1, lambda' Lf = f lambda",
              [&]() -> std::optional<std::string> {
                  L_mor(f);  // asserts the three equations
                  return std::nullopt;
              });
        r.run("L.i_natural" + tag, "naturality i' f = Lf i", [&] {
            return square_eq(compose(i_component(f.tgt()), f), compose(L_mor(f), i_component(f.src())));
        });
        r.run("L.c_natural" + tag, "naturality c' L^2 f = Lf c", [&] {
            return square_eq(compose(c(f.tgt()), L_pow(f, 2)), compose(L_mor(f), c(f.src())));
        });
        r.run("L.identity_2cell" + tag, "L preserves identity 2-cells", [&] {
            return cell_eq(L_2cell(identity_2cell(f)), identity_2cell(L_mor(f)));
        });
    }
    for (const auto& ng : corpus.squares)
        for (const auto& nf : corpus.squares) {
            if (!(nf.square.tgt() == ng.square.src())) continue;
            if (nf.name.rfind("id[", 0) == 0 || ng.name.rfind("id[", 0) == 0) continue;
            r.run("L.functorial[" + ng.name + "." + nf.name + "]", "L(g f) = Lg Lf", [&] {
                return square_eq(L_mor(compose(ng.square, nf.square)), compose(L_mor(ng.square), L_mor(nf.square)));
            });
        }
    for (const auto& nc : corpus.cells) {
        const BundleTwoCell& a = nc.cell;
        const std::string tag = "[" + nc.name + "]";
        r.run("L.2cell_base_change" + tag, "L alpha satisfies d0' La = a d0, d1' La = a d1",
              [&]() -> std::optional<std::string> {
                  L_2cell(a);
                  return std::nullopt;
              });
        r.run("L.i_2natural" + tag, "2-naturality of i", [&] {
            return cell_eq(whisker_left(i_component(a.src().tgt()), a), whisker_right(L_2cell(a), i_component(a.src().src())));
        });
        r.run("L.c_2natural" + tag, "2-naturality of c", [&] {
            return cell_eq(whisker_left(c(a.src().tgt()), L_pow(a, 2)), whisker_right(L_2cell(a), c(a.src().src())));
        });
    }
    for (const auto& nb : corpus.cells)
        for (const auto& na : corpus.cells) {
            if (!(na.cell.tgt() == nb.cell.src())) continue;
            if (na.cell.is_identity() || nb.cell.is_identity()) continue;
            r.run("L.vertical[" + nb.name + "." + na.name + "]", "L(b a) = Lb La", [&] {
                return cell_eq(L_2cell(vcompose(nb.cell, na.cell)), vcompose(L_2cell(nb.cell), L_2cell(na.cell)));
            });
        }
    return r;
}

// ---------------------------------------------------------------------------

RResult R_obj(const Bundle& p) {
    const LResult l = L_obj(op_dual(p));
    return RResult{p, op_dual(l.bundle), op_dual(l.d1()), op_dual(l.d0())};
}

BundleSquare R_mor(const BundleSquare& f) { return op_dual(L_mor(op_dual(f))); }
BundleTwoCell R_2cell(const BundleTwoCell& a) { return op_dual(L_2cell(op_dual(a))); }
BundleSquare iR_component(const Bundle& p) { return op_dual(i_component(op_dual(p))); }
BundleSquare cR_component(const Bundle& p) { return op_dual(c_component(op_dual(p))); }

CommaResult R_direct(const Bundle& p) { return comma(Functor::identity(p.base()), p.proj); }

Functor R_comparison(const Bundle& p) {
    const RResult dual = R_obj(p);
    const CommaResult direct = R_direct(p);
    Functor phi = Functor::from_terms(
        dual.bundle.total(), direct.apex,
        [](const Term& x) { return comma_object(x.arg(1), x.arg(0), x.arg(2)); },
        [](const Term& m) { return comma_morphism(m.arg(1), m.arg(0), m.arg(3), m.arg(2)); });
    if (!is_isomorphism(phi)) throw Error(ErrorCode::TheoremViolation, "R comparison is not invertible");
    require(functor_difference(compose(direct.d0, phi), dual.d0), "R comparison over B");
    require(functor_difference(compose(direct.d1, phi), dual.d1), "R comparison over E");
    return phi;
}

// ---------------------------------------------------------------------------

Bundle K_n(const Bundle& p, int n) {
    if (n < 0 || n > 3) throw Error(ErrorCode::BoundaryMismatch, "K_n is only provided for small n");
    if (n == 0) return p;
    return Bundle{L_pow(cc_square(p), n).up()};
}

BundleSquare K_mor(const BundleSquare& f, int n) {
    if (n == 0) return f;
    return BundleSquare(K_n(f.src(), n), K_n(f.tgt(), n), L_pow(f, n).up(), L_pow(I_of(f.down()), n).up());
}

BundleSquare d0K(const Bundle& p, int n) {
    const Bundle ib = I_of(p.base());
    return BundleSquare(K_n(p, n + 1), K_n(p, n), L_obj(L_pow(p, n)).d0(), L_obj(L_pow(ib, n)).d0());
}

BundleSquare d1K(const Bundle& p, int n) {
    const Bundle lib = L_obj(I_of(p.base())).bundle;
    const Bundle top = K_n(p, n + 1);
    return BundleSquare(top, K_n(L_obj(p).bundle, n), Functor::identity(top.total()),
                        L_pow(cc_square(lib), n).up());
}

BundleSquare iK(const Bundle& p) {
    return BundleSquare(p, K_n(p, 1), i_component(p).up(), i_component(I_of(p.base())).up());
}

BundleSquare cK(const Bundle& p, const CProvider& c) {
    return BundleSquare(K_n(p, 2), K_n(p, 1), c(p).up(), c(I_of(p.base())).up());
}

Report verify_K_lemmas(const Corpus& corpus, const CProvider& c) {
    Report r;
    for (const auto& nb : corpus.bundles) {
        const Bundle& p = nb.bundle;
        const std::string tag = "[" + nb.name + "]";
        for (int n = 0; n <= 1; ++n) {
            const std::string tn = "[" + nb.name + ",n=" + std::to_string(n) + "]";
            r.run("K.d0_prone" + tn, "d0 components are pullback squares", [&]() -> std::optional<std::string> {
                if (!is_prone(d0K(p, n))) return "d0 component is not prone";
                return std::nullopt;
            });
            r.run("K.d1_supine" + tn, "d1 components are supine", [&]() -> std::optional<std::string> {
                if (!is_supine(d1K(p, n))) return "d1 component is not supine";
                return std::nullopt;
            });
        }
        r.run("K.d1d0" + tag, "d0 L . d1 = d1 . d0 on K_2", [&] {
            const Bundle lp = L_obj(p).bundle;
            return square_eq(compose(d0K(lp, 0), d1K(p, 1)), compose(d1K(p, 0), d0K(p, 1)));
        });
        r.run("K.c_d0" + tag, "d0 c = d0 d0 on K_2", [&] {
            return square_eq(compose(d0K(p, 0), cK(p, c)), compose(d0K(p, 0), d0K(p, 1)));
        });
        r.run("K.c_d1" + tag, "d1 c = c (d1 L) d1 on K_2", [&] {
            const Bundle lp = L_obj(p).bundle;
            return square_eq(compose(d1K(p, 0), cK(p, c)), compose(c(p), compose(d1K(lp, 0), d1K(p, 1))));
        });
        r.run("K.i_d0" + tag, "d0 i = 1", [&] { return square_eq(compose(d0K(p, 0), iK(p)), identity_square(p)); });
        r.run("K.i_d1" + tag, "d1 i = i", [&] { return square_eq(compose(d1K(p, 0), iK(p)), i_component(p)); });
    }
    for (const auto& ns : corpus.squares) {
        const BundleSquare& f = ns.square;
        for (int n = 0; n <= 1; ++n) {
            const std::string tn = "[" + ns.name + ",n=" + std::to_string(n) + "]";
            r.run("K.d0_natural" + tn, "naturality of d0", [&] {
                return square_eq(compose(d0K(f.tgt(), n), K_mor(f, n + 1)), compose(K_mor(f, n), d0K(f.src(), n)));
            });
            r.run("K.d1_natural" + tn, "naturality of d1", [&] {
                return square_eq(compose(d1K(f.tgt(), n), K_mor(f, n + 1)), compose(K_mor(L_mor(f), n), d1K(f.src(), n)));
            });
        }
    }
    return r;
}

}  // namespace fibcat
