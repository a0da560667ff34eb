#include "fibcat/transport.hpp"

#include <charconv>

#include "fibcat/catalog.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/street.hpp"

namespace fibcat {

namespace {

void require(const std::optional<std::string>& diff, const std::string& what) {
    if (diff) throw Error(ErrorCode::TheoremViolation, what + ": " + *diff);
}

const Term& identity_name(const Category& c, const Term& x) { return c.morphism(c.identity(c.object_index(x))); }

const Term& component_name(const NatTrans& a, const Term& x) {
    return a.cod()->morphism(a.component(a.dom()->object_index(x)));
}

Term pb_term(const Term& a, const Term& b) { return Term::tuple("pb", {a, b}); }

// Apply `leaf` to every factor of an iterated fibre product pb(pb(e1,e2),e3)...
Term map_power(const Term& t, int k, const std::function<Term(const Term&)>& leaf) {
    if (k == 1) return leaf(t);
    return pb_term(map_power(t.arg(0), k - 1, leaf), leaf(t.arg(1)));
}

}  // namespace

IndexedEndofunctor identity_endofunctor() {
    return {"identity", [](const Bundle& p) { return p; }, [](const BundleSquare& f) { return f; },
            [](const BundleTwoCell& a) { return a; }};
}

IndexedEndofunctor const_fiber(const CatRef& fibre, const std::string& label) {
    IndexedEndofunctor t;
    t.name = "const_fiber:" + label;
    t.on_bundle = [fibre](const Bundle& p) { return Bundle{product(p.base(), fibre).proj0}; };
    t.on_square = [ob = t.on_bundle](const BundleSquare& f) {
        const Bundle s = ob(f.src()), d = ob(f.tgt());
        const Functor& down = f.down();
        Functor up = Functor::from_terms(
            s.total(), d.total(), [&](const Term& x) { return pb_term(down.obj(x.arg(0)), x.arg(1)); },
            [&](const Term& m) { return pb_term(down.mor(m.arg(0)), m.arg(1)); });
        return BundleSquare(s, d, std::move(up), down);
    };
    t.on_2cell = [os = t.on_square, fibre](const BundleTwoCell& a) {
        const BundleSquare f = os(a.src()), g = os(a.tgt());
        const Category& tot = *f.src().total();
        const Category& dst = *f.tgt().total();
        std::vector<int> comp;
        for (const Term& x : tot.objects())
            comp.push_back(dst.morphism_index(pb_term(component_name(a.down(), x.arg(0)), identity_name(*fibre, x.arg(1)))));
        return BundleTwoCell(f, g, NatTrans::make(f.up(), g.up(), std::move(comp)), a.down());
    };
    return t;
}

IndexedEndofunctor fiber_power(int n) {
    if (n < 1) throw Error(ErrorCode::UnknownReference, "fiber_power needs n >= 1");
    IndexedEndofunctor t;
    t.name = "fiber_power:" + std::to_string(n);
    t.on_bundle = [n](const Bundle& p) {
        Functor proj = p.proj;
        for (int k = 2; k <= n; ++k) proj = compose(proj, pullback(proj, p.proj).proj0);
        return Bundle{proj};
    };
    t.on_square = [n, ob = t.on_bundle](const BundleSquare& f) {
        const Bundle s = ob(f.src()), d = ob(f.tgt());
        const Functor& u = f.up();
        Functor up = Functor::from_terms(
            s.total(), d.total(), [&](const Term& x) { return map_power(x, n, [&](const Term& e) { return u.obj(e); }); },
            [&](const Term& m) { return map_power(m, n, [&](const Term& e) { return u.mor(e); }); });
        return BundleSquare(s, d, std::move(up), f.down());
    };
    t.on_2cell = [n, os = t.on_square](const BundleTwoCell& a) {
        const BundleSquare f = os(a.src()), g = os(a.tgt());
        const Category& dst = *f.tgt().total();
        std::vector<int> comp;
        for (const Term& x : f.src().total()->objects())
            comp.push_back(dst.morphism_index(
                map_power(x, n, [&](const Term& e) { return component_name(a.up(), e); })));
        return BundleTwoCell(f, g, NatTrans::make(f.up(), g.up(), std::move(comp)), a.down());
    };
    return t;
}

IndexedEndofunctor base_square() {
    IndexedEndofunctor t;
    t.name = "base_square";
    t.on_bundle = [](const Bundle& p) { return Bundle{product(p.base(), p.base()).proj0}; };
    t.on_square = [ob = t.on_bundle](const BundleSquare& f) {
        const Bundle s = ob(f.src()), d = ob(f.tgt());
        const Functor& down = f.down();
        Functor up = Functor::from_terms(
            s.total(), d.total(), [&](const Term& x) { return pb_term(down.obj(x.arg(0)), down.obj(x.arg(1))); },
            [&](const Term& m) { return pb_term(down.mor(m.arg(0)), down.mor(m.arg(1))); });
        return BundleSquare(s, d, std::move(up), down);
    };
    t.on_2cell = [os = t.on_square](const BundleTwoCell& a) {
        const BundleSquare f = os(a.src()), g = os(a.tgt());
        const Category& dst = *f.tgt().total();
        std::vector<int> comp;
        for (const Term& x : f.src().total()->objects())
            comp.push_back(dst.morphism_index(
                pb_term(component_name(a.down(), x.arg(0)), component_name(a.down(), x.arg(1)))));
        return BundleTwoCell(f, g, NatTrans::make(f.up(), g.up(), std::move(comp)), a.down());
    };
    return t;
}

IndexedEndofunctor op_conjugate(const IndexedEndofunctor& t) {
    return {"op(" + t.name + ")", [t](const Bundle& p) { return op_dual(t(op_dual(p))); },
            [t](const BundleSquare& f) { return op_dual(t(op_dual(f))); },
            [t](const BundleTwoCell& a) { return op_dual(t(op_dual(a))); }};
}

std::vector<IndexedEndofunctor> builtin_functors() {
    return {identity_endofunctor(), builtin_functor("const_fiber:2"), fiber_power(2)};
}

IndexedEndofunctor builtin_functor(const std::string& name) {
    if (name == "identity") return identity_endofunctor();
    if (name == "base_square") return base_square();
    const auto colon = name.find(':');
    int n = 0;
    if (colon != std::string::npos) {
        const char* first = name.data() + colon + 1;
        const char* last = name.data() + name.size();
        auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec != std::errc{} || ptr != last || n < 1 || n > 4) n = 0;
    }
    const std::string head = name.substr(0, colon);
    if (n > 0 && head == "const_fiber") return const_fiber(chain(n), std::to_string(n));
    if (n > 0 && head == "fiber_power") return fiber_power(n);
    throw Error(ErrorCode::UnknownReference,
                "unknown functor '" + name + "' (identity, const_fiber:N, fiber_power:N, base_square)");
}

// ---------------------------------------------------------------------------

namespace {

bool is_identity_name(const std::string& name) { return name.rfind("id[", 0) == 0; }

}  // namespace

Report validate_indexed(const IndexedEndofunctor& t, const Corpus& corpus) {
    Report r;
    const std::string pre = "T." + t.name + ".";
    for (const auto& nb : corpus.bundles) {
        const std::string tag = "[" + nb.name + "]";
        r.run(pre + "base" + tag, "cod T = cod", [&]() -> std::optional<std::string> {
            if (t(nb.bundle).base() != nb.bundle.base()) return "T p has a different base";
            return std::nullopt;
        });
        r.run(pre + "identity" + tag, "T preserves identity squares",
              [&] { return square_difference(t(identity_square(nb.bundle)), identity_square(t(nb.bundle))); });
    }
    for (const auto& ns : corpus.squares) {
        const BundleSquare& f = ns.square;
        const std::string tag = "[" + ns.name + "]";
        r.run(pre + "square_base" + tag, "downstairs of T f is downstairs of f", [&]() -> std::optional<std::string> {
            const BundleSquare tf = t(f);
            if (!(tf.src() == t(f.src())) || !(tf.tgt() == t(f.tgt()))) return "T f does not join T p and T p'";
            return functor_difference(tf.down(), f.down());
        });
        if (is_prone(f))
            r.run(pre + "prone" + tag, "indexed: T preserves prone squares", [&]() -> std::optional<std::string> {
                if (!is_prone(t(f))) return "prone square " + ns.name + " is sent to a square that is not a pullback";
                return std::nullopt;
            });
        r.run(pre + "identity_2cell" + tag, "T preserves identity 2-cells",
              [&] { return two_cell_difference(t(identity_2cell(f)), identity_2cell(t(f))); });
    }
    for (const auto& ng : corpus.squares)
        for (const auto& nf : corpus.squares) {
            if (!(nf.square.tgt() == ng.square.src()) || is_identity_name(nf.name) || is_identity_name(ng.name)) continue;
            r.run(pre + "compose[" + ng.name + "." + nf.name + "]", "T(g f) = Tg Tf", [&] {
                return square_difference(t(compose(ng.square, nf.square)), compose(t(ng.square), t(nf.square)));
            });
        }
    for (const auto& nc : corpus.cells) {
        const BundleTwoCell& a = nc.cell;
        if (a.is_identity()) continue;
        const std::string tag = "[" + nc.name + "]";
        r.run(pre + "2cell_base" + tag, "downstairs of T alpha is downstairs of alpha",
              [&] { return nat_difference(t(a).down(), a.down()); });
        int left = 0, right = 0;
        for (const auto& nh : corpus.squares) {
            if (is_identity_name(nh.name)) continue;
            if (nh.square.src() == a.src().tgt() && left++ < 2)
                r.run(pre + "whisker_left[" + nh.name + "." + nc.name + "]", "T(h alpha) = Th T alpha", [&] {
                    return two_cell_difference(t(whisker_left(nh.square, a)), whisker_left(t(nh.square), t(a)));
                });
            if (nh.square.tgt() == a.src().src() && right++ < 2)
                r.run(pre + "whisker_right[" + nc.name + "." + nh.name + "]", "T(alpha h) = T alpha Th", [&] {
                    return two_cell_difference(t(whisker_right(a, nh.square)), whisker_right(t(a), t(nh.square)));
                });
        }
    }
    for (const auto& nb : corpus.cells)
        for (const auto& na : corpus.cells) {
            if (!(na.cell.tgt() == nb.cell.src()) || na.cell.is_identity() || nb.cell.is_identity()) continue;
            r.run(pre + "vertical[" + nb.name + "." + na.name + "]", "T(b a) = Tb Ta", [&] {
                return two_cell_difference(t(vcompose(nb.cell, na.cell)), vcompose(t(nb.cell), t(na.cell)));
            });
        }
    return r;
}

// ---------------------------------------------------------------------------

BundleSquare psi_n(const IndexedEndofunctor& t, const Bundle& p, int n) {
    const Bundle tp = t(p);
    if (n == 0) return identity_square(tp);
    const BundleSquare prev = psi_n(t, p, n - 1);
    const BundleSquare g = compose(prev, t(d0K(p, n - 1)));
    const BundleSquare f = d0K(tp, n - 1);
    const BundleSquare out = prone_fill(f, g, Functor::identity(g.src().base()));
    require(square_difference(compose(f, out), g), "psi_" + std::to_string(n) + ": d0 psi = psi T d0");
    require(functor_difference(out.down(), Functor::identity(out.src().base())), "psi over the identity");
    if (!is_isomorphism(out))
        throw Error(ErrorCode::TheoremViolation, "psi_" + std::to_string(n) + " is not invertible for " + t.name);
    return out;
}

BundleSquare Psi_component(const IndexedEndofunctor& t, const Bundle& p) {
    const Bundle tp = t(p);
    const BundleSquare td0 = t(d0K(p, 0));
    const BundleSquare ld0 = d0K(tp, 0);
    if (!is_prone(td0)) throw Error(ErrorCode::NotProne, t.name + " sends the d0 square to a non-pullback");
    const PullbackResult via_t = PullbackResult::cone(ld0.down(), tp.proj, td0.src().proj, td0.up());
    const PullbackResult via_l = PullbackResult::cone(ld0.down(), tp.proj, ld0.src().proj, ld0.up());
    const Functor comparison = pullback_comparison(via_t, via_l);
    const BundleSquare td1 = t(d1K(p, 0));
    BundleSquare out(L_obj(tp).bundle, td1.tgt(), compose(td1.up(), comparison), Functor::identity(p.base()));
    require(square_difference(compose(out, compose(d1K(tp, 0), psi_n(t, p, 1))), td1), "Psi d1 psi_1 = T d1");
    return out;
}

TransitionData transition_data(const IndexedEndofunctor& t, const Bundle& p) {
    return {psi_n(t, p, 1), psi_n(t, p, 2), Psi_component(t, p)};
}

Report verify_transition(const IndexedEndofunctor& t, const Corpus& corpus, const PsiProvider& psi) {
    const PsiProvider big_psi = psi ? psi : PsiProvider([&t](const Bundle& p) { return Psi_component(t, p); });
    Report r;
    const std::string pre = "transition." + t.name + ".";
    for (const auto& nb : corpus.bundles) {
        const Bundle& p = nb.bundle;
        const std::string tag = "[" + nb.name + "]";
        for (int n = 1; n <= 2; ++n) {
            const std::string tn = "[" + nb.name + ",n=" + std::to_string(n) + "]";
            r.run(pre + "psi_invertible" + tn, "each psi_n is a 2-natural isomorphism",
                  [&]() -> std::optional<std::string> {
                      if (!is_isomorphism(psi_n(t, p, n))) return "psi_n has no inverse";
                      return std::nullopt;
                  });
            r.run(pre + "psi_d0" + tn, "d0 psi_n = psi_(n-1) T d0", [&] {
                return square_difference(compose(d0K(t(p), n - 1), psi_n(t, p, n)),
                                         compose(psi_n(t, p, n - 1), t(d0K(p, n - 1))));
            });
        }
        r.run(pre + "psi_i" + tag, "psi_1 T i = i T", [&] {
            return square_difference(compose(psi_n(t, p, 1), t(iK(p))), iK(t(p)));
        });
        r.run(pre + "psi_c" + tag, "c T psi_2 = psi_1 T c", [&] {
            return square_difference(compose(cK(t(p)), psi_n(t, p, 2)), compose(psi_n(t, p, 1), t(cK(p))));
        });
        for (int n = 0; n <= 1; ++n) {
            const std::string tn = "[" + nb.name + ",n=" + std::to_string(n) + "]";
            r.run(pre + "psi_Psi" + tn, "K_n Psi . d1 T . psi_(n+1) = psi_n L . T d1", [&] {
                const BundleSquare lhs =
                    compose(K_mor(big_psi(p), n), compose(d1K(t(p), n), psi_n(t, p, n + 1)));
                return square_difference(lhs, compose(psi_n(t, L_obj(p).bundle, n), t(d1K(p, n))));
            });
        }
        r.run(pre + "Psi_over_cod" + tag, "Psi lies over the identity", [&] {
            return functor_difference(big_psi(p).down(), Functor::identity(p.base()));
        });
        r.run(pre + "Psi_unit" + tag, "transition unit law Psi . iT = Ti", [&] {
            return square_difference(compose(big_psi(p), i_component(t(p))), t(i_component(p)));
        });
        r.run(pre + "Psi_mult" + tag, "transition multiplication law Psi . cT = Tc . Psi L . L Psi", [&] {
            const Bundle lp = L_obj(p).bundle;
            return square_difference(compose(big_psi(p), c_component(t(p))),
                                     compose(t(c_component(p)), compose(big_psi(lp), L_mor(big_psi(p)))));
        });
    }
    for (const auto& ns : corpus.squares) {
        const BundleSquare& f = ns.square;
        if (is_identity_name(ns.name)) continue;
        r.run(pre + "Psi_natural[" + ns.name + "]", "naturality Psi' L T f = T L f Psi", [&] {
            return square_difference(compose(big_psi(f.tgt()), L_mor(t(f))), compose(t(L_mor(f)), big_psi(f.src())));
        });
    }
    for (const auto& nc : corpus.cells) {
        const BundleTwoCell& a = nc.cell;
        if (a.is_identity()) continue;
        r.run(pre + "Psi_2natural[" + nc.name + "]", "2-naturality of Psi", [&] {
            return two_cell_difference(whisker_left(big_psi(a.src().tgt()), L_2cell(t(a))),
                                       whisker_right(t(L_2cell(a)), big_psi(a.src().src())));
        });
    }
    return r;
}

// ---------------------------------------------------------------------------

PseudoAlgebra lift_algebra(const IndexedEndofunctor& t, const PseudoAlgebra& alg, const PsiProvider& psi) {
    const PsiProvider big_psi = psi ? psi : PsiProvider([&t](const Bundle& p) { return Psi_component(t, p); });
    const Bundle& p = alg.carrier;
    const BundleSquare psi_p = big_psi(p);
    const BundleSquare psi_lp = big_psi(L_obj(p).bundle);
    BundleSquare c2 = compose(t(alg.structure), psi_p);
    BundleTwoCell zeta2 = t(alg.zeta);
    BundleTwoCell theta2 = whisker_right(t(alg.theta), compose(psi_lp, L_mor(psi_p)));
    return PseudoAlgebra{t(p), std::move(c2), std::move(zeta2), std::move(theta2)};
}

std::string_view to_string(PreservationMode m) noexcept {
    switch (m) {
        case PreservationMode::opfibration: return "opfibration";
        case PreservationMode::pseudo_opfibration: return "pseudo-opfibration";
        case PreservationMode::fibration: return "fibration";
        case PreservationMode::pseudo_fibration: return "pseudo-fibration";
    }
    return "?";
}

PreservationMode parse_mode(const std::string& s) {
    for (auto m : {PreservationMode::opfibration, PreservationMode::pseudo_opfibration, PreservationMode::fibration,
                   PreservationMode::pseudo_fibration})
        if (s == to_string(m)) return m;
    throw Error(ErrorCode::UnknownReference,
                "unknown mode '" + s + "' (opfibration, pseudo-opfibration, fibration, pseudo-fibration)");
}

namespace {

void fail_hard(const Report& r) {
    std::string msg;
    for (const auto& c : r.checks)
        if (c.status == Status::fail) {
            msg += c.id;
            for (const auto& w : c.witnesses) msg += " (" + w + ")";
            msg += "; ";
        }
    throw Error(ErrorCode::TheoremViolation, msg);
}

// The opfibration half; fibrations come here through op.
void preserve_opfibration(const IndexedEndofunctor& t, const Bundle& p, bool pseudo, const std::string& mode,
                          const std::string& tag, const std::string& label, Report& out) {
    const std::string anchor = "indexed endofunctors preserve " + mode + "s";
    const bool hypothesis = pseudo ? is_pseudo_opfibration(p) : is_opfibration(p).holds;
    if (!hypothesis) {
        out.vacuous("preserve." + mode + tag, anchor, "hypothesis not satisfied");
        return;
    }
    const FibrationResult fr = is_opfibration(p);
    if (!fr.cleavage) throw Error(ErrorCode::TheoremViolation, "pseudo-opfibration without a cleavage");
    const PseudoAlgebra alg = cleavage_to_algebra(*fr.cleavage);
    Report base = verify_pseudoalgebra(alg, label);
    if (!base.ok()) fail_hard(base);
    const PseudoAlgebra lifted = lift_algebra(t, alg);
    const std::string lifted_label = t.name + "(" + label + ")";
    Report r = verify_pseudoalgebra(lifted, lifted_label);
    const Bundle tp = t(p);
    r.run("preserve." + mode + tag, anchor, [&]() -> std::optional<std::string> {
        const bool holds = pseudo ? is_pseudo_opfibration(tp) : is_opfibration(tp).holds;
        if (!holds) return "T p fails the criterion";
        return std::nullopt;
    });
    r.run("preserve.oracle" + tag, "lift oracle agrees on T p", [&]() -> std::optional<std::string> {
        if (!direct_supine_oracle(tp).holds) return "the lift oracle finds a missing lift on T p";
        return std::nullopt;
    });
    if (alg.zeta.is_identity())
        r.run("preserve.normalized" + tag, "lifting preserves normality", [&]() -> std::optional<std::string> {
            if (!lifted.zeta.is_identity()) return "T zeta is not an identity";
            return std::nullopt;
        });
    for (auto& c : r.checks)
        if (c.id.rfind("preserve." + mode, 0) == 0 && c.status == Status::pass)
            c.witnesses.push_back("lifted algebra on " + lifted_label + ": " + std::string(to_string(classify(lifted))) +
                                  ", " + std::to_string(tp.total()->num_objects()) + " objects");
    if (!r.ok()) fail_hard(r);
    out.append(std::move(r));
}

}  // namespace

Report check_preservation(const IndexedEndofunctor& t, const Bundle& p, PreservationMode mode,
                          const std::string& label) {
    Report r;
    const std::string tag = "[" + t.name + "," + label + "]";
    const std::string m(to_string(mode));
    switch (mode) {
        case PreservationMode::opfibration:
        case PreservationMode::pseudo_opfibration:
            preserve_opfibration(t, p, mode == PreservationMode::pseudo_opfibration, m, tag, label, r);
            break;
        case PreservationMode::fibration:
        case PreservationMode::pseudo_fibration: {
            const bool pseudo = mode == PreservationMode::pseudo_fibration;
            preserve_opfibration(op_conjugate(t), op_dual(p), pseudo, m, tag, "op " + label, r);
            const bool hyp = pseudo ? is_pseudo_fibration(p) : is_fibration(p).holds;
            if (hyp) {
                const Bundle tp = t(p);
                r.run("preserve." + m + ".direct" + tag, "T p passes the fibration criterion directly",
                      [&]() -> std::optional<std::string> {
                          const bool holds = pseudo ? is_pseudo_fibration(tp) : is_fibration(tp).holds;
                          if (!holds) return "T p fails the fibration criterion";
                          return std::nullopt;
                      });
                if (!r.ok()) fail_hard(r);
            }
            break;
        }
    }
    return r;
}

}  // namespace fibcat
