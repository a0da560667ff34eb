#include "fibcat/algebra.hpp"

#include "fibcat/constructions.hpp"
#include "fibcat/street.hpp"

namespace fibcat {

namespace {

int count(const Category& c) { return static_cast<int>(c.num_objects()); }

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorCode::TheoremViolation, what); }

[[noreturn]] void bad_cleavage(const std::string& what) { throw Error(ErrorCode::InvalidCleavage, what); }

}  // namespace

// ---------------------------------------------------------------------------

AdjointSearch search_left_adjoint(const Functor& g, UnitMode mode, const std::optional<Functor>& vertical_over,
                                  const std::function<bool(int)>& preferred) {
    const Category& a = *g.dom();
    const Category& x = *g.cod();
    std::vector<int> target(static_cast<std::size_t>(count(x)));
    std::vector<int> unit(static_cast<std::size_t>(count(x)));

    // (a0, u) is initial in x0/G when every u': x0 → G a' factors uniquely.
    const auto initial = [&](int x0, int a0, int u) {
        for (int a1 = 0; a1 < count(a); ++a1)
            for (int u1 : x.hom(x0, g.obj(a1))) {
                int hits = 0;
                for (int h : a.hom(a0, a1)) hits += x.compose(g.mor(h), u) == u1;
                if (hits != 1) return false;
            }
        return true;
    };
    const auto admissible = [&](int u) {
        if (mode == UnitMode::identity ? !x.is_identity(u) : !x.is_iso(u)) return false;
        return !vertical_over || vertical_over->cod()->is_identity(vertical_over->mor(u));
    };

    const auto rank = [&](int a0, int u) { return 2 * (preferred && preferred(a0) ? 0 : 1) + !x.is_identity(u); };
    for (int x0 = 0; x0 < count(x); ++x0) {
        std::optional<std::pair<int, int>> best;
        for (int a0 = 0; a0 < count(a) && !(best && rank(best->first, best->second) == 0); ++a0)
            for (int u : x.hom(x0, g.obj(a0))) {
                if (!admissible(u) || !initial(x0, a0, u)) continue;
                if (!best || rank(a0, u) < rank(best->first, best->second)) best = {a0, u};
            }
        if (!best) return {std::nullopt, x0};
        target[static_cast<std::size_t>(x0)] = best->first;
        unit[static_cast<std::size_t>(x0)] = best->second;
    }

    const auto mediator = [&](int a0, int src_arrow, int a1, int dst_arrow) {
        for (int h : a.hom(a0, a1))
            if (x.compose(g.mor(h), src_arrow) == dst_arrow) return h;
        violation("universal arrow lost its mediator");
    };
    std::vector<int> fmor(x.num_morphisms());
    for (int m = 0; m < static_cast<int>(x.num_morphisms()); ++m) {
        const auto s = static_cast<std::size_t>(x.src(m));
        const auto t = static_cast<std::size_t>(x.tgt(m));
        fmor[static_cast<std::size_t>(m)] = mediator(target[s], unit[s], target[t], x.compose(unit[t], m));
    }
    Functor f = Functor::make(g.cod(), g.dom(), target, std::move(fmor));
    Functor gf = compose(g, f);
    NatTrans eta = NatTrans::make(Functor::identity(g.cod()), gf, unit);
    std::vector<int> eps(static_cast<std::size_t>(count(a)));
    for (int a0 = 0; a0 < count(a); ++a0) {
        const int ga = g.obj(a0);
        eps[static_cast<std::size_t>(a0)] =
            mediator(f.obj(ga), unit[static_cast<std::size_t>(ga)], a0, x.identity(ga));
    }
    NatTrans epsilon = NatTrans::make(compose(f, g), Functor::identity(g.dom()), std::move(eps));
    if (!vcompose(whisker_right(epsilon, f), whisker_left(f, eta)).is_identity())
        violation("triangle identity eps F . F eta = 1 fails");
    if (!vcompose(whisker_left(g, epsilon), whisker_right(eta, g)).is_identity())
        violation("triangle identity G eps . eta G = 1 fails");
    return {AdjointWitness{std::move(f), std::move(eta), std::move(epsilon)}, std::nullopt};
}

AdjointSearch search_right_adjoint(const Functor& g, UnitMode mode, const std::optional<Functor>& vertical_over,
                                   const std::function<bool(int)>& preferred) {
    std::optional<Functor> over;
    if (vertical_over) over = op_dual(*vertical_over);
    AdjointSearch dual = search_left_adjoint(op_dual(g), mode, over, preferred);
    if (!dual.witness) return {std::nullopt, dual.failed_at};
    const AdjointWitness& w = *dual.witness;
    return {AdjointWitness{op_dual(w.adjoint), op_dual(w.counit), op_dual(w.unit)}, std::nullopt};
}

std::optional<AdjointWitness> find_left_adjoint(const Functor& g, UnitMode mode) {
    return search_left_adjoint(g, mode).witness;
}

std::optional<AdjointWitness> find_right_adjoint(const Functor& g, UnitMode mode) {
    return search_right_adjoint(g, mode).witness;
}

// ---------------------------------------------------------------------------

Functor chevalley_tilde(const Bundle& p) {
    const Functor& q = p.proj;
    return Functor::from_terms(
        phi(p.total()).apex, L_obj(p).comma.apex,
        [&](const Term& o) { return comma_object(o.arg(0), q.obj(o.arg(1)), q.mor(o.arg(2))); },
        [&](const Term& m) { return comma_morphism(m.arg(0), q.mor(m.arg(1)), q.mor(m.arg(2)), q.mor(m.arg(3))); });
}

Functor chevalley_hat(const Bundle& p) {
    const Functor& q = p.proj;
    return Functor::from_terms(
        phi(p.total()).apex, R_direct(p).apex,
        [&](const Term& o) { return comma_object(q.obj(o.arg(0)), o.arg(1), q.mor(o.arg(2))); },
        [&](const Term& m) { return comma_morphism(q.mor(m.arg(0)), m.arg(1), q.mor(m.arg(2)), q.mor(m.arg(3))); });
}

int Cleavage::lift(int e, int alpha) const {
    auto it = lifts.find({e, alpha});
    if (it == lifts.end())
        bad_cleavage("no lift chosen for e=" + bundle.total()->object(e).to_string() +
                     ", alpha=" + bundle.base()->morphism(alpha).to_string());
    return it->second;
}

bool Cleavage::normalized() const {
    const Category& e = *bundle.total();
    const Category& b = *bundle.base();
    for (const auto& [key, f] : lifts)
        if (b.is_identity(key.second) && !e.is_identity(f)) return false;
    return true;
}

void validate_cleavage(const Cleavage& cl) {
    const Category& e = *cl.bundle.total();
    const Category& b = *cl.bundle.base();
    const Functor& p = cl.bundle.proj;
    const bool op = cl.kind == CleavageKind::opcleavage;
    for (int x = 0; x < count(e); ++x)
        for (int alpha = 0; alpha < static_cast<int>(b.num_morphisms()); ++alpha) {
            if ((op ? b.src(alpha) : b.tgt(alpha)) != p.obj(x)) continue;
            const int f = cl.lift(x, alpha);
            if (p.mor(f) != alpha) bad_cleavage("lift " + e.morphism(f).to_string() + " does not lie over " +
                                                b.morphism(alpha).to_string());
            if ((op ? e.src(f) : e.tgt(f)) != x)
                bad_cleavage("lift " + e.morphism(f).to_string() + " has the wrong endpoint");
        }
}

Cleavage op_dual(const Cleavage& cl) {
    Cleavage out;
    out.kind = cl.kind == CleavageKind::opcleavage ? CleavageKind::cleavage : CleavageKind::opcleavage;
    out.bundle = op_dual(cl.bundle);
    out.lifts = cl.lifts;
    return out;
}

namespace {

std::string lift_witness(const Term& e, const Term& alpha) {
    return "e=" + e.to_string() + ", α=" + alpha.to_string();
}

// Cleavage from the adjoint: the universal arrow at (e, b, α) is an object
// comma(e0, e1, f) of ΦE whose arrow f is the lift.
Cleavage cleavage_from_adjoint(const Bundle& p, const Functor& adjoint, CleavageKind kind) {
    const Category& e = *p.total();
    const Category& b = *p.base();
    const Category& x = *adjoint.dom();
    const Category& fe = *adjoint.cod();
    Cleavage cl{kind, p, {}};
    for (int o = 0; o < count(x); ++o) {
        const Term& obj = x.object(o);
        const Term& chosen = fe.object(adjoint.obj(o));
        const bool op = kind == CleavageKind::opcleavage;
        const int at = e.object_index(op ? obj.arg(0) : obj.arg(1));
        cl.lifts[{at, b.morphism_index(obj.arg(2))}] = e.morphism_index(chosen.arg(2));
    }
    validate_cleavage(cl);
    return cl;
}

// Objects of ΦE whose arrow is an identity, so that identities lift to identities.
std::function<bool(int)> identity_arrows(const Bundle& p, const Functor& g) {
    return [&e = *p.total(), &fe = *g.dom()](int a) {
        return e.is_identity(e.morphism_index(fe.object(a).arg(2)));
    };
}

FibrationResult failed_search(const CatRef& x, int at) {
    const Term& obj = x->object(at);
    FibrationResult r;
    r.witnesses.push_back("e=" + obj.arg(0).to_string() + ", α=" + obj.arg(2).to_string());
    return r;
}

}  // namespace

FibrationResult is_opfibration(const Bundle& p) {
    const Functor g = chevalley_tilde(p);
    AdjointSearch s = search_left_adjoint(g, UnitMode::identity, L_obj(p).d1(), identity_arrows(p, g));
    if (!s.witness) return failed_search(g.cod(), *s.failed_at);
    return {true, cleavage_from_adjoint(p, s.witness->adjoint, CleavageKind::opcleavage), {}};
}

bool is_pseudo_opfibration(const Bundle& p) {
    return search_left_adjoint(chevalley_tilde(p), UnitMode::iso, L_obj(p).d1()).witness.has_value();
}

FibrationResult is_fibration(const Bundle& p) {
    const Functor g = chevalley_hat(p);
    AdjointSearch s = search_right_adjoint(g, UnitMode::identity, R_direct(p).d0, identity_arrows(p, g));
    FibrationResult r;
    if (!s.witness) {
        const Term& obj = g.cod()->object(*s.failed_at);
        r.witnesses.push_back("e=" + obj.arg(1).to_string() + ", α=" + obj.arg(2).to_string());
    } else {
        r = {true, cleavage_from_adjoint(p, s.witness->adjoint, CleavageKind::cleavage), {}};
    }
    if (r.holds != is_opfibration(op_dual(p)).holds)
        violation("fibration criterion disagrees with the opfibration criterion on op p");
    return r;
}

bool is_pseudo_fibration(const Bundle& p) {
    return search_right_adjoint(chevalley_hat(p), UnitMode::iso, R_direct(p).d0).witness.has_value();
}

FibrationResult direct_supine_oracle(const Bundle& p) {
    const Category& e = *p.total();
    const Category& b = *p.base();
    const Functor& q = p.proj;
    const int ne = count(e);
    const int nm = static_cast<int>(e.num_morphisms());

    // f: x → y over α is supine when every g: x → z over β α factors as h f
    // with h over β, uniquely.
    const auto supine = [&](int f) {
        const int x = e.src(f), y = e.tgt(f), alpha = q.mor(f);
        for (int g = 0; g < nm; ++g) {
            if (e.src(g) != x) continue;
            const int z = e.tgt(g);
            for (int beta : b.hom(b.tgt(alpha), q.obj(z))) {
                if (b.compose(beta, alpha) != q.mor(g)) continue;
                int hits = 0;
                for (int h : e.hom(y, z)) hits += q.mor(h) == beta && e.compose(h, f) == g;
                if (hits != 1) return false;
            }
        }
        return true;
    };

    FibrationResult r;
    Cleavage cl{CleavageKind::opcleavage, p, {}};
    for (int x = 0; x < ne; ++x)
        for (int alpha = 0; alpha < static_cast<int>(b.num_morphisms()); ++alpha) {
            if (b.src(alpha) != q.obj(x)) continue;
            std::optional<int> chosen;
            for (int f = 0; f < nm; ++f) {
                if (e.src(f) != x || q.mor(f) != alpha || !supine(f)) continue;
                if (!chosen || (e.is_identity(f) && !e.is_identity(*chosen))) chosen = f;
                if (e.is_identity(*chosen)) break;
            }
            if (chosen)
                cl.lifts[{x, alpha}] = *chosen;
            else
                r.witnesses.push_back(lift_witness(e.object(x), b.morphism(alpha)));
        }
    r.holds = r.witnesses.empty();
    if (r.holds) r.cleavage = std::move(cl);
    return r;
}

FibrationResult direct_prone_oracle(const Bundle& p) {
    FibrationResult r = direct_supine_oracle(op_dual(p));
    if (r.cleavage) r.cleavage = op_dual(*r.cleavage);
    return r;
}

// ---------------------------------------------------------------------------

std::string_view to_string(AlgebraKind k) noexcept {
    switch (k) {
        case AlgebraKind::lax: return "lax";
        case AlgebraKind::pseudo: return "pseudo";
        case AlgebraKind::normalized: return "normalized";
        case AlgebraKind::strict: return "strict";
    }
    return "?";
}

AlgebraKind classify(const PseudoAlgebra& alg) {
    if (!inverse(alg.zeta) || !inverse(alg.theta)) return AlgebraKind::lax;
    if (!alg.zeta.is_identity()) return AlgebraKind::pseudo;
    return alg.theta.is_identity() ? AlgebraKind::strict : AlgebraKind::normalized;
}

PseudoAlgebra cleavage_to_algebra(const Cleavage& cl) {
    if (cl.kind != CleavageKind::opcleavage) bad_cleavage("L-algebras come from opcleavages; dualize first");
    validate_cleavage(cl);
    const Bundle& p = cl.bundle;
    const Category& e = *p.total();
    const Category& b = *p.base();
    const Functor& q = p.proj;
    const LResult l = L_obj(p);
    const Category& le = *l.bundle.total();

    // Objects (e, b, α) with α: pe → b, morphisms cm(ξ, η, α, α').
    std::vector<int> obj(le.num_objects());
    for (int x = 0; x < count(le); ++x) {
        const Term& t = le.object(x);
        obj[static_cast<std::size_t>(x)] = e.tgt(cl.lift(e.object_index(t.arg(0)), b.morphism_index(t.arg(2))));
    }
    std::vector<int> mor(le.num_morphisms());
    for (int m = 0; m < static_cast<int>(le.num_morphisms()); ++m) {
        const Term& t = le.morphism(m);
        const Term& s = le.object(le.src(m));
        const Term& d = le.object(le.tgt(m));
        const int f0 = cl.lift(e.object_index(s.arg(0)), b.morphism_index(s.arg(2)));
        const int f1 = cl.lift(e.object_index(d.arg(0)), b.morphism_index(d.arg(2)));
        const int g = e.compose(f1, e.morphism_index(t.arg(0)));
        const int eta = b.morphism_index(t.arg(1));
        std::optional<int> found;
        int hits = 0;
        for (int h : e.hom(e.tgt(f0), e.tgt(f1)))
            if (q.mor(h) == eta && e.compose(h, f0) == g) {
                found = h;
                ++hits;
            }
        if (hits != 1)
            bad_cleavage("lift " + e.morphism(f0).to_string() + " is not supine: " + std::to_string(hits) +
                         " mediators for " + t.to_string());
        mor[static_cast<std::size_t>(m)] = *found;
    }
    BundleSquare c(l.bundle, p, Functor::make(l.bundle.total(), p.total(), std::move(obj), std::move(mor)),
                   Functor::identity(p.base()));

    const BundleSquare ci = compose(c, i_component(p));
    std::vector<int> zc(static_cast<std::size_t>(count(e)));
    for (int x = 0; x < count(e); ++x) zc[static_cast<std::size_t>(x)] = cl.lift(x, b.identity(q.obj(x)));
    const NatTrans id_b = NatTrans::identity(Functor::identity(p.base()));
    BundleTwoCell zeta(identity_square(p), ci, NatTrans::make(Functor::identity(p.total()), ci.up(), std::move(zc)),
                       id_b);

    // θ at ((e, b1, α), b2, α1) inverts the mediator from the lift of α1 α to
    // the composite of the two lifts.
    const LResult l2 = L_obj(l.bundle);
    const BundleSquare lhs = compose(c, L_mor(c));
    const BundleSquare rhs = compose(c, c_component(p));
    const Category& lle = *l2.bundle.total();
    std::vector<int> tc(lle.num_objects());
    for (int x = 0; x < count(lle); ++x) {
        const Term& t = lle.object(x);
        const Term& inner = t.arg(0);
        const int e0 = e.object_index(inner.arg(0));
        const int f0 = cl.lift(e0, b.morphism_index(inner.arg(2)));
        const int f1 = cl.lift(e.tgt(f0), b.morphism_index(t.arg(2)));
        const int composite = e.compose(f1, f0);
        const int direct = cl.lift(e0, b.compose(b.morphism_index(t.arg(2)), b.morphism_index(inner.arg(2))));
        std::optional<int> h;
        int hits = 0;
        for (int k : e.hom(e.tgt(direct), e.tgt(f1)))
            if (b.is_identity(q.mor(k)) && e.compose(k, direct) == composite) {
                h = k;
                ++hits;
            }
        if (hits != 1) bad_cleavage("no unique comparison of lifts at " + t.to_string());
        auto inv = e.inverse(*h);
        if (!inv) bad_cleavage("comparison of lifts at " + t.to_string() + " is not invertible");
        tc[static_cast<std::size_t>(x)] = *inv;
    }
    BundleTwoCell theta(lhs, rhs, NatTrans::make(lhs.up(), rhs.up(), std::move(tc)), id_b);
    return PseudoAlgebra{p, std::move(c), std::move(zeta), std::move(theta)};
}

PseudoAlgebra free_algebra(const Bundle& p) {
    const Bundle lp = L_obj(p).bundle;
    BundleSquare c = c_component(p);
    BundleTwoCell zeta = identity_2cell(identity_square(lp));
    BundleTwoCell theta = identity_2cell(compose(c, L_mor(c)));
    return PseudoAlgebra{lp, std::move(c), std::move(zeta), std::move(theta)};
}

namespace {

std::optional<std::string> same_cell(const BundleTwoCell& a, const BundleTwoCell& b) { return two_cell_difference(a, b); }

}  // namespace

Report verify_pseudoalgebra(const PseudoAlgebra& alg, const std::string& label) {
    Report r;
    const std::string tag = "[" + label + "]";
    const Bundle& p = alg.carrier;
    const BundleSquare& c = alg.structure;
    r.run("alg.boundaries" + tag, "c: L E -> E over the identity, zeta: 1 => c i, theta: c Lc => c cE",
          [&]() -> std::optional<std::string> {
              if (!(c.src() == L_obj(p).bundle) || !(c.tgt() == p)) return "structure map has the wrong boundary";
              if (!equal_functor(c.down(), Functor::identity(p.base()))) return "downstairs of c is not the identity";
              if (!(alg.zeta.src() == identity_square(p)) || !(alg.zeta.tgt() == compose(c, i_component(p))))
                  return "zeta has the wrong boundary";
              if (!(alg.theta.src() == compose(c, L_mor(c))) || !(alg.theta.tgt() == compose(c, c_component(p))))
                  return "theta has the wrong boundary";
              return std::nullopt;
          });
    r.run("alg.unit_left" + tag, "lax algebra unit law, first form: theta iDE . zeta c = 1", [&] {
        const BundleTwoCell lhs =
            vcompose(whisker_right(alg.theta, i_component(L_obj(p).bundle)), whisker_right(alg.zeta, c));
        return same_cell(lhs, identity_2cell(c));
    });
    r.run("alg.unit_right" + tag, "lax algebra unit law, second form: theta Li . c Lzeta = 1", [&] {
        const BundleTwoCell lhs =
            vcompose(whisker_right(alg.theta, L_mor(i_component(p))), whisker_left(c, L_2cell(alg.zeta)));
        return same_cell(lhs, identity_2cell(c));
    });
    r.run("alg.assoc" + tag, "lax algebra associativity coherence: theta LcE . c Ltheta = theta cDE . theta L^2c", [&] {
        const Bundle lp = L_obj(p).bundle;
        const BundleTwoCell lhs =
            vcompose(whisker_right(alg.theta, L_mor(c_component(p))), whisker_left(c, L_2cell(alg.theta)));
        const BundleTwoCell rhs =
            vcompose(whisker_right(alg.theta, c_component(lp)), whisker_right(alg.theta, L_pow(c, 2)));
        return same_cell(lhs, rhs);
    });
    r.run("alg.zeta_invertible" + tag, "pseudoalgebra: zeta invertible", [&]() -> std::optional<std::string> {
        if (!inverse(alg.zeta)) return "zeta has a non-invertible component";
        return std::nullopt;
    });
    r.run("alg.theta_invertible" + tag, "pseudoalgebra: theta invertible", [&]() -> std::optional<std::string> {
        if (!inverse(alg.theta)) return "theta has a non-invertible component";
        return std::nullopt;
    });
    if (alg.zeta.is_identity())
        r.run("alg.normalized" + tag, "normalized algebra: zeta = 1", [] { return std::optional<std::string>{}; });
    else
        r.vacuous("alg.normalized" + tag, "normalized algebra: zeta = 1", "zeta is not an identity: pseudo only");
    return r;
}

Report verify_lax_homomorphism(const PseudoAlgebra& src, const PseudoAlgebra& tgt, const BundleSquare& f,
                               const BundleTwoCell& theta_f, const std::string& label) {
    Report r;
    const std::string tag = "[" + label + "]";
    r.run("hom.boundaries" + tag, "theta_f: c' Lf => f c", [&]() -> std::optional<std::string> {
        if (!(f.src() == src.carrier) || !(f.tgt() == tgt.carrier)) return "f does not join the carriers";
        if (!(theta_f.src() == compose(tgt.structure, L_mor(f)))) return "theta_f does not start at c' Lf";
        if (!(theta_f.tgt() == compose(f, src.structure))) return "theta_f does not end at f c";
        return std::nullopt;
    });
    r.run("hom.unit" + tag, "lax homomorphism unit coherence: theta_f i . zeta' f = f zeta", [&] {
        const BundleTwoCell lhs =
            vcompose(whisker_right(theta_f, i_component(src.carrier)), whisker_right(tgt.zeta, f));
        return same_cell(lhs, whisker_left(f, src.zeta));
    });
    r.run("hom.mult" + tag, "lax homomorphism multiplication coherence: f theta . theta_f Lc . c' L theta_f = theta_f cE . theta' L^2 f",
          [&] {
              const BundleTwoCell lhs = vcompose(
                  whisker_left(f, src.theta),
                  vcompose(whisker_right(theta_f, L_mor(src.structure)), whisker_left(tgt.structure, L_2cell(theta_f))));
              const BundleTwoCell rhs = vcompose(whisker_right(theta_f, c_component(src.carrier)),
                                                 whisker_right(tgt.theta, L_pow(f, 2)));
              return same_cell(lhs, rhs);
          });
    if (theta_f.is_identity())
        r.run("hom.strict" + tag, "homomorphism: theta_f = 1", [] { return std::optional<std::string>{}; });
    else if (inverse(theta_f))
        r.vacuous("hom.strict" + tag, "homomorphism: theta_f = 1", "theta_f invertible: pseudo-homomorphism");
    else
        r.vacuous("hom.strict" + tag, "homomorphism: theta_f = 1", "theta_f not invertible: lax only");
    return r;
}

std::pair<BundleSquare, BundleTwoCell> unit_as_lax_homomorphism(const PseudoAlgebra& alg) {
    const Bundle& p = alg.carrier;
    const PseudoAlgebra fr = free_algebra(p);
    const BundleSquare i = i_component(p);
    const BundleSquare from = compose(fr.structure, L_mor(i));
    const BundleSquare to = compose(i, alg.structure);
    const Category& e = *p.total();
    const Category& b = *p.base();
    const Functor& c = alg.structure.up();
    const Category& le = *L_obj(p).bundle.total();
    // At (e, b, α): (c(1_e, α) ζ_e, 1_b) into (c(e,b,α), b, 1_b).
    std::vector<int> comp(le.num_objects());
    for (int x = 0; x < count(le); ++x) {
        const Term& t = le.object(x);
        const int e0 = e.object_index(t.arg(0));
        const int alpha = b.morphism_index(t.arg(2));
        const Term& id_b = b.morphism(b.identity(b.tgt(alpha)));
        const Term reindex = comma_morphism(e.morphism(e.identity(e0)), t.arg(2), b.morphism(b.identity(b.src(alpha))), t.arg(2));
        const int xi = e.compose(c.mor(le.morphism_index(reindex)), alg.zeta.up().component(e0));
        comp[static_cast<std::size_t>(x)] = le.morphism_index(comma_morphism(e.morphism(xi), id_b, t.arg(2), id_b));
    }
    BundleTwoCell cell(from, to, NatTrans::make(from.up(), to.up(), std::move(comp)),
                       NatTrans::identity(Functor::identity(p.base())));
    return {i, std::move(cell)};
}

}  // namespace fibcat
