#include "doctest.h"
#include "fibcat/algebra.hpp"
#include "fibcat/catalog.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/street.hpp"

using namespace fibcat;

namespace {

const Corpus& corpus() { return standard_corpus(); }

bool failed(const Report& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return c.status == Status::fail;
    FAIL("no check " << id);
    return false;
}

// Post-compose every upstairs and downstairs component of a 2-cell over the
// identity of a one-object base with the base arrow `g` (central in Z/2).
BundleTwoCell twist(const BundleTwoCell& a, const Term& g) {
    const Category& e = *a.up().cod();
    const Category& b = *a.down().cod();
    std::vector<int> up, down;
    for (int c : a.up().components()) up.push_back(e.compose(e.morphism_index(g), c));
    for (int c : a.down().components()) down.push_back(b.compose(b.morphism_index(g), c));
    return BundleTwoCell(a.src(), a.tgt(), NatTrans::make(a.up().src(), a.up().tgt(), up),
                         NatTrans::make(a.down().src(), a.down().tgt(), down));
}

Cleavage identity_cleavage(const Bundle& p) {
    Cleavage cl{CleavageKind::opcleavage, p, {}};
    const Category& e = *p.total();
    for (int m = 0; m < static_cast<int>(e.num_morphisms()); ++m) cl.lifts[{e.src(m), p.proj.mor(m)}] = m;
    return cl;
}

}  // namespace

TEST_CASE("chevalley_tilde on small bundles") {
    auto two = walking_arrow();
    CHECK(equal_functor(chevalley_tilde(I_of(two)), Functor::identity(phi(two).apex)));
    auto j = corpus().bundle("j0");
    auto g = chevalley_tilde(j);
    REQUIRE(g.dom()->num_objects() == 1);
    CHECK(g.obj(g.dom()->object(0)) == comma_object(atom("*"), atom("0"), identity_term(atom("0"))));
    // p̃ commutes with the projections to E and to B
    for (const auto& nb : corpus().bundles) {
        auto t = chevalley_tilde(nb.bundle);
        auto ph = phi(nb.bundle.total());
        auto l = L_obj(nb.bundle);
        CHECK(equal_functor(compose(l.d0(), t), ph.d0));
        CHECK(equal_functor(compose(l.d1(), t), compose(nb.bundle.proj, ph.d1)));
    }
}

TEST_CASE("adjoint search") {
    auto c = chain(3);
    auto w = find_left_adjoint(Functor::identity(c), UnitMode::identity);
    REQUIRE(w);
    CHECK(equal_functor(w->adjoint, Functor::identity(c)));
    CHECK(w->unit.is_identity());
    // 2 → 1 has both adjoints: the points at 0 and at 1
    auto bang = to_terminal(walking_arrow());
    auto l = find_left_adjoint(bang, UnitMode::iso);
    auto r = find_right_adjoint(bang, UnitMode::iso);
    REQUIRE(l);
    REQUIRE(r);
    CHECK(l->adjoint.obj(0) == 0);
    CHECK(r->adjoint.obj(0) == 1);
    CHECK(find_left_adjoint(bang, UnitMode::identity).has_value());
    // a point 1 → 2 at 1 has no left adjoint
    CHECK_FALSE(find_left_adjoint(point(walking_arrow(), 1), UnitMode::iso));
    auto s = search_left_adjoint(chevalley_tilde(corpus().bundle("j0")), UnitMode::identity);
    CHECK_FALSE(s.witness);
    REQUIRE(s.failed_at);
    CHECK(chevalley_tilde(corpus().bundle("j0")).cod()->object(*s.failed_at) ==
          comma_object(atom("*"), atom("1"), atom("a")));
}

TEST_CASE("triangle identities for every adjoint found") {
    for (const auto& nb : corpus().bundles) {
        auto s = search_left_adjoint(chevalley_tilde(nb.bundle), UnitMode::identity, L_obj(nb.bundle).d1());
        if (!s.witness) continue;
        const auto& w = *s.witness;
        auto g = chevalley_tilde(nb.bundle);
        CHECK(vcompose(whisker_right(w.counit, w.adjoint), whisker_left(w.adjoint, w.unit)).is_identity());
        CHECK(vcompose(whisker_left(g, w.counit), whisker_right(w.unit, g)).is_identity());
        CHECK(w.unit.is_identity());
    }
}

TEST_CASE("named fibrations and opfibrations") {
    const auto& c = corpus();
    for (const char* n : {"id_1", "id_2", "cod", "dom", "j1"}) CHECK_MESSAGE(is_opfibration(c.bundle(n)).holds, n);
    for (const char* n : {"id_1", "id_2", "cod", "dom", "j0"}) CHECK_MESSAGE(is_fibration(c.bundle(n)).holds, n);
    auto j = is_opfibration(c.bundle("j0"));
    CHECK_FALSE(j.holds);
    REQUIRE(j.witnesses.size() == 1);
    CHECK(j.witnesses[0] == "e=*, α=a");
    CHECK_FALSE(is_fibration(c.bundle("j1")).holds);
    auto d = direct_supine_oracle(c.bundle("j0"));
    CHECK_FALSE(d.holds);
    CHECK(d.witnesses == j.witnesses);
}

TEST_CASE("Chevalley criterion agrees with the lift oracle") {
    int positive = 0, negative = 0;
    for (const auto& nb : corpus().bundles) {
        const auto a = is_opfibration(nb.bundle);
        const auto b = direct_supine_oracle(nb.bundle);
        CHECK_MESSAGE(a.holds == b.holds, nb.name);
        CHECK(is_fibration(nb.bundle).holds == direct_prone_oracle(nb.bundle).holds);
        (a.holds ? positive : negative)++;
        if (a.holds) {
            CHECK(a.cleavage->normalized());
            CHECK(b.cleavage->normalized());
            CHECK_NOTHROW(validate_cleavage(*a.cleavage));
            CHECK_NOTHROW(validate_cleavage(*b.cleavage));
        }
    }
    CHECK(positive >= 5);
    CHECK(negative >= 2);
}

TEST_CASE("duality and the pseudo variants") {
    for (const auto& nb : corpus().bundles) {
        CHECK(is_fibration(nb.bundle).holds == is_opfibration(op_dual(nb.bundle)).holds);
        // in finite categories an iso unit can always be straightened
        CHECK(is_pseudo_opfibration(nb.bundle) == is_opfibration(nb.bundle).holds);
        CHECK(is_pseudo_fibration(nb.bundle) == is_fibration(nb.bundle).holds);
    }
}

TEST_CASE("cleavages produce normalized pseudoalgebras") {
    for (const auto& nb : corpus().bundles) {
        auto o = is_opfibration(nb.bundle);
        if (!o.holds) continue;
        auto alg = cleavage_to_algebra(*o.cleavage);
        Report r = verify_pseudoalgebra(alg, nb.name);
        CHECK_MESSAGE(r.ok(), nb.name);
        CHECK(alg.zeta.is_identity());
        CHECK(equal_functor(alg.structure.down(), Functor::identity(nb.bundle.base())));
    }
}

TEST_CASE("identity cleavage of id_B is the strict algebra (b1,b2,a) -> b2") {
    auto p = I_of(chain(3));
    auto alg = cleavage_to_algebra(identity_cleavage(p));
    CHECK(classify(alg) == AlgebraKind::strict);
    CHECK(equal_functor(alg.structure.up(), L_obj(p).d1()));
    CHECK(verify_pseudoalgebra(alg).ok());
}

TEST_CASE("cod over 2 with the compose-forward cleavage") {
    auto p = corpus().bundle("cod");
    auto o = is_opfibration(p);
    REQUIRE(o.holds);
    auto alg = cleavage_to_algebra(*o.cleavage);
    // (e, b, a) goes to a composed after e
    const Category& e = *p.total();
    const Category& b = *p.base();
    const Category& le = *L_obj(p).bundle.total();
    for (int x = 0; x < static_cast<int>(le.num_objects()); ++x) {
        const Term& t = le.object(x);
        const Term& arrow = e.object(e.object_index(t.arg(0))).arg(2);
        const Term expected = e.object(alg.structure.up().obj(x));
        const int composite = b.compose(b.morphism_index(t.arg(2)), b.morphism_index(arrow));
        CHECK(expected.arg(2) == b.morphism(composite));
        CHECK(expected.arg(0) == e.object(e.object_index(t.arg(0))).arg(0));
    }
    CHECK(classify(alg) == AlgebraKind::strict);
}

TEST_CASE("a non-normalized cleavage gives a pseudo-only algebra") {
    auto p = corpus().bundle("iso_1");
    const Category& e = *p.total();
    Cleavage cl{CleavageKind::opcleavage, p, {}};
    cl.lifts[{e.object_index(atom("0")), 0}] = e.morphism_index(atom("u"));
    cl.lifts[{e.object_index(atom("1")), 0}] = e.identity(e.object_index(atom("1")));
    CHECK_FALSE(cl.normalized());
    auto alg = cleavage_to_algebra(cl);
    CHECK(classify(alg) == AlgebraKind::pseudo);
    CHECK_FALSE(alg.zeta.is_identity());
    CHECK(inverse(alg.zeta).has_value());
    Report r = verify_pseudoalgebra(alg);
    CHECK(r.ok());
    bool flagged = false;
    for (const auto& c : r.checks)
        if (c.id == "alg.normalized[alg]") flagged = c.status == Status::vacuous;
    CHECK(flagged);
}

TEST_CASE("invalid cleavages are rejected") {
    auto p = corpus().bundle("j0");
    Cleavage cl{CleavageKind::opcleavage, p, {}};
    CHECK_THROWS_AS(validate_cleavage(cl), Error);
    auto cod = corpus().bundle("cod");
    auto good = *is_opfibration(cod).cleavage;
    auto wrong = good;
    for (auto& [key, f] : wrong.lifts) f = cod.total()->identity(key.first);
    CHECK_THROWS_AS(cleavage_to_algebra(wrong), Error);
}

TEST_CASE("free algebras are strict") {
    for (const auto& nb : corpus().bundles) {
        auto alg = free_algebra(nb.bundle);
        CHECK(classify(alg) == AlgebraKind::strict);
        CHECK_MESSAGE(verify_pseudoalgebra(alg, nb.name).ok(), nb.name);
    }
}

TEST_CASE("a twisted theta breaks the coherence equations") {
    auto p = corpus().bundle("id_z2");
    auto alg = cleavage_to_algebra(*is_opfibration(p).cleavage);
    REQUIRE(verify_pseudoalgebra(alg).ok());
    alg.theta = twist(alg.theta, atom("g1"));
    Report r = verify_pseudoalgebra(alg);
    CHECK_FALSE(r.ok());
    CHECK(failed(r, "alg.unit_left[alg]"));
    CHECK(failed(r, "alg.unit_right[alg]"));
    CHECK_FALSE(failed(r, "alg.theta_invertible[alg]"));
}

TEST_CASE("lax homomorphisms") {
    for (const auto& nb : corpus().bundles) {
        auto o = is_opfibration(nb.bundle);
        if (!o.holds) continue;
        auto alg = cleavage_to_algebra(*o.cleavage);
        auto id = identity_square(nb.bundle);
        CHECK(verify_lax_homomorphism(alg, alg, id, identity_2cell(alg.structure)).ok());
        auto [i, cell] = unit_as_lax_homomorphism(alg);
        CHECK_MESSAGE(verify_lax_homomorphism(alg, free_algebra(nb.bundle), i, cell).ok(), nb.name);
    }
    auto p = corpus().bundle("id_z2");
    auto alg = cleavage_to_algebra(*is_opfibration(p).cleavage);
    auto broken = twist(identity_2cell(alg.structure), atom("g1"));
    Report r = verify_lax_homomorphism(alg, alg, identity_square(p), broken);
    CHECK(failed(r, "hom.mult[hom]"));
    CHECK(failed(r, "hom.unit[hom]"));
}
