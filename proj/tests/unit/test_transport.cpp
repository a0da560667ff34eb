#include "doctest.h"
#include "fibcat/catalog.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/street.hpp"
#include "fibcat/transport.hpp"
#include "mutations.hpp"

using namespace fibcat;

namespace {

const Corpus& corpus() { return standard_corpus(); }

const Check* find(const Report& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return &c;
    return nullptr;
}

bool failed(const Report& r, const std::string& id) {
    const Check* c = find(r, id);
    if (!c) FAIL("no check " << id);
    return c && c->status == Status::fail;
}

std::vector<std::string> failures(const Report& r) {
    std::vector<std::string> out;
    for (const auto& c : r.checks)
        if (c.status == Status::fail) out.push_back(c.id + (c.witnesses.empty() ? "" : " " + c.witnesses[0]));
    return out;
}

}  // namespace

TEST_CASE("builtin functor lookup") {
    CHECK(builtin_functor("identity").name == "identity");
    CHECK(builtin_functor("const_fiber:3").name == "const_fiber:3");
    CHECK(builtin_functor("fiber_power:2").name == "fiber_power:2");
    CHECK(builtin_functor("base_square").name == "base_square");
    for (const char* bad : {"", "const_fiber", "const_fiber:0", "fiber_power:x", "fiber_power:2x", "nope"}) {
        try {
            builtin_functor(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnknownReference);
        }
    }
    CHECK(builtin_functors().size() == 3);
}

TEST_CASE("const_fiber and fiber_power on objects") {
    const Bundle cod = corpus().bundle("cod");
    const Bundle t = builtin_functor("const_fiber:2")(cod);
    CHECK(t.base() == cod.base());
    CHECK(t.total()->num_objects() == 2 * 2);
    CHECK(t.proj.obj(Term::tuple("pb", {atom("1"), atom("0")})) == atom("1"));

    // fibre products of cod over 2: objects are pairs of arrows with a common codomain
    const Bundle p2 = fiber_power(2)(cod);
    CHECK(p2.total()->num_objects() == 1 + 4);
    const Bundle p3 = fiber_power(3)(cod);
    CHECK(p3.total()->num_objects() == 1 + 8);
    CHECK(fiber_power(1)(cod) == cod);

    // (B×F)^2 over B is B×F×F
    const Bundle bf = builtin_functor("const_fiber:2")(I_of(walking_arrow()));
    const Bundle sq = fiber_power(2)(bf);
    CHECK(sq.total()->num_objects() == 2 * 2 * 2);
    CHECK(sq.total()->num_morphisms() == 3 * 3 * 3);
}

TEST_CASE("validate_indexed") {
    for (const auto& t : builtin_functors()) {
        const Report r = validate_indexed(t, corpus());
        CHECK_MESSAGE(r.ok(), t.name << ": " << failures(r).size() << " failures");
        CHECK(r.checks.size() > 50);
    }
    const Report bad = validate_indexed(base_square(), corpus());
    CHECK_FALSE(bad.ok());
    // (j, j): id_1 → id_2 is a pullback, but 1×1 → 2×2 over j is not
    bool named = false;
    for (const auto& c : bad.checks)
        if (c.status == Status::fail) {
            CHECK(c.id.find(".prone[") != std::string::npos);
            if (!c.witnesses.empty() && c.witnesses[0].find("prone square") == 0) named = true;
        }
    CHECK(named);
}

TEST_CASE("psi and Psi for the identity functor are identities") {
    const auto t = identity_endofunctor();
    for (const auto& nb : corpus().bundles) {
        CHECK(psi_n(t, nb.bundle, 1) == identity_square(K_n(nb.bundle, 1)));
        CHECK(psi_n(t, nb.bundle, 2) == identity_square(K_n(nb.bundle, 2)));
        CHECK(Psi_component(t, nb.bundle) == identity_square(L_obj(nb.bundle).bundle));
    }
}

TEST_CASE("Psi for const_fiber forgets the source") {
    const auto t = builtin_functor("const_fiber:2");
    for (const char* name : {"cod", "id_2", "vee"}) {
        const Bundle& p = corpus().bundle(name);
        const BundleSquare psi = Psi_component(t, p);
        const Functor& up = psi.up();
        // ((b, x), b', α) ↦ (b', x)
        for (const Term& o : up.dom()->objects()) {
            CHECK(up.obj(o) == Term::tuple("pb", {o.arg(1), o.arg(0).arg(1)}));
        }
        CHECK(is_isomorphism(psi_n(t, p, 1)));
        CHECK(is_isomorphism(psi_n(t, p, 2)));
    }
}

TEST_CASE("transition laws hold for the builtins") {
    for (const auto& t : builtin_functors()) {
        const Report r = verify_transition(t, corpus());
        CHECK_MESSAGE(r.ok(), t.name);
        for (const auto& f : failures(r)) MESSAGE(f);
        CHECK(r.checks.size() > 100);
    }
}

TEST_CASE("a twisted transition map is caught") {
    const auto t = identity_endofunctor();
    const Report r = verify_transition(t, corpus(), mutation::twisted_psi(t));
    CHECK(failed(r, "transition.identity.Psi_unit[id_z2]"));
    CHECK(failed(r, "transition.identity.Psi_mult[id_z2]"));
    CHECK_FALSE(failed(r, "transition.identity.Psi_unit[cod]"));
    CHECK_FALSE(failed(r, "transition.identity.Psi_over_cod[id_z2]"));
    const PseudoAlgebra free = free_algebra(corpus().bundle("id_z2"));
    const PseudoAlgebra lifted = lift_algebra(t, free, mutation::twisted_psi(t));
    CHECK_FALSE(verify_pseudoalgebra(lifted).ok());
}

TEST_CASE("lifted algebras") {
    for (const auto& t : builtin_functors())
        for (const auto& nb : corpus().bundles) {
            const FibrationResult fr = is_opfibration(nb.bundle);
            if (!fr.holds) continue;
            const PseudoAlgebra alg = cleavage_to_algebra(*fr.cleavage);
            const PseudoAlgebra lifted = lift_algebra(t, alg);
            const Report r = verify_pseudoalgebra(lifted, t.name + "(" + nb.name + ")");
            CHECK_MESSAGE(r.ok(), t.name << " on " << nb.name);
            CHECK(lifted.carrier == t(nb.bundle));
            if (alg.zeta.is_identity()) CHECK(lifted.zeta.is_identity());
            CHECK(lifted.structure.down() == Functor::identity(nb.bundle.base()));
        }
    // the free algebra lifts to a strict algebra, not necessarily the free one on T p
    const auto t = fiber_power(2);
    const PseudoAlgebra lifted = lift_algebra(t, free_algebra(corpus().bundle("cod")));
    CHECK(classify(lifted) == AlgebraKind::strict);
}

TEST_CASE("check_preservation") {
    const auto fp = fiber_power(2);
    const Report r = check_preservation(fp, corpus().bundle("cod"), PreservationMode::opfibration, "cod");
    CHECK(r.ok());
    const Check* main = find(r, "preserve.opfibration[fiber_power:2,cod]");
    REQUIRE(main);
    CHECK(main->status == Status::pass);
    CHECK_FALSE(main->witnesses.empty());
    CHECK(find(r, "preserve.normalized[fiber_power:2,cod]"));

    const Report vac = check_preservation(fp, corpus().bundle("j0"), PreservationMode::opfibration, "j0");
    REQUIRE(vac.checks.size() == 1);
    CHECK(vac.checks[0].status == Status::vacuous);
    CHECK(vac.checks[0].witnesses.at(0) == "hypothesis not satisfied");

    const auto cf = builtin_functor("const_fiber:2");
    const Report fib = check_preservation(cf, corpus().bundle("j0"), PreservationMode::fibration, "j0");
    CHECK(fib.ok());
    const Check* fmain = find(fib, "preserve.fibration[const_fiber:2,j0]");
    REQUIRE(fmain);
    CHECK(fmain->status == Status::pass);
    CHECK(find(fib, "preserve.fibration.direct[const_fiber:2,j0]"));

    const Report vac2 = check_preservation(cf, corpus().bundle("j1"), PreservationMode::fibration, "j1");
    CHECK(vac2.checks.at(0).status == Status::vacuous);

    for (auto mode : {PreservationMode::opfibration, PreservationMode::pseudo_opfibration, PreservationMode::fibration,
                      PreservationMode::pseudo_fibration}) {
        CHECK(parse_mode(std::string(to_string(mode))) == mode);
        for (const auto& t : builtin_functors())
            for (const auto& nb : corpus().bundles) CHECK_NOTHROW(check_preservation(t, nb.bundle, mode, nb.name));
    }
    CHECK_THROWS(parse_mode("cartesian"));
}

TEST_CASE("base_square has no transition map on j0") {
    // not indexed: T d0 is not prone, so the comparison defining Psi does not exist
    const auto t = base_square();
    CHECK_THROWS(Psi_component(t, corpus().bundle("j0")));
}
