#include <set>

#include "doctest.h"
#include "fibcat/catalog.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/iso.hpp"
#include "fibcat/street.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

using namespace fibcat;

namespace {

// Objects of L p are triples (e, b, a : pe -> b); count them directly.
std::size_t l_object_count(const Bundle& p) {
    const Category& b = *p.base();
    std::size_t n = 0;
    for (int e = 0; e < static_cast<int>(p.total()->num_objects()); ++e)
        for (int y = 0; y < static_cast<int>(b.num_objects()); ++y) n += b.hom(p.proj.obj(e), y).size();
    return n;
}

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (c.status == Status::fail) return c.id + (c.witnesses.empty() ? "" : ": " + c.witnesses.front());
    return {};
}

}  // namespace

TEST_CASE("L on objects matches the comma oracle") {
    for (const auto& nb : standard_corpus().bundles) {
        const LResult l = L_obj(nb.bundle);
        auto [objs, mors] = oracle::comma_counts(nb.bundle.proj, Functor::identity(nb.bundle.base()));
        CHECK_MESSAGE(l.bundle.total()->num_objects() == objs, nb.name);
        CHECK_MESSAGE(l.bundle.total()->num_morphisms() == mors, nb.name);
        CHECK(l.bundle.total()->num_objects() == l_object_count(nb.bundle));
        CHECK(l.bundle.base() == nb.bundle.base());
    }
}

TEST_CASE("L of small bundles") {
    // L of an identity bundle is the arrow category over cod
    auto two = walking_arrow();
    auto l = L_obj(I_of(two));
    CHECK(find_isomorphism(l.bundle.total(), phi(two).apex, {}).has_value());
    // a point bundle 1 -> 2 at 0 freely becomes the identity of 2
    auto lj0 = L_obj(point_bundle("0"));
    CHECK(is_isomorphism(lj0.bundle.proj));
    // at 1 it becomes the point again
    auto lj1 = L_obj(point_bundle("1"));
    CHECK(lj1.bundle.total()->num_objects() == 1);
    // over the terminal category L does nothing
    auto g = I_of(terminal());
    CHECK(L_obj(g).bundle.total()->num_objects() == 1);
}

TEST_CASE("L is cached and idempotent on repeated calls") {
    auto p = standard_corpus().bundle("cod");
    auto a = L_obj(p);
    auto b = L_obj(p);
    CHECK(a.bundle == b.bundle);
    CHECK(L_pow(p, 2) == L_obj(a.bundle).bundle);
    CHECK(L_pow(p, 0) == p);
}

TEST_CASE("unit and multiplication components") {
    for (const auto& nb : standard_corpus().bundles) {
        const Bundle& p = nb.bundle;
        auto i = i_component(p);
        auto c = c_component(p);
        CHECK(equal_square(compose(c, i_component(L_obj(p).bundle)), identity_square(L_obj(p).bundle)));
        CHECK(equal_square(compose(c, L_mor(i)), identity_square(L_obj(p).bundle)));
        CHECK(is_isomorphism(i.down()));
    }
}

TEST_CASE("monad laws hold across the corpus") {
    Report r = verify_L_monad(standard_corpus());
    CHECK(r.checks.size() > 300);
    CHECK_MESSAGE(r.ok(), first_failure(r));
    std::set<std::string> ids;
    for (const auto& c : r.checks) ids.insert(c.id);
    CHECK(ids.size() == r.checks.size());
}

TEST_CASE("the forgetful multiplication is caught") {
    Corpus small;
    small.bundles.push_back({"id_2", I_of(walking_arrow())});
    small.bundles.push_back({"id_3", I_of(chain(3))});
    Report r = verify_L_monad(small, mutation::forgetful_c);
    CHECK_FALSE(r.ok());
    std::set<std::string> failed;
    for (const auto& c : r.checks)
        if (c.status == Status::fail) failed.insert(c.id);
    CHECK(failed.count("L.unit_left[id_2]"));
    CHECK(failed.count("L.assoc[id_3]"));
    Report k = verify_K_lemmas(small, mutation::forgetful_c);
    bool c_d0_failed = false;
    for (const auto& c : k.checks)
        if (c.id == "K.c_d0[id_2]") c_d0_failed = c.status == Status::fail;
    CHECK(c_d0_failed);
    CHECK(verify_L_monad(small).ok());
}

TEST_CASE("R via duality agrees with the direct comma") {
    for (const auto& nb : standard_corpus().bundles) {
        const Bundle& p = nb.bundle;
        CHECK_NOTHROW(R_comparison(p));
        auto rr = R_obj(p);
        CHECK(rr.bundle.base() == p.base());
        auto [objs, mors] = oracle::comma_counts(Functor::identity(p.base()), p.proj);
        CHECK(rr.bundle.total()->num_objects() == objs);
        CHECK(rr.bundle.total()->num_morphisms() == mors);
        auto i = iR_component(p);
        auto c = cR_component(p);
        CHECK(equal_square(compose(c, iR_component(rr.bundle)), identity_square(rr.bundle)));
        CHECK(equal_square(compose(c, R_mor(i)), identity_square(rr.bundle)));
    }
}

TEST_CASE("R on squares and 2-cells") {
    const auto& corpus = standard_corpus();
    for (const auto& ns : corpus.squares) {
        auto rf = R_mor(ns.square);
        CHECK(rf.src() == R_obj(ns.square.src()).bundle);
        CHECK(equal_square(compose(iR_component(ns.square.tgt()), ns.square),
                           compose(rf, iR_component(ns.square.src()))));
    }
    int n = 0;
    for (const auto& nc : corpus.cells) {
        if (nc.cell.is_identity() || ++n > 12) continue;
        auto ra = R_2cell(nc.cell);
        CHECK(equal_2cell(whisker_left(iR_component(nc.cell.src().tgt()), nc.cell),
                          whisker_right(ra, iR_component(nc.cell.src().src()))));
    }
}

TEST_CASE("K lemmas") {
    Report r = verify_K_lemmas(standard_corpus());
    CHECK_MESSAGE(r.ok(), first_failure(r));
    auto p = standard_corpus().bundle("j0");
    CHECK(K_n(p, 0) == p);
    // K_1 p is the bundle L E -> Phi B given by L of the yanking square
    auto k1 = K_n(p, 1);
    CHECK(k1.total() == L_obj(p).bundle.total());
    CHECK(find_isomorphism(k1.base(), phi(p.base()).apex, {}).has_value());
    CHECK(d1K(p, 0).down() == d1K(p, 0).down());
    CHECK(equal_functor(d1K(p, 0).down(), L_obj(I_of(p.base())).bundle.proj));
}
