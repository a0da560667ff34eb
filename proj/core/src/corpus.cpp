#include "fibcat/corpus.hpp"

#include "fibcat/catalog.hpp"
#include "fibcat/iso.hpp"

namespace fibcat {

const Bundle& Corpus::bundle(const std::string& name) const {
    for (const auto& nb : bundles)
        if (nb.name == name) return nb.bundle;
    throw Error(ErrorCode::UnknownReference, "no corpus bundle " + name);
}

Bundle point_bundle(const std::string& at) {
    auto two = walking_arrow();
    return Bundle{point(two, two->object_index(Term::atom(at)))};
}

Bundle cod_bundle() { return Bundle{phi(walking_arrow()).d1}; }
Bundle dom_bundle() { return Bundle{phi(walking_arrow()).d0}; }

std::vector<BundleSquare> enumerate_squares(const Bundle& p, const Bundle& q, std::size_t max) {
    std::vector<BundleSquare> out;
    for (const auto& down : enumerate_functors(p.base(), q.base())) {
        LegConstraint leg{compose(down, p.proj), q.proj};
        for (const auto& up : enumerate_functors(p.total(), q.total(), {leg}, max - out.size())) {
            out.emplace_back(p, q, up, down);
            if (out.size() >= max) return out;
        }
    }
    return out;
}

std::vector<BundleTwoCell> enumerate_2cells(const BundleSquare& f, const BundleSquare& g, std::size_t max) {
    std::vector<BundleTwoCell> out;
    for (const auto& down : enumerate_nat_trans(f.down(), g.down()))
        for (const auto& up : enumerate_nat_trans(f.up(), g.up())) {
            if (!equal_nat(whisker_left(f.tgt().proj, up), whisker_right(down, f.src().proj))) continue;
            out.emplace_back(f, g, up, down);
            if (out.size() >= max) return out;
        }
    return out;
}

namespace {

Term a(const char* s) { return Term::atom(s); }

Corpus build_corpus() {
    Corpus c;
    auto one = terminal();
    auto two = walking_arrow();
    const auto add = [&](std::string name, Functor f) { c.bundles.push_back({std::move(name), Bundle{std::move(f)}}); };

    add("id_1", Functor::identity(one));
    add("id_2", Functor::identity(two));
    c.bundles.push_back({"j0", point_bundle("0")});
    c.bundles.push_back({"j1", point_bundle("1")});
    c.bundles.push_back({"cod", cod_bundle()});
    c.bundles.push_back({"dom", dom_bundle()});
    add("bang_2", to_terminal(two));

    auto disc = discrete({a("0"), a("1")});
    add("disc_2", Functor::from_terms(disc, two, [](const Term& x) { return x; },
                                      [](const Term& m) { return m; }));

    add("proj_2x2", product(two, two).proj0);
    add("iso_1", to_terminal(walking_iso()));
    add("z2_1", to_terminal(cyclic_group(2)));
    add("idem_1", to_terminal(idempotent_monoid()));

    // l → t ← r over 2, with l, r over 0.
    auto vee = make_poset({a("l"), a("r"), a("t")}, {{a("lt"), a("l"), a("t")}, {a("rt"), a("r"), a("t")}});
    add("vee", Functor::from_terms(vee, two, [](const Term& x) { return x == a("t") ? a("1") : a("0"); },
                                   [&](const Term& m) {
                                       if (m == a("lt") || m == a("rt")) return a("a");
                                       return identity_term(m.arg(0) == a("t") ? a("1") : a("0"));
                                   }));

    // 0 ≤ 1 ≤ 2 onto 0 ≤ 1, collapsing 1 and 2.
    auto c3 = chain(3);
    add("chain3_2", Functor::from_terms(c3, two, [](const Term& x) { return x == a("0") ? a("0") : a("1"); },
                                        [&](const Term& m) {
                                            if (m.tag() == "le" && m.arg(0) == a("0")) return a("a");
                                            if (m.tag() == "le") return identity_term(a("1"));
                                            return identity_term(m.arg(0) == a("0") ? a("0") : a("1"));
                                        }));
    add("id_z2", Functor::identity(cyclic_group(2)));

    // Squares: identities, cc, and a bounded enumeration between small bundles.
    for (const auto& nb : c.bundles) {
        c.squares.push_back({"id[" + nb.name + "]", identity_square(nb.bundle)});
        c.squares.push_back({"cc[" + nb.name + "]", cc_square(nb.bundle)});
    }
    const char* pairs[][2] = {{"id_1", "id_2"}, {"id_2", "id_1"}, {"j0", "cod"},    {"j1", "dom"},
                              {"id_2", "cod"},  {"cod", "id_2"},  {"j0", "id_1"},   {"id_1", "j1"},
                              {"proj_2x2", "cod"}, {"vee", "id_2"}, {"chain3_2", "cod"}, {"z2_1", "iso_1"},
                              {"bang_2", "bang_2"}, {"cod", "cod"}};
    for (const auto& pr : pairs) {
        const Bundle& p = c.bundle(pr[0]);
        const Bundle& q = c.bundle(pr[1]);
        int k = 0;
        for (auto& sq : enumerate_squares(p, q, 3))
            c.squares.push_back({std::string(pr[0]) + "->" + pr[1] + "#" + std::to_string(k++), std::move(sq)});
    }

    // 2-cells: identities on a few squares plus every non-identity cell
    // between listed parallel squares, bounded.
    const std::size_t nsq = c.squares.size();
    for (std::size_t i = 0; i < nsq; ++i)
        for (std::size_t j = 0; j < nsq; ++j) {
            const auto& f = c.squares[i].square;
            const auto& g = c.squares[j].square;
            if (!(f.src() == g.src()) || !(f.tgt() == g.tgt())) continue;
            if (f.src().total()->num_objects() > 4 || f.tgt().total()->num_objects() > 4) continue;
            int k = 0;
            for (auto& cell : enumerate_2cells(f, g, 2)) {
                c.cells.push_back({c.squares[i].name + "=>" + c.squares[j].name + "#" + std::to_string(k++), std::move(cell)});
            }
        }
    return c;
}

}  // namespace

const Corpus& standard_corpus() {
    static const Corpus corpus = build_corpus();
    return corpus;
}

}  // namespace fibcat
