#pragma once

// Hand-rolled generators for property tests: small random posets and
// monotone maps between them, driven by a seeded std::mt19937.

#include <random>
#include <string>
#include <vector>

#include "fibcat/catalog.hpp"
#include "fibcat/functor.hpp"

namespace gen {

using namespace fibcat;

struct Poset {
    int n = 0;
    std::vector<std::vector<char>> le;  // reflexive-transitive
    CatRef cat;
};

inline Poset random_poset(std::mt19937& rng, int max_objects) {
    std::uniform_int_distribution<int> size(1, max_objects);
    std::bernoulli_distribution edge(0.35);
    Poset p;
    p.n = size(rng);
    p.le.assign(static_cast<std::size_t>(p.n), std::vector<char>(static_cast<std::size_t>(p.n), 0));
    std::vector<Term> objs;
    std::vector<RawCategory::Morphism> arrows;
    for (int i = 0; i < p.n; ++i) objs.push_back(Term::atom("x" + std::to_string(i)));
    for (int i = 0; i < p.n; ++i)
        for (int j = i + 1; j < p.n; ++j)
            if (edge(rng)) {
                p.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
                arrows.push_back({Term::tuple("le", {objs[static_cast<std::size_t>(i)], objs[static_cast<std::size_t>(j)]}),
                                  objs[static_cast<std::size_t>(i)], objs[static_cast<std::size_t>(j)]});
            }
    for (int i = 0; i < p.n; ++i) p.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int k = 0; k < p.n; ++k)
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j)
                if (p.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    p.le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    p.le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    p.cat = make_poset(objs, arrows);
    return p;
}

/// Index in `p.cat` of object x<i>.
inline int obj(const Poset& p, int i) { return p.cat->object_index(Term::atom("x" + std::to_string(i))); }

/// Random monotone map between posets, built greedily in a topological order;
/// falls back to a constant map when the greedy choice gets stuck.
inline Functor random_monotone(std::mt19937& rng, const Poset& a, const Poset& b) {
    std::vector<int> img(static_cast<std::size_t>(a.n), -1);
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i) {
        std::vector<int> cands;
        for (int y = 0; y < b.n; ++y) {
            bool fits = true;
            for (int j = 0; j < i; ++j) {
                const int w = img[static_cast<std::size_t>(j)];
                if (a.le[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] &&
                    !b.le[static_cast<std::size_t>(w)][static_cast<std::size_t>(y)])
                    fits = false;
            }
            if (fits) cands.push_back(y);
        }
        if (cands.empty()) ok = false;
        else img[static_cast<std::size_t>(i)] = cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng)];
    }
    if (!ok) img.assign(static_cast<std::size_t>(a.n), 0);
    std::vector<int> om(a.cat->num_objects());
    for (int i = 0; i < a.n; ++i) om[static_cast<std::size_t>(obj(a, i))] = obj(b, img[static_cast<std::size_t>(i)]);
    std::vector<int> mm(a.cat->num_morphisms());
    for (int m = 0; m < static_cast<int>(a.cat->num_morphisms()); ++m)
        mm[static_cast<std::size_t>(m)] = b.cat->hom(om[static_cast<std::size_t>(a.cat->src(m))],
                                                     om[static_cast<std::size_t>(a.cat->tgt(m))]).at(0);
    return Functor::make(a.cat, b.cat, om, mm);
}

}  // namespace gen
