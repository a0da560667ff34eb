#include "fibcat/iso.hpp"

#include <algorithm>

namespace fibcat {

namespace {

struct Search {
    const CatRef& ca;
    const CatRef& cb;
    const Category& a;
    const Category& b;
    const std::vector<LegConstraint>& legs;
    bool bijective;
    std::size_t max;
    std::vector<Functor> found;
    std::vector<int> om, mm;
    std::vector<char> oused, mused;
    std::vector<int> morder;

    Search(const CatRef& a_, const CatRef& b_, const std::vector<LegConstraint>& l, bool bij, std::size_t mx)
        : ca(a_), cb(b_), a(*a_), b(*b_), legs(l), bijective(bij), max(mx), om(a.num_objects(), -1),
          mm(a.num_morphisms(), -1), oused(b.num_objects(), 0), mused(b.num_morphisms(), 0) {
        for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m) morder.push_back(m);
        // Identities first, then grouped by hom-set so constraints bite early.
        std::stable_sort(morder.begin(), morder.end(), [&](int x, int y) {
            return std::tuple{!a.is_identity(x), a.src(x), a.tgt(x)} < std::tuple{!a.is_identity(y), a.src(y), a.tgt(y)};
        });
    }

    bool done() const { return found.size() >= max; }

    bool obj_ok(int x, int y) const {
        for (const auto& [la, lb] : legs)
            if (la.obj(x) != lb.obj(y)) return false;
        if (!bijective) return true;
        if (oused[static_cast<std::size_t>(y)]) return false;
        for (std::size_t z = 0; z < a.num_objects(); ++z) {
            const int w = om[z];
            if (w < 0) continue;
            const int zi = static_cast<int>(z);
            if (a.hom(x, zi).size() != b.hom(y, w).size() || a.hom(zi, x).size() != b.hom(w, y).size())
                return false;
        }
        return a.hom(x, x).size() == b.hom(y, y).size();
    }

    void objects(std::size_t i) {
        if (done()) return;
        if (i == a.num_objects()) return morphisms(0);
        const int x = static_cast<int>(i);
        for (int y = 0; y < static_cast<int>(b.num_objects()) && !done(); ++y) {
            if (!obj_ok(x, y)) continue;
            om[i] = y;
            oused[static_cast<std::size_t>(y)] = 1;
            objects(i + 1);
            oused[static_cast<std::size_t>(y)] = 0;
            om[i] = -1;
        }
    }

    int image(int f, int m, int k) const { return f == m ? k : mm[static_cast<std::size_t>(f)]; }

    bool mor_ok(int m, int k) const {
        for (const auto& [la, lb] : legs)
            if (la.mor(m) != lb.mor(k)) return false;
        if (bijective && mused[static_cast<std::size_t>(k)]) return false;
        if (a.is_identity(m)) return b.is_identity(k);
        if (bijective && b.is_identity(k)) return false;
        // Every composite g ∘ f = h with all three images known must be preserved.
        const auto check = [&](int g, int f) {
            const int kg = image(g, m, k), kf = image(f, m, k), kh = image(a.compose(g, f), m, k);
            return kg < 0 || kf < 0 || kh < 0 || b.compose(kg, kf) == kh;
        };
        for (int f = 0; f < static_cast<int>(a.num_morphisms()); ++f) {
            if (a.composable(m, f) && !check(m, f)) return false;
            if (a.composable(f, m) && !check(f, m)) return false;
            if (mm[static_cast<std::size_t>(f)] < 0) continue;
            for (int g : a.hom(a.tgt(f), a.tgt(m)))
                if (a.compose(g, f) == m && !check(g, f)) return false;
        }
        return true;
    }

    void morphisms(std::size_t i) {
        if (done()) return;
        if (i == morder.size()) {
            found.push_back(Functor::make(ca, cb, om, mm));
            return;
        }
        const int m = morder[i];
        for (int k : b.hom(om[static_cast<std::size_t>(a.src(m))], om[static_cast<std::size_t>(a.tgt(m))])) {
            if (done()) return;
            if (!mor_ok(m, k)) continue;
            mm[static_cast<std::size_t>(m)] = k;
            mused[static_cast<std::size_t>(k)] = 1;
            morphisms(i + 1);
            mused[static_cast<std::size_t>(k)] = 0;
            mm[static_cast<std::size_t>(m)] = -1;
        }
    }
};

void check_legs(const CatRef& a, const CatRef& b, const std::vector<LegConstraint>& legs) {
    for (const auto& [la, lb] : legs)
        if (la.dom() != a || lb.dom() != b || la.cod() != lb.cod())
            throw Error(ErrorCode::BoundaryMismatch, "leg constraint does not match the categories");
}

}  // namespace

std::optional<Functor> find_isomorphism(const CatRef& a, const CatRef& b, const std::vector<LegConstraint>& legs) {
    if (a->num_objects() != b->num_objects() || a->num_morphisms() != b->num_morphisms()) return std::nullopt;
    check_legs(a, b, legs);
    Search s(a, b, legs, true, 1);
    s.objects(0);
    if (s.found.empty()) return std::nullopt;
    return s.found.front();
}

std::vector<Functor> enumerate_functors(const CatRef& a, const CatRef& b, const std::vector<LegConstraint>& legs,
                                        std::size_t max) {
    check_legs(a, b, legs);
    Search s(a, b, legs, false, max);
    s.objects(0);
    return std::move(s.found);
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g, std::size_t max) {
    if (f.dom() != g.dom() || f.cod() != g.cod())
        throw Error(ErrorCode::BoundaryMismatch, "enumerate_nat_trans: functors are not parallel");
    const Category& a = *f.dom();
    const Category& b = *f.cod();
    std::vector<NatTrans> out;
    std::vector<int> comp(a.num_objects(), -1);
    // Components are chosen object by object; each naturality square is checked
    // once both of its components are fixed.
    const auto ok_upto = [&](int x) {
        for (int m = 0; m < static_cast<int>(a.num_morphisms()); ++m) {
            const int s = a.src(m), t = a.tgt(m);
            if (s > x || t > x || (s != x && t != x)) continue;
            if (b.compose(g.mor(m), comp[static_cast<std::size_t>(s)]) != b.compose(comp[static_cast<std::size_t>(t)], f.mor(m)))
                return false;
        }
        return true;
    };
    const auto rec = [&](auto&& self, int x) -> void {
        if (out.size() >= max) return;
        if (x == static_cast<int>(a.num_objects())) {
            out.push_back(NatTrans::make(f, g, comp));
            return;
        }
        for (int k : b.hom(f.obj(x), g.obj(x))) {
            comp[static_cast<std::size_t>(x)] = k;
            if (ok_upto(x)) self(self, x + 1);
        }
        comp[static_cast<std::size_t>(x)] = -1;
    };
    rec(rec, 0);
    return out;
}

}  // namespace fibcat
