#include "fibcat/arrowcat.hpp"

#include "fibcat/catalog.hpp"

namespace fibcat {

BundleSquare::BundleSquare(Bundle src, Bundle tgt, Functor up, Functor down)
    : src_(std::move(src)), tgt_(std::move(tgt)), up_(std::move(up)), down_(std::move(down)) {
    if (up_.dom() != src_.total() || up_.cod() != tgt_.total() || down_.dom() != src_.base() ||
        down_.cod() != tgt_.base())
        throw Error(ErrorCode::BoundaryMismatch, "square components do not match its bundles");
    if (auto d = functor_difference(compose(tgt_.proj, up_), compose(down_, src_.proj)))
        throw Error(ErrorCode::SquareDoesNotCommute, "p' up != down p " + *d);
}

BundleTwoCell::BundleTwoCell(BundleSquare src, BundleSquare tgt, NatTrans up, NatTrans down)
    : src_(std::move(src)), tgt_(std::move(tgt)), up_(std::move(up)), down_(std::move(down)) {
    if (!(src_.src() == tgt_.src()) || !(src_.tgt() == tgt_.tgt()))
        throw Error(ErrorCode::BoundaryMismatch, "2-cell between non-parallel squares");
    if (!(up_.src() == src_.up()) || !(up_.tgt() == tgt_.up()) || !(down_.src() == src_.down()) ||
        !(down_.tgt() == tgt_.down()))
        throw Error(ErrorCode::BoundaryMismatch, "2-cell components have the wrong boundary");
    if (auto d = nat_difference(whisker_left(src_.tgt().proj, up_), whisker_right(down_, src_.src().proj)))
        throw Error(ErrorCode::SquareDoesNotCommute, "p' up != down p " + *d);
}

BundleSquare identity_square(const Bundle& p) {
    return BundleSquare(p, p, Functor::identity(p.total()), Functor::identity(p.base()));
}

BundleSquare compose(const BundleSquare& g, const BundleSquare& f) {
    if (!(f.tgt() == g.src())) throw Error(ErrorCode::DomainMismatch, "composing squares that do not meet");
    return BundleSquare(f.src(), g.tgt(), compose(g.up(), f.up()), compose(g.down(), f.down()));
}

std::optional<std::string> square_difference(const BundleSquare& f, const BundleSquare& g) {
    if (!(f.src() == g.src()) || !(f.tgt() == g.tgt()))
        throw Error(ErrorCode::BoundaryMismatch, "comparing non-parallel squares");
    if (auto d = functor_difference(f.up(), g.up())) return "upstairs " + *d;
    if (auto d = functor_difference(f.down(), g.down())) return "downstairs " + *d;
    return std::nullopt;
}

bool equal_square(const BundleSquare& f, const BundleSquare& g) { return !square_difference(f, g); }

std::optional<BundleSquare> inverse(const BundleSquare& f) {
    auto u = inverse(f.up());
    auto d = inverse(f.down());
    if (!u || !d) return std::nullopt;
    return BundleSquare(f.tgt(), f.src(), *u, *d);
}

bool is_isomorphism(const BundleSquare& f) { return inverse(f).has_value(); }

BundleTwoCell identity_2cell(const BundleSquare& f) {
    return BundleTwoCell(f, f, NatTrans::identity(f.up()), NatTrans::identity(f.down()));
}

BundleTwoCell vcompose(const BundleTwoCell& beta, const BundleTwoCell& alpha) {
    return BundleTwoCell(alpha.src(), beta.tgt(), vcompose(beta.up(), alpha.up()), vcompose(beta.down(), alpha.down()));
}

BundleTwoCell whisker_left(const BundleSquare& h, const BundleTwoCell& alpha) {
    return BundleTwoCell(compose(h, alpha.src()), compose(h, alpha.tgt()), whisker_left(h.up(), alpha.up()),
                         whisker_left(h.down(), alpha.down()));
}

BundleTwoCell whisker_right(const BundleTwoCell& alpha, const BundleSquare& h) {
    return BundleTwoCell(compose(alpha.src(), h), compose(alpha.tgt(), h), whisker_right(alpha.up(), h.up()),
                         whisker_right(alpha.down(), h.down()));
}

std::optional<std::string> two_cell_difference(const BundleTwoCell& a, const BundleTwoCell& b) {
    if (auto d = square_difference(a.src(), b.src())) return "source squares differ " + *d;
    if (auto d = square_difference(a.tgt(), b.tgt())) return "target squares differ " + *d;
    if (auto d = nat_difference(a.up(), b.up())) return "upstairs " + *d;
    if (auto d = nat_difference(a.down(), b.down())) return "downstairs " + *d;
    return std::nullopt;
}

bool equal_2cell(const BundleTwoCell& a, const BundleTwoCell& b) { return !two_cell_difference(a, b); }

std::optional<BundleTwoCell> inverse(const BundleTwoCell& a) {
    auto u = inverse(a.up());
    auto d = inverse(a.down());
    if (!u || !d) return std::nullopt;
    return BundleTwoCell(a.tgt(), a.src(), *u, *d);
}

// ---------------------------------------------------------------------------

bool is_prone(const BundleSquare& f) {
    PullbackResult pb = pullback(f.down(), f.tgt().proj);
    Functor m = mediate_pullback(pb, f.src().proj, f.up());
    return is_isomorphism(m);
}

bool is_supine(const BundleSquare& f) { return is_isomorphism(f.up()); }

VerticalProne vertical_prone_factorize(const BundleSquare& f) {
    PullbackResult pb = pullback(f.down(), f.tgt().proj);
    Bundle pulled{pb.proj0};
    BundleSquare prone(pulled, f.tgt(), pb.proj1, f.down());
    BundleSquare vert(f.src(), pulled, mediate_pullback(pb, f.src().proj, f.up()), Functor::identity(f.src().base()));
    return {std::move(vert), std::move(prone)};
}

CatRef fibre(const Bundle& p, const Term& b) {
    const int x = p.base()->object_index(b);
    return pullback(point(p.base(), x), p.proj).apex;
}

BundleSquare prone_fill(const BundleSquare& f, const BundleSquare& g, const Functor& h_down) {
    if (!(g.tgt() == f.tgt()) || h_down.cod() != f.src().base() || h_down.dom() != g.src().base())
        throw Error(ErrorCode::IncompatibleData, "prone_fill: data does not match the prone square");
    if (!equal_functor(g.down(), compose(f.down(), h_down)))
        throw Error(ErrorCode::IncompatibleData, "prone_fill: down g is not down f after h'");
    if (!is_prone(f)) throw Error(ErrorCode::NotProne, "prone_fill: square is not prone");
    PullbackResult cone = PullbackResult::cone(f.down(), f.tgt().proj, f.src().proj, f.up());
    Functor up = mediate_pullback(cone, compose(h_down, g.src().proj), g.up());
    return BundleSquare(g.src(), f.src(), std::move(up), h_down);
}

BundleTwoCell lift_2cell_prone(const BundleSquare& f, const BundleTwoCell& alpha, const NatTrans& beta_down) {
    if (auto d = nat_difference(alpha.down(), whisker_left(f.down(), beta_down)))
        throw Error(ErrorCode::IncompatibleData, "lift_2cell_prone: down alpha != down f beta' " + *d);
    BundleSquare h1 = prone_fill(f, alpha.src(), beta_down.src());
    BundleSquare h2 = prone_fill(f, alpha.tgt(), beta_down.tgt());
    const Category& e = *f.src().total();
    const Category& x = *h1.src().total();
    const Functor& p = f.src().proj;
    const Functor& q = h1.src().proj;
    std::vector<int> comp(x.num_objects());
    for (int o = 0; o < static_cast<int>(x.num_objects()); ++o) {
        int hit = -1;
        for (int m : e.hom(h1.up().obj(o), h2.up().obj(o))) {
            if (f.up().mor(m) != alpha.up().component(o) || p.mor(m) != beta_down.component(q.obj(o))) continue;
            if (hit >= 0) throw Error(ErrorCode::NotProne, "lift_2cell_prone: lift not unique");
            hit = m;
        }
        if (hit < 0) throw Error(ErrorCode::IncompatibleData, "lift_2cell_prone: no lift at " + x.object(o).to_string());
        comp[static_cast<std::size_t>(o)] = hit;
    }
    return BundleTwoCell(h1, h2, NatTrans::make(h1.up(), h2.up(), std::move(comp)), beta_down);
}

// ---------------------------------------------------------------------------

Bundle I_of(const CatRef& b) { return Bundle{Functor::identity(b)}; }

BundleSquare cc_square(const Bundle& p) {
    return BundleSquare(p, I_of(p.base()), p.proj, Functor::identity(p.base()));
}

BundleSquare I_of(const Functor& g) { return BundleSquare(I_of(g.dom()), I_of(g.cod()), g, g); }

BundleTwoCell I_of(const NatTrans& a) { return BundleTwoCell(I_of(a.src()), I_of(a.tgt()), a, a); }

bool check_yanking(const Bundle& p) {
    BundleSquare cc = cc_square(p);
    // cod I = Id on the nose, so the identification is an identity.
    if (cc.tgt().base() != p.base() || cc.tgt().total() != p.base()) return false;
    return equal_functor(cc.down(), Functor::identity(p.base())) && equal_functor(cc.up(), p.proj);
}

Bundle op_dual(const Bundle& p) { return Bundle{op_dual(p.proj)}; }

BundleSquare op_dual(const BundleSquare& f) {
    return BundleSquare(op_dual(f.src()), op_dual(f.tgt()), op_dual(f.up()), op_dual(f.down()));
}

BundleTwoCell op_dual(const BundleTwoCell& a) {
    return BundleTwoCell(op_dual(a.tgt()), op_dual(a.src()), op_dual(a.up()), op_dual(a.down()));
}

}  // namespace fibcat
