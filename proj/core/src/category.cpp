#include "fibcat/category.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "fibcat/size_limit.hpp"

namespace fibcat {

namespace {

constexpr std::size_t kMaxReported = 32;

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct Registry {
    std::mutex mu;
    std::unordered_multimap<std::size_t, std::weak_ptr<const Category>> live;
    std::size_t inserts = 0;
};

Registry& registry() {
    static Registry r;
    return r;
}

class Reporter {
public:
    void add(ErrorCode code, std::string detail) {
        ++count_;
        if (out_.size() < kMaxReported) out_.push_back({code, std::move(detail)});
    }
    bool empty() const { return count_ == 0; }
    std::vector<Violation> take() {
        if (count_ > out_.size())
            out_.push_back({out_.back().code,
                            std::to_string(count_ - out_.size()) + " further violations omitted"});
        return std::move(out_);
    }
    void absorb(const std::vector<Violation>& vs) {
        for (const auto& v : vs) add(v.code, v.detail);
    }

private:
    std::vector<Violation> out_;
    std::size_t count_ = 0;
};

}  // namespace

struct CategoryAccess {
    static bool same(const Category& a, const Category& b) {
        return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.src_ == b.src_ &&
               a.tgt_ == b.tgt_ && a.identity_ == b.identity_ && a.compose_ == b.compose_;
    }

    static void finish(Category& c) {
        const std::size_t n = c.objects_.size();
        const std::size_t m = c.morphisms_.size();
        c.obj_index_.reserve(n);
        c.mor_index_.reserve(m);
        for (std::size_t i = 0; i < n; ++i) c.obj_index_.emplace(c.objects_[i], static_cast<int>(i));
        for (std::size_t i = 0; i < m; ++i) c.mor_index_.emplace(c.morphisms_[i], static_cast<int>(i));
        c.hom_.assign(n * n, {});
        for (std::size_t i = 0; i < m; ++i)
            c.hom_[static_cast<std::size_t>(c.src_[i]) * n + static_cast<std::size_t>(c.tgt_[i])]
                .push_back(static_cast<int>(i));
        std::size_t h = mix(n, m);
        for (const auto& t : c.objects_) h = mix(h, t.hash());
        for (const auto& t : c.morphisms_) h = mix(h, t.hash());
        for (std::size_t i = 0; i < m; ++i) h = mix(mix(h, static_cast<std::size_t>(c.src_[i])),
                                                    static_cast<std::size_t>(c.tgt_[i]));
        for (int v : c.compose_) h = mix(h, static_cast<std::size_t>(v + 1));
        c.fingerprint_ = h;
    }

    static CatRef intern(std::unique_ptr<Category> fresh) {
        finish(*fresh);
        auto& reg = registry();
        std::lock_guard lock(reg.mu);
        auto [lo, hi] = reg.live.equal_range(fresh->fingerprint_);
        for (auto it = lo; it != hi; ++it) {
            if (auto existing = it->second.lock(); existing && same(*existing, *fresh))
                return existing;
        }
        CatRef out(fresh.release());
        reg.live.emplace(out->fingerprint_, out);
        if (++reg.inserts % 1024 == 0) {
            for (auto it = reg.live.begin(); it != reg.live.end();)
                it = it->second.expired() ? reg.live.erase(it) : std::next(it);
        }
        return out;
    }
};

std::optional<int> Category::find_object(const Term& name) const {
    auto it = obj_index_.find(name);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Category::find_morphism(const Term& name) const {
    auto it = mor_index_.find(name);
    if (it == mor_index_.end()) return std::nullopt;
    return it->second;
}

int Category::object_index(const Term& name) const {
    if (auto x = find_object(name)) return *x;
    throw Error(ErrorCode::UnknownObject, "no object " + name.to_string());
}

int Category::morphism_index(const Term& name) const {
    if (auto x = find_morphism(name)) return *x;
    throw Error(ErrorCode::UnknownMorphism, "no morphism " + name.to_string());
}

int Category::compose(int g, int f) const {
    const int h = compose_[static_cast<std::size_t>(g) * morphisms_.size() + static_cast<std::size_t>(f)];
    if (h < 0)
        throw Error(ErrorCode::IllTypedComposite,
                    "cannot compose " + morphism(g).to_string() + " after " + morphism(f).to_string());
    return h;
}

std::optional<int> Category::inverse(int m) const {
    const int a = src(m);
    const int b = tgt(m);
    for (int k : hom(b, a))
        if (is_identity(compose(k, m)) && is_identity(compose(m, k))) return k;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

int CategoryBuilder::add_object(const Term& name) {
    if (obj_index_.count(name))
        throw Error(ErrorCode::DuplicateName, "object " + name.to_string() + " declared twice");
    check_size(objects_.size() + 1, morphisms_.size(), "category");
    const int id = static_cast<int>(objects_.size());
    objects_.push_back(name);
    identity_.push_back(-1);
    obj_index_.emplace(name, id);
    return id;
}

int CategoryBuilder::add_morphism(const Term& name, int src, int tgt) {
    if (!compose_.empty())
        throw std::logic_error("CategoryBuilder: morphism added after composites");
    if (mor_index_.count(name))
        throw Error(ErrorCode::DuplicateName, "morphism " + name.to_string() + " declared twice");
    const auto n = static_cast<int>(objects_.size());
    if (src < 0 || src >= n || tgt < 0 || tgt >= n)
        throw Error(ErrorCode::UnknownObject, "endpoint of " + name.to_string());
    check_size(objects_.size(), morphisms_.size() + 1, "category");
    const int id = static_cast<int>(morphisms_.size());
    morphisms_.push_back(name);
    src_.push_back(src);
    tgt_.push_back(tgt);
    mor_index_.emplace(name, id);
    return id;
}

void CategoryBuilder::set_identity(int obj, int mor) {
    if (src(mor) != obj || tgt(mor) != obj) {
        early_.push_back({ErrorCode::IdentityLawBroken,
                          "identity " + morphisms_[static_cast<std::size_t>(mor)].to_string() +
                              " is not an endomorphism of " +
                              objects_[static_cast<std::size_t>(obj)].to_string()});
        return;
    }
    identity_.at(static_cast<std::size_t>(obj)) = mor;
}

void CategoryBuilder::set_composite(int g, int f, int h) {
    const std::size_t m = morphisms_.size();
    if (compose_.empty()) compose_.assign(m * m, -1);
    const auto name = [&](int k) { return morphisms_.at(static_cast<std::size_t>(k)).to_string(); };
    if (src(g) != tgt(f)) {
        early_.push_back({ErrorCode::MissingComposite,
                          "composite " + name(g) + " . " + name(f) + " given for a non-composable pair"});
        return;
    }
    if (src(h) != src(f) || tgt(h) != tgt(g)) {
        early_.push_back({ErrorCode::IllTypedComposite, name(g) + " . " + name(f) + " = " + name(h) +
                                                            " has the wrong endpoints"});
        return;
    }
    int& slot = compose_[static_cast<std::size_t>(g) * m + static_cast<std::size_t>(f)];
    if (slot >= 0 && slot != h) {
        early_.push_back({ErrorCode::IllTypedComposite, name(g) + " . " + name(f) +
                                                            " given two values: " + name(slot) +
                                                            " and " + name(h)});
        return;
    }
    slot = h;
}

std::optional<int> CategoryBuilder::find_object(const Term& name) const {
    auto it = obj_index_.find(name);
    if (it == obj_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> CategoryBuilder::find_morphism(const Term& name) const {
    auto it = mor_index_.find(name);
    if (it == mor_index_.end()) return std::nullopt;
    return it->second;
}

CatRef CategoryBuilder::build() const {
    check_size(objects_.size(), morphisms_.size(), "category");
    const std::size_t n = objects_.size();
    const std::size_t m = morphisms_.size();
    const auto mname = [&](int k) { return morphisms_[static_cast<std::size_t>(k)].to_string(); };

    Reporter rep;
    rep.absorb(early_);
    for (std::size_t x = 0; x < n; ++x)
        if (identity_[x] < 0)
            rep.add(ErrorCode::IdentityLawBroken, "object " + objects_[x].to_string() + " has no identity");
    if (!rep.empty()) throw CategoryError(rep.take());

    std::vector<int> comp = compose_;
    if (comp.empty()) comp.assign(m * m, -1);
    const auto at = [&](int g, int f) -> int& {
        return comp[static_cast<std::size_t>(g) * m + static_cast<std::size_t>(f)];
    };
    std::vector<char> is_id(m, 0);
    for (std::size_t x = 0; x < n; ++x) is_id[static_cast<std::size_t>(identity_[x])] = 1;

    std::vector<std::vector<int>> out_of(n), into(n);
    for (std::size_t k = 0; k < m; ++k) {
        out_of[static_cast<std::size_t>(src_[k])].push_back(static_cast<int>(k));
        into[static_cast<std::size_t>(tgt_[k])].push_back(static_cast<int>(k));
    }

    for (std::size_t fi = 0; fi < m; ++fi) {
        const int f = static_cast<int>(fi);
        for (int g : out_of[static_cast<std::size_t>(tgt_[fi])]) {
            int& h = at(g, f);
            if (h < 0) {
                if (is_id[static_cast<std::size_t>(g)]) h = f;
                else if (is_id[fi]) h = g;
                else {
                    rep.add(ErrorCode::MissingComposite, "no composite for " + mname(g) + " . " + mname(f));
                    continue;
                }
            }
            if (is_id[static_cast<std::size_t>(g)] && h != f)
                rep.add(ErrorCode::IdentityLawBroken, mname(g) + " . " + mname(f) + " = " + mname(h));
            else if (is_id[fi] && h != g)
                rep.add(ErrorCode::IdentityLawBroken, mname(g) + " . " + mname(f) + " = " + mname(h));
        }
    }
    if (!rep.empty()) throw CategoryError(rep.take());

    for (std::size_t fi = 0; fi < m; ++fi) {
        const int f = static_cast<int>(fi);
        for (int g : out_of[static_cast<std::size_t>(tgt_[fi])]) {
            const int gf = at(g, f);
            for (int h : out_of[static_cast<std::size_t>(tgt_[static_cast<std::size_t>(g)])]) {
                if (at(h, gf) != at(at(h, g), f))
                    rep.add(ErrorCode::NonAssociative,
                            "(" + mname(h) + " . " + mname(g) + ") . " + mname(f) + " != " + mname(h) +
                                " . (" + mname(g) + " . " + mname(f) + ")");
            }
        }
    }
    if (!rep.empty()) throw CategoryError(rep.take());

    // Canonical layout: objects and morphisms in Term order.
    std::vector<int> oord(n), mord(m);
    std::iota(oord.begin(), oord.end(), 0);
    std::iota(mord.begin(), mord.end(), 0);
    std::sort(oord.begin(), oord.end(), [&](int a, int b) {
        return objects_[static_cast<std::size_t>(a)] < objects_[static_cast<std::size_t>(b)];
    });
    std::sort(mord.begin(), mord.end(), [&](int a, int b) {
        return morphisms_[static_cast<std::size_t>(a)] < morphisms_[static_cast<std::size_t>(b)];
    });
    std::vector<int> onew(n), mnew(m);
    for (std::size_t i = 0; i < n; ++i) onew[static_cast<std::size_t>(oord[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < m; ++i) mnew[static_cast<std::size_t>(mord[i])] = static_cast<int>(i);

    std::unique_ptr<Category> c(new Category());
    c->objects_.reserve(n);
    c->identity_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto old = static_cast<std::size_t>(oord[i]);
        c->objects_.push_back(objects_[old]);
        c->identity_[i] = mnew[static_cast<std::size_t>(identity_[old])];
    }
    c->morphisms_.reserve(m);
    c->src_.resize(m);
    c->tgt_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto old = static_cast<std::size_t>(mord[i]);
        c->morphisms_.push_back(morphisms_[old]);
        c->src_[i] = onew[static_cast<std::size_t>(src_[old])];
        c->tgt_[i] = onew[static_cast<std::size_t>(tgt_[old])];
    }
    c->compose_.assign(m * m, -1);
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t f = 0; f < m; ++f)
            if (int h = comp[g * m + f]; h >= 0)
                c->compose_[static_cast<std::size_t>(mnew[g]) * m + static_cast<std::size_t>(mnew[f])] =
                    mnew[static_cast<std::size_t>(h)];
    return CategoryAccess::intern(std::move(c));
}

// ---------------------------------------------------------------------------

Term identity_term(const Term& object) { return Term::tuple("id", {object}); }

CatRef validate_category(const RawCategory& raw) {
    CategoryBuilder b;
    Reporter rep;
    for (const auto& o : raw.objects) {
        if (b.find_object(o)) {
            rep.add(ErrorCode::DuplicateName, "object " + o.to_string() + " declared twice");
            continue;
        }
        b.add_object(o);
    }
    const auto obj = [&](const Term& t, const Term& ctx) -> std::optional<int> {
        auto x = b.find_object(t);
        if (!x) rep.add(ErrorCode::UnknownObject, "object " + t.to_string() + " used by " + ctx.to_string());
        return x;
    };
    for (const auto& mo : raw.morphisms) {
        auto s = obj(mo.src, mo.name);
        auto t = obj(mo.tgt, mo.name);
        if (!s || !t) continue;
        if (b.find_morphism(mo.name)) {
            rep.add(ErrorCode::DuplicateName, "morphism " + mo.name.to_string() + " declared twice");
            continue;
        }
        b.add_morphism(mo.name, *s, *t);
    }
    std::set<int> has_id;
    std::vector<std::pair<int, int>> ids;
    for (const auto& [o, mo] : raw.identities) {
        auto x = obj(o, mo);
        auto k = b.find_morphism(mo);
        if (!k) {
            rep.add(ErrorCode::UnknownMorphism, "identity " + mo.to_string() + " is not declared");
            continue;
        }
        if (!x) continue;
        if (!has_id.insert(*x).second) {
            rep.add(ErrorCode::DuplicateName, "object " + o.to_string() + " given two identities");
            continue;
        }
        ids.emplace_back(*x, *k);
    }
    for (int x = 0; x < static_cast<int>(b.num_objects()); ++x) {
        if (has_id.count(x)) continue;
        const Term o = raw.objects.at(static_cast<std::size_t>(x));
        const Term idt = identity_term(o);
        if (b.find_morphism(idt)) {
            ids.emplace_back(x, *b.find_morphism(idt));
            continue;
        }
        ids.emplace_back(x, b.add_morphism(idt, x, x));
    }
    for (auto [x, k] : ids) b.set_identity(x, k);
    for (const auto& c : raw.composites) {
        auto g = b.find_morphism(c.g);
        auto f = b.find_morphism(c.f);
        auto h = b.find_morphism(c.result);
        for (const auto* t : {&c.g, &c.f, &c.result})
            if (!b.find_morphism(*t))
                rep.add(ErrorCode::UnknownMorphism, "composite mentions undeclared " + t->to_string());
        if (g && f && h) b.set_composite(*g, *f, *h);
    }
    if (!rep.empty()) throw CategoryError(rep.take());
    return b.build();
}

CatRef make_poset(const std::vector<Term>& objects, const std::vector<RawCategory::Morphism>& arrows) {
    CategoryBuilder b;
    for (const auto& o : objects) b.add_object(o);
    const std::size_t n = objects.size();
    std::vector<char> le(n * n, 0);
    std::map<std::pair<int, int>, Term> named;
    for (std::size_t i = 0; i < n; ++i) le[i * n + i] = 1;
    for (const auto& a : arrows) {
        const int s = *b.find_object(a.src);
        const int t = *b.find_object(a.tgt);
        le[static_cast<std::size_t>(s) * n + static_cast<std::size_t>(t)] = 1;
        if (!named.emplace(std::pair{s, t}, a.name).second)
            throw Error(ErrorCode::DuplicateName, "two arrows between the same objects of a poset");
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (le[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (le[k * n + j]) le[i * n + j] = 1;
    std::vector<int> mor(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!le[i * n + j]) continue;
            Term name;
            if (auto it = named.find({static_cast<int>(i), static_cast<int>(j)}); it != named.end())
                name = it->second;
            else if (i == j)
                name = identity_term(objects[i]);
            else
                name = Term::tuple("le", {objects[i], objects[j]});
            mor[i * n + j] = b.add_morphism(name, static_cast<int>(i), static_cast<int>(j));
        }
    for (std::size_t i = 0; i < n; ++i) b.set_identity(static_cast<int>(i), mor[i * n + i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (mor[i * n + j] >= 0 && mor[j * n + k] >= 0)
                    b.set_composite(mor[j * n + k], mor[i * n + j], mor[i * n + k]);
    return b.build();
}

CatRef op_dual(const CatRef& c) {
    CategoryBuilder b;
    for (const auto& o : c->objects()) b.add_object(o);
    const auto m = static_cast<int>(c->num_morphisms());
    for (int k = 0; k < m; ++k) b.add_morphism(c->morphism(k), c->tgt(k), c->src(k));
    for (int x = 0; x < static_cast<int>(c->num_objects()); ++x) b.set_identity(x, c->identity(x));
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g)
            if (c->composable(g, f)) b.set_composite(f, g, c->compose(g, f));
    return b.build();
}

}  // namespace fibcat
