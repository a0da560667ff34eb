#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fibcat/error.hpp"
#include "fibcat/size_limit.hpp"
#include "fibcat/term.hpp"

namespace fibcat {

class Category;
using CatRef = std::shared_ptr<const Category>;

/// A finite category with a total composition table.
///
/// Instances only come out of CategoryBuilder::build(), which validates the
/// category laws, lays objects and morphisms out in Term order, and interns the
/// result: structurally equal categories are the same object, so comparing two
/// CatRefs by pointer is structural equality.
class Category {
public:
    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

    const Term& object(int x) const { return objects_.at(static_cast<std::size_t>(x)); }
    const Term& morphism(int m) const { return morphisms_.at(static_cast<std::size_t>(m)); }
    const std::vector<Term>& objects() const noexcept { return objects_; }
    const std::vector<Term>& morphisms() const noexcept { return morphisms_; }

    std::optional<int> find_object(const Term& name) const;
    std::optional<int> find_morphism(const Term& name) const;
    /// Throw Error(UnknownObject / UnknownMorphism) when absent.
    int object_index(const Term& name) const;
    int morphism_index(const Term& name) const;

    int src(int m) const { return src_[static_cast<std::size_t>(m)]; }
    int tgt(int m) const { return tgt_[static_cast<std::size_t>(m)]; }
    int identity(int x) const { return identity_[static_cast<std::size_t>(x)]; }
    bool is_identity(int m) const { return identity_[static_cast<std::size_t>(src(m))] == m; }
    bool composable(int g, int f) const { return src(g) == tgt(f); }

    /// g ∘ f. Requires tgt(f) == src(g).
    int compose(int g, int f) const;
    const std::vector<int>& hom(int x, int y) const {
        return hom_[static_cast<std::size_t>(x) * objects_.size() + static_cast<std::size_t>(y)];
    }

    /// Inverse of m, if m is an isomorphism.
    std::optional<int> inverse(int m) const;
    bool is_iso(int m) const { return inverse(m).has_value(); }

    std::size_t fingerprint() const noexcept { return fingerprint_; }

private:
    friend class CategoryBuilder;
    friend struct CategoryAccess;
    Category() = default;

    std::vector<Term> objects_;
    std::vector<Term> morphisms_;
    std::unordered_map<Term, int> obj_index_;
    std::unordered_map<Term, int> mor_index_;
    std::vector<int> src_, tgt_, identity_;
    std::vector<int> compose_;  // num_morphisms^2, -1 where not composable
    std::vector<std::vector<int>> hom_;
    std::size_t fingerprint_ = 0;
};

/// Incremental construction of a category; build() validates every law and
/// reports all violations at once through CategoryError.
class CategoryBuilder {
public:
    int add_object(const Term& name);
    int add_morphism(const Term& name, int src, int tgt);
    void set_identity(int obj, int mor);
    /// Records g ∘ f = h. Morphisms can no longer be added afterwards.
    void set_composite(int g, int f, int h);

    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_morphisms() const noexcept { return morphisms_.size(); }
    int src(int m) const { return src_.at(static_cast<std::size_t>(m)); }
    int tgt(int m) const { return tgt_.at(static_cast<std::size_t>(m)); }
    std::optional<int> find_object(const Term& name) const;
    std::optional<int> find_morphism(const Term& name) const;

    CatRef build() const;

private:
    std::vector<Term> objects_;
    std::vector<Term> morphisms_;
    std::unordered_map<Term, int> obj_index_;
    std::unordered_map<Term, int> mor_index_;
    std::vector<int> src_, tgt_;
    std::vector<int> identity_;
    std::vector<int> compose_;
    std::vector<Violation> early_;
};

/// Plain-data description of a category, as read from a file.
struct RawCategory {
    struct Morphism {
        Term name, src, tgt;
    };
    struct Composite {
        Term g, f, result;  // g ∘ f = result
    };
    std::vector<Term> objects;
    std::vector<Morphism> morphisms;
    /// Identity morphism per object; objects not listed get a fresh `id(x)`.
    std::vector<std::pair<Term, Term>> identities;
    /// Composites involving an identity may be omitted.
    std::vector<Composite> composites;
};

/// Validates a raw description; throws CategoryError listing every violation.
CatRef validate_category(const RawCategory& raw);

/// Default identity name for an object.
Term identity_term(const Term& object);

/// The preorder generated by `arrows` (reflexive-transitive closure). Arrow x→y
/// takes its name from `arrows` when declared there, else `le(x,y)`.
CatRef make_poset(const std::vector<Term>& objects,
                  const std::vector<RawCategory::Morphism>& arrows);

/// Opposite category: same names, sources and targets swapped.
CatRef op_dual(const CatRef& c);

}  // namespace fibcat
