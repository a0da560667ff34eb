#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibcat {

namespace detail {
struct TermNode;
}

/// Structured identifier for objects and morphisms.
///
/// A term is either an atom (`a`, `0`, `*`) or a tagged tuple such as
/// `comma(e,b,alpha)`. Terms are hash-consed: two structurally equal terms
/// share one node, so equality and hashing are pointer operations. Ordering is
/// structural (atoms before tuples, then by tag, then argument-wise) and gives
/// the canonical layout of every category.
class Term {
public:
    Term();

    static Term atom(std::string_view name);
    static Term tuple(std::string_view tag, std::span<const Term> args);
    static Term tuple(std::string_view tag, std::initializer_list<Term> args);

    bool is_atom() const noexcept;
    /// Atom name, or the tuple tag.
    std::string_view tag() const noexcept;
    std::span<const Term> args() const noexcept;
    std::size_t arity() const noexcept { return args().size(); }
    const Term& arg(std::size_t i) const { return args()[i]; }

    std::string to_string() const;
    std::size_t hash() const noexcept;

    friend bool operator==(const Term& a, const Term& b) noexcept { return a.node_ == b.node_; }
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

private:
    explicit Term(const detail::TermNode* node) : node_(node) {}
    const detail::TermNode* node_;
};

/// True when `name` can be printed without quoting.
bool is_plain_atom(std::string_view name) noexcept;

using ObjId = Term;
using MorId = Term;

}  // namespace fibcat

template <>
struct std::hash<fibcat::Term> {
    std::size_t operator()(const fibcat::Term& t) const noexcept { return t.hash(); }
};
