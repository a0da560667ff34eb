#include "fibcat/term.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace fibcat {

namespace detail {

struct TermNode {
    std::string tag;
    std::vector<Term> args;
    bool tuple = false;
    std::size_t hash = 0;
};

}  // namespace detail

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct NodeKey {
    std::string_view tag;
    std::span<const Term> args;
    bool tuple;
    std::size_t hash;
};

struct NodeHash {
    using is_transparent = void;
    std::size_t operator()(const detail::TermNode* n) const noexcept { return n->hash; }
    std::size_t operator()(const NodeKey& k) const noexcept { return k.hash; }
};

struct NodeEq {
    using is_transparent = void;
    static bool same(std::string_view tag, std::span<const Term> args, bool tuple,
                     const detail::TermNode* n) {
        if (n->tuple != tuple || n->tag != tag || n->args.size() != args.size()) return false;
        for (std::size_t i = 0; i < args.size(); ++i)
            if (!(n->args[i] == args[i])) return false;
        return true;
    }
    bool operator()(const detail::TermNode* a, const detail::TermNode* b) const noexcept {
        return a == b;
    }
    bool operator()(const NodeKey& k, const detail::TermNode* n) const noexcept {
        return same(k.tag, k.args, k.tuple, n);
    }
    bool operator()(const detail::TermNode* n, const NodeKey& k) const noexcept {
        return same(k.tag, k.args, k.tuple, n);
    }
};

// Nodes are never freed: the table owns them for the life of the process.
struct InternTable {
    std::mutex mu;
    std::unordered_set<const detail::TermNode*, NodeHash, NodeEq> nodes;
    std::vector<std::unique_ptr<detail::TermNode>> storage;

    const detail::TermNode* intern(std::string_view tag, std::span<const Term> args, bool tuple) {
        std::size_t h = std::hash<std::string_view>{}(tag);
        h = mix(h, tuple ? 1 : 0);
        for (const auto& a : args) h = mix(h, a.hash());
        NodeKey key{tag, args, tuple, h};
        std::lock_guard lock(mu);
        if (auto it = nodes.find(key); it != nodes.end()) return *it;
        auto node = std::make_unique<detail::TermNode>();
        node->tag = std::string(tag);
        node->args.assign(args.begin(), args.end());
        node->tuple = tuple;
        node->hash = h;
        const detail::TermNode* raw = node.get();
        storage.push_back(std::move(node));
        nodes.insert(raw);
        return raw;
    }
};

InternTable& table() {
    static InternTable t;
    return t;
}

}  // namespace

Term::Term() : Term(Term::atom("")) {}

Term Term::atom(std::string_view name) { return Term(table().intern(name, {}, false)); }

Term Term::tuple(std::string_view tag, std::span<const Term> args) {
    return Term(table().intern(tag, args, true));
}

Term Term::tuple(std::string_view tag, std::initializer_list<Term> args) {
    return tuple(tag, std::span<const Term>(args.begin(), args.size()));
}

bool Term::is_atom() const noexcept { return !node_->tuple; }
std::string_view Term::tag() const noexcept { return node_->tag; }
std::span<const Term> Term::args() const noexcept { return node_->args; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool is_plain_atom(std::string_view name) noexcept {
    if (name.empty()) return false;
    for (char c : name) {
        const auto u = static_cast<unsigned char>(c);
        if (!(std::isalnum(u) || c == '_' || c == '*' || c == '\'' || c == '.')) return false;
    }
    return true;
}

namespace {

void append_quoted(std::string& out, std::string_view s) {
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
}

void print(std::string& out, const Term& t) {
    if (is_plain_atom(t.tag()))
        out.append(t.tag());
    else
        append_quoted(out, t.tag());
    if (t.is_atom()) return;
    out.push_back('(');
    bool first = true;
    for (const auto& a : t.args()) {
        if (!first) out.push_back(',');
        first = false;
        print(out, a);
    }
    out.push_back(')');
}

}  // namespace

std::string Term::to_string() const {
    std::string out;
    print(out, *this);
    return out;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.node_->tuple != b.node_->tuple)
        return a.node_->tuple ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.node_->tag.compare(b.node_->tag); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const auto& xs = a.node_->args;
    const auto& ys = b.node_->args;
    const std::size_t n = std::min(xs.size(), ys.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = xs[i] <=> ys[i]; c != 0) return c;
    return xs.size() <=> ys.size();
}

}  // namespace fibcat
