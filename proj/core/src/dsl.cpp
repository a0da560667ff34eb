#include "fibcat/dsl.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fibcat/transport.hpp"

namespace fibcat::dsl {

namespace {

std::string located(const SourceSpan& s, const std::string& message, const std::string& origin) {
    std::string out = origin.empty() ? "" : origin + ":";
    return out + std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + message;
}

}  // namespace

ParseError::ParseError(ErrorCode code, SourceSpan span, const std::string& message, const std::string& origin)
    : Error(code, located(span, message, origin)), span_(span), detail_(message) {}

namespace {

[[noreturn]] void fail(ErrorCode code, const SourceSpan& s, const std::string& message) {
    throw ParseError(code, s, message);
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { word, string, lbrace, rbrace, lparen, rparen, comma, end_stmt, colon, arrow, mapsto, darrow, equals, eof };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

bool word_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u >= 0x80 || c == '_' || c == '*' || c == '\'' || c == '.';
}

// `-` and `:` join a word only when another word character follows.
bool joins_word(std::string_view s, std::size_t i) {
    if (word_char(s[i])) return true;
    return (s[i] == '-' || s[i] == ':') && i + 1 < s.size() && word_char(s[i + 1]);
}

bool is_word(std::string_view s) {
    if (s.empty() || !word_char(s[0])) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!joins_word(s, i)) return false;
    return true;
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    const auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
                ++col;
            }
        }
    };
    const auto punct = [&](Tok k, std::size_t n) {
        out.push_back({k, text.substr(i, n), {line, col}});
        advance(n);
    };
    while (i < text.size()) {
        const char c = text[i];
        const SourceSpan here{line, col};
        if (c == '\n' || c == ';') {
            punct(Tok::end_stmt, 1);
        } else if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (word_char(c)) {
            std::size_t j = i;
            while (j < text.size() && joins_word(text, j)) ++j;
            out.push_back({Tok::word, text.substr(i, j - i), here});
            advance(j - i);
        } else if (c == '"') {
            std::string s;
            advance(1);
            for (;;) {
                if (i >= text.size() || text[i] == '\n') fail(ErrorCode::SyntaxError, here, "unterminated string");
                if (text[i] == '"') break;
                if (text[i] == '\\') {
                    advance(1);
                    if (i >= text.size() || (text[i] != '"' && text[i] != '\\'))
                        fail(ErrorCode::SyntaxError, {line, col}, "unknown escape in string");
                }
                s.push_back(text[i]);
                advance(1);
            }
            advance(1);
            out.push_back({Tok::string, std::move(s), here});
        } else if (c == '{') {
            punct(Tok::lbrace, 1);
        } else if (c == '}') {
            punct(Tok::rbrace, 1);
        } else if (c == '(') {
            punct(Tok::lparen, 1);
        } else if (c == ')') {
            punct(Tok::rparen, 1);
        } else if (c == ',') {
            punct(Tok::comma, 1);
        } else if (c == ':') {
            punct(Tok::colon, 1);
        } else if (text.compare(i, 2, "->") == 0) {
            punct(Tok::arrow, 2);
        } else if (text.compare(i, 3, "|->") == 0) {
            punct(Tok::mapsto, 3);
        } else if (text.compare(i, 2, "=>") == 0) {
            punct(Tok::darrow, 2);
        } else if (c == '=') {
            punct(Tok::equals, 1);
        } else {
            fail(ErrorCode::SyntaxError, here, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::eof, "", {line, col}});
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Tok::word: return "'" + t.text + "'";
        case Tok::string: return "string \"" + t.text + "\"";
        case Tok::end_stmt: return t.text == ";" ? "';'" : "end of line";
        case Tok::eof: return "end of input";
        default: return "'" + t.text + "'";
    }
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    Document document() {
        Document doc;
        for (;;) {
            skip_ends();
            if (peek().kind == Tok::eof) break;
            const Token& k = peek();
            if (k.kind != Tok::word) fail(ErrorCode::SyntaxError, k.span, "expected a declaration, found " + describe(k));
            if (k.text == "category") doc.declarations.emplace_back(category());
            else if (k.text == "functor") doc.declarations.emplace_back(functor());
            else if (k.text == "nat") doc.declarations.emplace_back(nat());
            else if (k.text == "bundle") doc.declarations.emplace_back(bundle());
            else if (k.text == "square") doc.declarations.emplace_back(square());
            else if (k.text == "cell") doc.declarations.emplace_back(cell());
            else if (k.text == "suite") doc.declarations.emplace_back(suite());
            else fail(ErrorCode::SyntaxError, k.span, "unknown declaration " + describe(k));
            end_statement();
        }
        return doc;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    bool at(Tok k) const { return peek().kind == k; }

    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(ErrorCode::SyntaxError, peek().span, std::string("expected ") + what + ", found " + describe(peek()));
        return next();
    }

    void skip_ends() {
        while (at(Tok::end_stmt)) ++pos_;
    }

    // A statement ends at a newline, `;`, or just before a closing brace.
    void end_statement() {
        if (at(Tok::end_stmt)) {
            ++pos_;
            return;
        }
        if (at(Tok::rbrace) || at(Tok::eof)) return;
        fail(ErrorCode::SyntaxError, peek().span, "expected end of statement, found " + describe(peek()));
    }

    bool at_name() const { return at(Tok::word) || at(Tok::string); }

    std::string name(const char* what) {
        if (!at_name()) fail(ErrorCode::SyntaxError, peek().span, std::string("expected ") + what + ", found " + describe(peek()));
        return next().text;
    }

    Term term() {
        const SourceSpan s = peek().span;
        std::string tag = name("a name");
        if (!at(Tok::lparen)) return Term::atom(tag);
        ++pos_;
        std::vector<Term> args;
        if (at(Tok::rparen)) fail(ErrorCode::SyntaxError, s, "empty argument list");
        for (;;) {
            args.push_back(term());
            if (at(Tok::comma)) {
                ++pos_;
                continue;
            }
            expect(Tok::rparen, "',' or ')'");
            break;
        }
        return Term::tuple(tag, std::span<const Term>(args));
    }

    // Runs `stmt` for each statement of a `{ ... }` block.
    template <class F>
    void block(F&& stmt) {
        expect(Tok::lbrace, "'{'");
        for (;;) {
            skip_ends();
            if (at(Tok::rbrace)) break;
            if (at(Tok::eof)) fail(ErrorCode::SyntaxError, peek().span, "missing '}'");
            stmt();
            end_statement();
        }
        ++pos_;
    }

    const Token& keyword() {
        const Token& t = peek();
        if (t.kind != Tok::word) fail(ErrorCode::SyntaxError, t.span, "expected a statement, found " + describe(t));
        return next();
    }

    CategoryDecl category() {
        CategoryDecl d;
        d.span = next().span;
        d.name = name("a category name");
        if (at(Tok::word) && peek().text == "poset") {
            ++pos_;
            d.poset = true;
        }
        block([&] {
            const Token& k = keyword();
            if (k.text == "objects") {
                if (!at_name()) fail(ErrorCode::SyntaxError, peek().span, "expected at least one object");
                while (at_name()) d.objects.push_back(term());
            } else if (k.text == "arrow") {
                ArrowDecl a;
                a.span = k.span;
                a.name = term();
                expect(Tok::colon, "':'");
                a.src = term();
                expect(Tok::arrow, "'->'");
                a.tgt = term();
                d.arrows.push_back(std::move(a));
            } else if (k.text == "compose") {
                CompositeDecl c;
                c.span = k.span;
                c.g = term();
                c.f = term();
                expect(Tok::equals, "'='");
                c.result = term();
                d.composites.push_back(std::move(c));
            } else if (k.text == "identity") {
                IdentityDecl i;
                i.span = k.span;
                i.object = term();
                expect(Tok::equals, "'='");
                i.morphism = term();
                d.identities.push_back(std::move(i));
            } else {
                fail(ErrorCode::SyntaxError, k.span, "unknown statement " + describe(k) + " in category block");
            }
        });
        return d;
    }

    std::vector<MapEntry> entries() {
        std::vector<MapEntry> out;
        if (!at(Tok::lbrace)) return out;
        block([&] {
            MapEntry e;
            e.span = peek().span;
            e.from = term();
            expect(Tok::mapsto, "'|->'");
            e.to = term();
            out.push_back(std::move(e));
        });
        return out;
    }

    FunctorDecl functor() {
        FunctorDecl d;
        d.span = next().span;
        d.name = name("a functor name");
        expect(Tok::colon, "':'");
        d.dom = name("a category name");
        expect(Tok::arrow, "'->'");
        d.cod = name("a category name");
        d.entries = entries();
        return d;
    }

    NatDecl nat() {
        NatDecl d;
        d.span = next().span;
        d.name = name("a transformation name");
        expect(Tok::colon, "':'");
        d.src = name("a functor name");
        expect(Tok::darrow, "'=>'");
        d.tgt = name("a functor name");
        d.components = entries();
        return d;
    }

    BundleDecl bundle() {
        BundleDecl d;
        d.span = next().span;
        d.name = name("a bundle name");
        expect(Tok::equals, "'='");
        d.functor = name("a functor name");
        return d;
    }

    void up_down(std::string& up, std::string& down, const SourceSpan& s) {
        bool have_up = false, have_down = false;
        block([&] {
            const Token& k = keyword();
            const bool is_up = k.text == "up";
            if (!is_up && k.text != "down") fail(ErrorCode::SyntaxError, k.span, "expected 'up' or 'down', found " + describe(k));
            bool& seen = is_up ? have_up : have_down;
            if (seen) fail(ErrorCode::SyntaxError, k.span, "'" + k.text + "' given twice");
            seen = true;
            expect(Tok::equals, "'='");
            (is_up ? up : down) = name("a name");
        });
        if (!have_up || !have_down) fail(ErrorCode::SyntaxError, s, "both 'up' and 'down' are required");
    }

    SquareDecl square() {
        SquareDecl d;
        d.span = next().span;
        d.name = name("a square name");
        expect(Tok::colon, "':'");
        d.src = name("a bundle name");
        expect(Tok::arrow, "'->'");
        d.tgt = name("a bundle name");
        up_down(d.up, d.down, d.span);
        return d;
    }

    CellDecl cell() {
        CellDecl d;
        d.span = next().span;
        d.name = name("a cell name");
        expect(Tok::colon, "':'");
        d.src = name("a square name");
        expect(Tok::darrow, "'=>'");
        d.tgt = name("a square name");
        up_down(d.up, d.down, d.span);
        return d;
    }

    SuiteDecl suite() {
        SuiteDecl d;
        d.span = next().span;
        d.name = name("a suite name");
        block([&] {
            const Token& k = keyword();
            std::vector<std::string>* list = k.text == "bundles" ? &d.bundles
                                             : k.text == "squares" ? &d.squares
                                             : k.text == "cells"   ? &d.cells
                                                                   : nullptr;
            std::vector<std::string> words;
            if (!list && k.text != "check")
                fail(ErrorCode::SyntaxError, k.span, "unknown statement " + describe(k) + " in suite block");
            if (!at_name()) fail(ErrorCode::SyntaxError, peek().span, "expected at least one name");
            while (at_name()) words.push_back(next().text);
            if (list)
                list->insert(list->end(), words.begin(), words.end());
            else
                d.checks.push_back(std::move(words));
        });
        return d;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

std::string word(const std::string& s) {
    if (is_word(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

std::string term_text(const Term& t) {
    std::string out = word(std::string(t.tag()));
    if (t.is_atom()) return out;
    out += "(";
    for (std::size_t i = 0; i < t.arity(); ++i) out += (i ? "," : "") + term_text(t.arg(i));
    return out + ")";
}

void print_entries(std::ostringstream& os, const std::vector<MapEntry>& es) {
    os << " {\n";
    for (const auto& e : es) os << "  " << term_text(e.from) << " |-> " << term_text(e.to) << "\n";
    os << "}\n";
}

void print_decl(std::ostringstream& os, const CategoryDecl& d) {
    os << "category " << word(d.name) << (d.poset ? " poset" : "") << " {\n";
    if (!d.objects.empty()) {
        os << "  objects";
        for (const auto& o : d.objects) os << " " << term_text(o);
        os << "\n";
    }
    for (const auto& a : d.arrows)
        os << "  arrow " << term_text(a.name) << ": " << term_text(a.src) << " -> " << term_text(a.tgt) << "\n";
    for (const auto& i : d.identities) os << "  identity " << term_text(i.object) << " = " << term_text(i.morphism) << "\n";
    for (const auto& c : d.composites)
        os << "  compose " << term_text(c.g) << " " << term_text(c.f) << " = " << term_text(c.result) << "\n";
    os << "}\n";
}

void print_decl(std::ostringstream& os, const FunctorDecl& d) {
    os << "functor " << word(d.name) << ": " << word(d.dom) << " -> " << word(d.cod);
    print_entries(os, d.entries);
}

void print_decl(std::ostringstream& os, const NatDecl& d) {
    os << "nat " << word(d.name) << ": " << word(d.src) << " => " << word(d.tgt);
    print_entries(os, d.components);
}

void print_decl(std::ostringstream& os, const BundleDecl& d) {
    os << "bundle " << word(d.name) << " = " << word(d.functor) << "\n";
}

void print_decl(std::ostringstream& os, const SquareDecl& d) {
    os << "square " << word(d.name) << ": " << word(d.src) << " -> " << word(d.tgt) << " {\n  up = " << word(d.up)
       << "\n  down = " << word(d.down) << "\n}\n";
}

void print_decl(std::ostringstream& os, const CellDecl& d) {
    os << "cell " << word(d.name) << ": " << word(d.src) << " => " << word(d.tgt) << " {\n  up = " << word(d.up)
       << "\n  down = " << word(d.down) << "\n}\n";
}

void print_decl(std::ostringstream& os, const SuiteDecl& d) {
    os << "suite " << word(d.name) << " {\n";
    const auto list = [&](const char* kw, const std::vector<std::string>& xs) {
        if (xs.empty()) return;
        os << "  " << kw;
        for (const auto& x : xs) os << " " << word(x);
        os << "\n";
    };
    list("bundles", d.bundles);
    list("squares", d.squares);
    list("cells", d.cells);
    for (const auto& c : d.checks) list("check", c);
    os << "}\n";
}

}  // namespace

Document parse_syntax(const std::string& text) { return Parser(text).document(); }

Document parse(const std::string& text) {
    Document doc = parse_syntax(text);
    elaborate(doc);
    return doc;
}

std::string print(const Document& doc) {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : doc.declarations) {
        if (!first) os << "\n";
        first = false;
        std::visit([&](const auto& x) { print_decl(os, x); }, d);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

std::string quoted(const Term& t) { return "'" + term_text(t) + "'"; }

class Elaborator {
public:
    Model run(const Document& doc) {
        for (const auto& d : doc.declarations) std::visit([&](const auto& x) { add(x); }, d);
        return std::move(m_);
    }

private:
    template <class Map>
    static const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* kind,
                                                   const SourceSpan& s) {
        auto it = m.find(name);
        if (it == m.end()) fail(ErrorCode::UnknownReference, s, std::string("unknown ") + kind + " '" + name + "'");
        return it->second;
    }

    template <class Named>
    static const Named& lookup_named(const std::vector<Named>& xs, const std::string& name, const char* kind,
                                     const SourceSpan& s) {
        for (const auto& x : xs)
            if (x.name == name) return x;
        fail(ErrorCode::UnknownReference, s, std::string("unknown ") + kind + " '" + name + "'");
    }

    void claim(std::set<std::string>& names, const std::string& name, const char* kind, const SourceSpan& s) {
        if (!names.insert(name).second) fail(ErrorCode::DuplicateName, s, std::string(kind) + " '" + name + "' declared twice");
    }

    void add(const CategoryDecl& d) {
        claim(cat_names_, d.name, "category", d.span);
        std::set<Term> objs, mors;
        for (const auto& o : d.objects)
            if (!objs.insert(o).second) fail(ErrorCode::DuplicateName, d.span, "object " + quoted(o) + " declared twice");
        const auto need_obj = [&](const Term& t, const SourceSpan& s) {
            if (!objs.count(t)) fail(ErrorCode::UnknownReference, s, "unknown object " + quoted(t) + " in category '" + d.name + "'");
        };
        for (const auto& a : d.arrows) {
            need_obj(a.src, a.span);
            need_obj(a.tgt, a.span);
            if (!mors.insert(a.name).second) fail(ErrorCode::DuplicateName, a.span, "arrow " + quoted(a.name) + " declared twice");
        }
        const auto build_error = [&](const std::string& what) {
            fail(ErrorCode::SyntaxError, d.span, "category '" + d.name + "': " + what);
        };
        CatRef c;
        if (d.poset) {
            if (!d.identities.empty())
                fail(ErrorCode::SyntaxError, d.identities[0].span, "a poset category takes no identity statements");
            if (!d.composites.empty())
                fail(ErrorCode::SyntaxError, d.composites[0].span, "a poset category takes no compose statements");
            std::vector<RawCategory::Morphism> arrows;
            for (const auto& a : d.arrows) arrows.push_back({a.name, a.src, a.tgt});
            try {
                c = make_poset(d.objects, arrows);
            } catch (const Error& e) {
                build_error(e.code() == ErrorCode::DuplicateName ? "two arrows between the same objects are ambiguous"
                                                                 : e.what());
            }
        } else {
            RawCategory raw;
            raw.objects = d.objects;
            for (const auto& a : d.arrows) raw.morphisms.push_back({a.name, a.src, a.tgt});
            std::set<Term> with_id;
            for (const auto& i : d.identities) {
                need_obj(i.object, i.span);
                if (!mors.count(i.morphism))
                    fail(ErrorCode::UnknownReference, i.span, "identity " + quoted(i.morphism) + " is not a declared arrow");
                if (!with_id.insert(i.object).second)
                    fail(ErrorCode::DuplicateName, i.span, "object " + quoted(i.object) + " given two identities");
                raw.identities.emplace_back(i.object, i.morphism);
            }
            std::set<Term> known = mors;
            for (const auto& o : d.objects)
                if (!with_id.count(o)) known.insert(identity_term(o));
            for (const auto& k : d.composites) {
                for (const Term* t : {&k.g, &k.f, &k.result})
                    if (!known.count(*t)) fail(ErrorCode::UnknownReference, k.span, "unknown arrow " + quoted(*t));
                raw.composites.push_back({k.g, k.f, k.result});
            }
            try {
                c = validate_category(raw);
            } catch (const CategoryError& e) {
                std::string msg;
                for (const auto& v : e.violations()) msg += (msg.empty() ? "" : "; ") + v.detail;
                build_error(msg);
            } catch (const Error& e) {
                build_error(e.what());
            }
        }
        m_.categories.emplace(d.name, std::move(c));
    }

    // Image of a dom object or morphism given by an entry, or inferred.
    struct Images {
        std::map<int, Term> obj, mor;
    };

    Images read_entries(const Category& dom, const std::vector<MapEntry>& es, bool objects_only, const char* what) {
        Images out;
        for (const auto& e : es) {
            const auto o = dom.find_object(e.from);
            const auto mo = objects_only ? std::nullopt : dom.find_morphism(e.from);
            if (o && mo) fail(ErrorCode::SyntaxError, e.span, quoted(e.from) + " names both an object and an arrow");
            if (!o && !mo) fail(ErrorCode::UnknownReference, e.span, "unknown " + std::string(what) + " " + quoted(e.from));
            auto& slot = o ? out.obj : out.mor;
            if (!slot.emplace(o ? *o : *mo, e.to).second)
                fail(ErrorCode::DuplicateName, e.span, quoted(e.from) + " mapped twice");
        }
        return out;
    }

    static int only_arrow(const Category& c, int x, int y) {
        const auto& h = c.hom(x, y);
        return h.size() == 1 ? h[0] : -1;
    }

    void add(const FunctorDecl& d) {
        claim(functor_names_, d.name, "functor", d.span);
        const CatRef& dom = lookup(m_.categories, d.dom, "category", d.span);
        const CatRef& cod = lookup(m_.categories, d.cod, "category", d.span);
        const Images im = read_entries(*dom, d.entries, false, "object or arrow");
        std::vector<int> om, mm;
        for (int x = 0; x < static_cast<int>(dom->num_objects()); ++x) {
            if (auto it = im.obj.find(x); it != im.obj.end()) {
                auto y = cod->find_object(it->second);
                if (!y) fail(ErrorCode::UnknownReference, d.span, "unknown object " + quoted(it->second) + " in '" + d.cod + "'");
                om.push_back(*y);
            } else if (cod->num_objects() == 1) {
                om.push_back(0);
            } else {
                fail(ErrorCode::SyntaxError, d.span, "functor '" + d.name + "' gives no image for object " + quoted(dom->object(x)));
            }
        }
        for (int k = 0; k < static_cast<int>(dom->num_morphisms()); ++k) {
            const int s = om[static_cast<std::size_t>(dom->src(k))], t = om[static_cast<std::size_t>(dom->tgt(k))];
            if (auto it = im.mor.find(k); it != im.mor.end()) {
                auto y = cod->find_morphism(it->second);
                if (!y) fail(ErrorCode::UnknownReference, d.span, "unknown arrow " + quoted(it->second) + " in '" + d.cod + "'");
                mm.push_back(*y);
            } else if (dom->is_identity(k)) {
                mm.push_back(cod->identity(s));
            } else if (int u = only_arrow(*cod, s, t); u >= 0) {
                mm.push_back(u);
            } else {
                fail(ErrorCode::SyntaxError, d.span, "functor '" + d.name + "' gives no image for arrow " + quoted(dom->morphism(k)));
            }
        }
        try {
            m_.functors.emplace(d.name, Functor::make(dom, cod, std::move(om), std::move(mm)));
        } catch (const Error& e) {
            fail(ErrorCode::SyntaxError, d.span, "functor '" + d.name + "': " + e.what());
        }
    }

    void add(const NatDecl& d) {
        claim(nat_names_, d.name, "transformation", d.span);
        const Functor& f = lookup(m_.functors, d.src, "functor", d.span);
        const Functor& g = lookup(m_.functors, d.tgt, "functor", d.span);
        if (f.dom() != g.dom() || f.cod() != g.cod())
            fail(ErrorCode::SyntaxError, d.span, "'" + d.src + "' and '" + d.tgt + "' are not parallel");
        const Category& dom = *f.dom();
        const Category& cod = *f.cod();
        const Images im = read_entries(dom, d.components, true, "object");
        std::vector<int> comp;
        for (int x = 0; x < static_cast<int>(dom.num_objects()); ++x) {
            if (auto it = im.obj.find(x); it != im.obj.end()) {
                auto y = cod.find_morphism(it->second);
                if (!y) fail(ErrorCode::UnknownReference, d.span, "unknown arrow " + quoted(it->second));
                comp.push_back(*y);
            } else if (int u = only_arrow(cod, f.obj(x), g.obj(x)); u >= 0) {
                comp.push_back(u);
            } else {
                fail(ErrorCode::SyntaxError, d.span, "'" + d.name + "' gives no component at " + quoted(dom.object(x)));
            }
        }
        try {
            m_.nats.emplace(d.name, NatTrans::make(f, g, std::move(comp)));
        } catch (const Error& e) {
            fail(ErrorCode::SyntaxError, d.span, "transformation '" + d.name + "': " + e.what());
        }
    }

    void add(const BundleDecl& d) {
        claim(bundle_names_, d.name, "bundle", d.span);
        m_.bundles.push_back({d.name, Bundle{lookup(m_.functors, d.functor, "functor", d.span)}});
    }

    void add(const SquareDecl& d) {
        claim(square_names_, d.name, "square", d.span);
        const Bundle& s = lookup_named(m_.bundles, d.src, "bundle", d.span).bundle;
        const Bundle& t = lookup_named(m_.bundles, d.tgt, "bundle", d.span).bundle;
        const Functor& up = lookup(m_.functors, d.up, "functor", d.span);
        const Functor& down = lookup(m_.functors, d.down, "functor", d.span);
        try {
            m_.squares.push_back({d.name, BundleSquare(s, t, up, down)});
        } catch (const Error& e) {
            fail(ErrorCode::SyntaxError, d.span, "square '" + d.name + "': " + e.what());
        }
    }

    void add(const CellDecl& d) {
        claim(cell_names_, d.name, "cell", d.span);
        const BundleSquare& s = lookup_named(m_.squares, d.src, "square", d.span).square;
        const BundleSquare& t = lookup_named(m_.squares, d.tgt, "square", d.span).square;
        const NatTrans& up = lookup(m_.nats, d.up, "transformation", d.span);
        const NatTrans& down = lookup(m_.nats, d.down, "transformation", d.span);
        try {
            m_.cells.push_back({d.name, BundleTwoCell(s, t, up, down)});
        } catch (const Error& e) {
            fail(ErrorCode::SyntaxError, d.span, "cell '" + d.name + "': " + e.what());
        }
    }

    void add(const SuiteDecl& d) {
        claim(suite_names_, d.name, "suite", d.span);
        for (const auto& b : d.bundles) lookup_named(m_.bundles, b, "bundle", d.span);
        for (const auto& s : d.squares) lookup_named(m_.squares, s, "square", d.span);
        for (const auto& c : d.cells) lookup_named(m_.cells, c, "cell", d.span);
        for (const auto& c : d.checks) {
            try {
                validate_check(c);
            } catch (const Error& e) {
                fail(ErrorCode::UnknownReference, d.span, e.what());
            }
        }
        m_.suites.push_back(d);
    }

    static void validate_check(const std::vector<std::string>& w) {
        static const std::set<std::string> plain = {"opfibration", "fibration", "pseudo-opfibration", "pseudo-fibration",
                                                     "monad-laws", "k-lemmas"};
        const auto arity = [&](std::size_t n) {
            if (w.size() != n) throw Error(ErrorCode::UnknownReference, "check '" + w[0] + "' takes " + std::to_string(n - 1) + " argument(s)");
        };
        if (plain.count(w[0])) {
            arity(1);
        } else if (w[0] == "transition" || w[0] == "lift") {
            arity(2);
            builtin_functor(w[1]);
        } else if (w[0] == "preserve") {
            arity(3);
            builtin_functor(w[1]);
            parse_mode(w[2]);
        } else {
            throw Error(ErrorCode::UnknownReference, "unknown check '" + w[0] + "'");
        }
    }

    Model m_;
    std::set<std::string> cat_names_, functor_names_, nat_names_, bundle_names_, square_names_, cell_names_, suite_names_;
};

}  // namespace

Model elaborate(const Document& doc) { return Elaborator().run(doc); }

Corpus Model::corpus() const { return Corpus{bundles, squares, cells}; }

const SuiteDecl* Model::find_suite(const std::string& name) const {
    for (const auto& s : suites)
        if (s.name == name) return &s;
    return nullptr;
}

Corpus Model::corpus(const std::string& suite) const {
    const SuiteDecl* s = find_suite(suite);
    if (!s) throw Error(ErrorCode::UnknownReference, "unknown suite '" + suite + "'");
    Corpus c;
    const auto pick = [](const auto& all, const std::vector<std::string>& names, auto& out) {
        for (const auto& n : names)
            for (const auto& x : all)
                if (x.name == n) out.push_back(x);
    };
    pick(bundles, s->bundles, c.bundles);
    pick(squares, s->squares, c.squares);
    pick(cells, s->cells, c.cells);
    return c;
}

void merge_into(Model& into, Model from, const std::string& origin) {
    const auto clash = [&](const char* kind, const std::string& n) {
        throw Error(ErrorCode::DuplicateName, origin + ": " + kind + " '" + n + "' already declared in another file");
    };
    const auto merge_map = [&](auto& dst, auto& src, const char* kind) {
        for (auto& [k, v] : src)
            if (!dst.emplace(k, std::move(v)).second) clash(kind, k);
    };
    const auto merge_vec = [&](auto& dst, auto& src, const char* kind) {
        for (auto& x : src) {
            for (const auto& y : dst)
                if (y.name == x.name) clash(kind, x.name);
            dst.push_back(std::move(x));
        }
    };
    merge_map(into.categories, from.categories, "category");
    merge_map(into.functors, from.functors, "functor");
    merge_map(into.nats, from.nats, "transformation");
    merge_vec(into.bundles, from.bundles, "bundle");
    merge_vec(into.squares, from.squares, "square");
    merge_vec(into.cells, from.cells, "cell");
    merge_vec(into.suites, from.suites, "suite");
}

namespace {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::UnknownReference, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Model load_file(const std::filesystem::path& p) {
    try {
        return elaborate(parse_syntax(read_file(p)));
    } catch (const ParseError& e) {
        throw e.in_file(p.string());
    }
}

}  // namespace

Model load_path(const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    std::error_code ec;
    if (!fs::is_directory(p, ec)) return load_file(p);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(p))
        if (e.is_regular_file() && e.path().extension() == ".cat") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorCode::UnknownReference, "no .cat files in " + path);
    Model m;
    for (const auto& f : files) merge_into(m, load_file(f), f.string());
    return m;
}

}  // namespace fibcat::dsl
