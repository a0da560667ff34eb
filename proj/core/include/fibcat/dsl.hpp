#pragma once

// The .cat description format.
//
//   # comment
//   category two {
//     objects 0 1
//     arrow a: 0 -> 1
//   }
//   category z2 {
//     objects *
//     arrow g: * -> *
//     compose g g = id(*)        # g after g
//   }
//   category three poset { objects 0 1 2; arrow a: 0 -> 1; arrow b: 1 -> 2 }
//   functor j: one -> two { * |-> 0 }
//   nat t: f => g { 0 |-> a }
//   bundle J = j
//   square s: J -> K { up = u; down = d }
//   cell c: s => s2 { up = t; down = t0 }
//   suite small { bundles J K; squares s; check opfibration; check preserve fiber_power:2 opfibration }
//
// Statements end at a newline or `;`. Names are atoms (letters, digits and
// `_ * ' .`, plus `-` and `:` when a name character follows), quoted strings,
// or tuples such as id(0). Identities are implicit (`id(x)` unless given with
// `identity x = e`), as are composites with an identity; every other composite
// must be listed unless the category is declared `poset`. Functor and nat
// entries may be omitted when the target hom-set has exactly one element.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibcat/arrowcat.hpp"
#include "fibcat/corpus.hpp"
#include "fibcat/error.hpp"

namespace fibcat::dsl {

/// 1-based line and column. Spans never take part in AST equality.
struct SourceSpan {
    int line = 0;
    int column = 0;
    friend bool operator==(const SourceSpan&, const SourceSpan&) { return true; }
};

/// Error carrying the position it refers to; what() reads
/// "Code: origin:line:col: message", the origin being a file name when known.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, SourceSpan span, const std::string& message, const std::string& origin = "");
    const SourceSpan& span() const noexcept { return span_; }
    const std::string& detail() const noexcept { return detail_; }
    /// The same error attributed to a file.
    ParseError in_file(const std::string& origin) const { return ParseError(code(), span_, detail_, origin); }

private:
    SourceSpan span_;
    std::string detail_;
};

struct ArrowDecl {
    Term name, src, tgt;
    SourceSpan span;
    friend bool operator==(const ArrowDecl&, const ArrowDecl&) = default;
};

struct CompositeDecl {
    Term g, f, result;
    SourceSpan span;
    friend bool operator==(const CompositeDecl&, const CompositeDecl&) = default;
};

struct IdentityDecl {
    Term object, morphism;
    SourceSpan span;
    friend bool operator==(const IdentityDecl&, const IdentityDecl&) = default;
};

struct CategoryDecl {
    std::string name;
    bool poset = false;
    std::vector<Term> objects;
    std::vector<ArrowDecl> arrows;
    std::vector<IdentityDecl> identities;
    std::vector<CompositeDecl> composites;
    SourceSpan span;
    friend bool operator==(const CategoryDecl&, const CategoryDecl&) = default;
};

struct MapEntry {
    Term from, to;
    SourceSpan span;
    friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

struct FunctorDecl {
    std::string name, dom, cod;
    std::vector<MapEntry> entries;
    SourceSpan span;
    friend bool operator==(const FunctorDecl&, const FunctorDecl&) = default;
};

struct NatDecl {
    std::string name, src, tgt;
    std::vector<MapEntry> components;
    SourceSpan span;
    friend bool operator==(const NatDecl&, const NatDecl&) = default;
};

struct BundleDecl {
    std::string name, functor;
    SourceSpan span;
    friend bool operator==(const BundleDecl&, const BundleDecl&) = default;
};

/// `square` (functors up/down) and `cell` (nats up/down).
struct SquareDecl {
    std::string name, src, tgt, up, down;
    SourceSpan span;
    friend bool operator==(const SquareDecl&, const SquareDecl&) = default;
};

struct CellDecl {
    std::string name, src, tgt, up, down;
    SourceSpan span;
    friend bool operator==(const CellDecl&, const CellDecl&) = default;
};

struct SuiteDecl {
    std::string name;
    std::vector<std::string> bundles, squares, cells;
    /// Each check is a list of words, e.g. {"preserve", "fiber_power:2", "opfibration"}.
    std::vector<std::vector<std::string>> checks;
    SourceSpan span;
    friend bool operator==(const SuiteDecl&, const SuiteDecl&) = default;
};

using Declaration = std::variant<CategoryDecl, FunctorDecl, NatDecl, BundleDecl, SquareDecl, CellDecl, SuiteDecl>;

struct Document {
    std::vector<Declaration> declarations;
    friend bool operator==(const Document&, const Document&) = default;
};

/// Syntax only: throws ParseError(SyntaxError).
Document parse_syntax(const std::string& text);
/// Syntax, then elaboration; throws ParseError with SyntaxError,
/// UnknownReference or DuplicateName.
Document parse(const std::string& text);
/// Canonical text; parse(print(d)) == d.
std::string print(const Document& doc);

/// The built objects of a document, by kind and name.
struct Model {
    std::map<std::string, CatRef> categories;
    std::map<std::string, Functor> functors;
    std::map<std::string, NatTrans> nats;
    std::vector<NamedBundle> bundles;
    std::vector<NamedSquare> squares;
    std::vector<NamedTwoCell> cells;
    std::vector<SuiteDecl> suites;

    /// Every bundle, square and cell, in declaration order.
    Corpus corpus() const;
    /// The members of one suite; throws UnknownReference.
    Corpus corpus(const std::string& suite) const;
    const SuiteDecl* find_suite(const std::string& name) const;
};

Model elaborate(const Document& doc);
/// Merges models from several files; throws DuplicateName on a clash.
void merge_into(Model& into, Model from, const std::string& origin);

/// Reads one .cat file, or every .cat file of a directory in name order.
Model load_path(const std::string& path);

}  // namespace fibcat::dsl
