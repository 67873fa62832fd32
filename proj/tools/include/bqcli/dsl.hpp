#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bq/endomorphism.hpp"

namespace bq::cli {

/// Where a token started, for error reporting.
struct Pos {
    std::size_t line = 0;
    std::size_t column = 0;
};

struct ArrowDecl {
    std::string id, source, target;
    friend bool operator==(const ArrowDecl&, const ArrowDecl&) = default;
};

struct TermSpec {
    long coeff = 1;
    std::vector<std::string> word;  // arrow ids, left to right
    friend bool operator==(const TermSpec&, const TermSpec&) = default;
};
using RelationSpec = std::vector<TermSpec>;

/// One summand of a module expression.
struct ModuleAtom {
    enum class Kind { regular, dual_regular, projective, injective, simple, ideal, truncation };
    Kind kind = Kind::regular;
    std::string vertex;             // projective, injective, simple, truncation
    std::vector<std::string> word;  // ideal
    std::size_t length = 0;         // truncation
    friend bool operator==(const ModuleAtom&, const ModuleAtom&) = default;
};
using ModuleExpr = std::vector<ModuleAtom>;

enum class Construction { dsl, kupisch, bnlambda, symmetric_chain, klein_four };
const char* construction_name(Construction c);

struct AlgebraSpec {
    std::string name;
    Construction construction = Construction::dsl;
    // dsl
    std::vector<std::string> vertices;
    std::vector<ArrowDecl> arrows;
    std::vector<RelationSpec> relations;
    // kupisch
    std::vector<std::size_t> kupisch;
    bool linear = false;
    // bnlambda, symmetric_chain
    std::size_t size = 0;
    std::vector<int> lambdas;
    /// End of this module over the algebra above, when present.
    std::optional<ModuleExpr> endo_of;

    std::size_t loewy_cap = 64;
    bool duality_asserted = false;
    std::vector<std::string> order;

    friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Line-oriented grammar:
///   algebra <name>
///   vertices <id>+
///   arrow <id> : <v> -> <v>
///   relations:            followed by indented lines, one expression each
///   kupisch <n>+ [linear] | bnlambda <n> <λ>* | symmetric_chain <m> | klein_four
///   endo_of <module>      e.g. A + ideal(x), P(1) + S(2), DA, I(v), trunc(v, k)
///   loewy_cap <n> | duality asserted | order <v>+
/// Expressions are sums of [<int>*]<arrow>*<arrow>... terms composed left to
/// right. '#' starts a comment. Throws ParseError(line, column, expected).
AlgebraSpec parse_algebra_dsl(const std::string& text);

/// Canonical text form; parse_algebra_dsl(print_algebra_spec(s)) == s.
std::string print_algebra_spec(const AlgebraSpec& s);

ModuleExpr parse_module_expr(const std::string& text);
std::string print_module_expr(const ModuleExpr& e);

/// The base algebra of a spec (ignoring endo_of).
AlgebraPtr build_base_algebra(const AlgebraSpec& s);
Representation build_module(const AlgebraPtr& a, const ModuleExpr& e);

struct LoadedAlgebra {
    AlgebraSpec spec;
    AlgebraPtr algebra;  // End(M) when endo_of is set
    AlgebraPtr base;     // the algebra M lives over
    std::optional<EndomorphismAlgebra> endo;
};
LoadedAlgebra load_algebra(const AlgebraSpec& s);

}  // namespace bq::cli
