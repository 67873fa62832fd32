#include "bqcli/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "bq/errors.hpp"
#include "bq/families.hpp"
#include "bq/homology.hpp"
#include "bq/stratify.hpp"

namespace bq::cli {

const char* construction_name(Construction c)
{
    switch (c) {
    case Construction::dsl:
        return "dsl";
    case Construction::kupisch:
        return "kupisch";
    case Construction::bnlambda:
        return "bnlambda";
    case Construction::symmetric_chain:
        return "symmetric_chain";
    default:
        return "klein_four";
    }
}

namespace {

struct Token {
    std::string text;
    std::size_t column = 0;  // 1-based
    bool word = false;
};

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\''; }

std::vector<Token> tokenize(const std::string& line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (word_char(c)) {
            std::size_t j = i;
            while (j < line.size() && word_char(line[j]))
                ++j;
            out.push_back({line.substr(i, j - i), i + 1, true});
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({"->", i + 1, false});
            i += 2;
            continue;
        }
        if (std::string("+-*:(),").find(c) != std::string::npos) {
            out.push_back({std::string(1, c), i + 1, false});
            ++i;
            continue;
        }
        throw ParseError(lineno, i + 1, "identifier or one of + - * : ( ) , ->");
    }
    return out;
}

bool is_integer(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

class Cursor {
public:
    Cursor(std::vector<Token> toks, std::size_t line, std::size_t end_col)
        : toks_(std::move(toks)), line_(line), end_col_(end_col)
    {
    }
    bool done() const { return k_ >= toks_.size(); }
    const Token* peek() const { return done() ? nullptr : &toks_[k_]; }
    bool at(const std::string& p) const { return !done() && !toks_[k_].word && toks_[k_].text == p; }
    std::size_t column() const { return done() ? end_col_ : toks_[k_].column; }
    std::size_t line() const { return line_; }
    [[noreturn]] void fail(const std::string& expected) const { throw ParseError(line_, column(), expected); }

    std::string word(const std::string& expected)
    {
        if (done() || !toks_[k_].word)
            fail(expected);
        return toks_[k_++].text;
    }
    std::size_t integer(const std::string& expected)
    {
        if (done() || !toks_[k_].word || !is_integer(toks_[k_].text))
            fail(expected);
        return std::stoul(toks_[k_++].text);
    }
    void expect(const std::string& p)
    {
        if (!at(p))
            fail("'" + p + "'");
        ++k_;
    }
    bool accept(const std::string& p)
    {
        if (!at(p))
            return false;
        ++k_;
        return true;
    }
    void finish()
    {
        if (!done())
            fail("end of line");
    }

private:
    std::vector<Token> toks_;
    std::size_t k_ = 0;
    std::size_t line_;
    std::size_t end_col_;
};

std::vector<std::string> parse_word(Cursor& c)
{
    std::vector<std::string> w{c.word("arrow id")};
    while (c.accept("*"))
        w.push_back(c.word("arrow id"));
    return w;
}

struct WordRef {
    std::vector<std::string> word;
    std::vector<Pos> pos;
};

// Term: [<int> *] <word>; records each arrow's position for later checks.
TermSpec parse_term(Cursor& c, long sign, WordRef& ref)
{
    TermSpec t;
    t.coeff = sign;
    const Token* first = c.peek();
    if (first && first->word && is_integer(first->text)) {
        t.coeff *= static_cast<long>(c.integer("coefficient"));
        c.expect("*");
    }
    do {
        Pos p{c.line(), c.column()};
        std::string id = c.word("arrow id");
        if (is_integer(id))
            throw ParseError(p.line, p.column, "arrow id");
        t.word.push_back(id);
        ref.word.push_back(id);
        ref.pos.push_back(p);
    } while (c.accept("*"));
    return t;
}

RelationSpec parse_expression(Cursor& c, std::vector<WordRef>& refs)
{
    RelationSpec r;
    long sign = 1;
    if (c.accept("-"))
        sign = -1;
    else
        c.accept("+");
    for (;;) {
        refs.emplace_back();
        r.push_back(parse_term(c, sign, refs.back()));
        if (c.accept("+"))
            sign = 1;
        else if (c.accept("-"))
            sign = -1;
        else
            break;
    }
    c.finish();
    return r;
}

ModuleAtom parse_atom(Cursor& c)
{
    ModuleAtom a;
    std::string head = c.word("module summand (A, DA, P(v), I(v), S(v), ideal(w), trunc(v, k))");
    if (head == "A")
        return a;
    if (head == "DA") {
        a.kind = ModuleAtom::Kind::dual_regular;
        return a;
    }
    c.expect("(");
    if (head == "D") {
        if (c.word("'A'") != "A")
            c.fail("'A'");
        a.kind = ModuleAtom::Kind::dual_regular;
    } else if (head == "P" || head == "I" || head == "S") {
        a.kind = head == "P" ? ModuleAtom::Kind::projective
                             : head == "I" ? ModuleAtom::Kind::injective : ModuleAtom::Kind::simple;
        a.vertex = c.word("vertex id");
    } else if (head == "ideal") {
        a.kind = ModuleAtom::Kind::ideal;
        a.word = parse_word(c);
    } else if (head == "trunc") {
        a.kind = ModuleAtom::Kind::truncation;
        a.vertex = c.word("vertex id");
        c.expect(",");
        a.length = c.integer("length");
    } else {
        throw ParseError(c.line(), c.column(), "module summand (A, DA, P(v), I(v), S(v), ideal(w), trunc(v, k))");
    }
    c.expect(")");
    return a;
}

ModuleExpr parse_module(Cursor& c)
{
    ModuleExpr e{parse_atom(c)};
    while (c.accept("+"))
        e.push_back(parse_atom(c));
    c.finish();
    return e;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

std::string print_relation(const RelationSpec& r)
{
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        long c = r[i].coeff;
        if (i == 0)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        long m = c < 0 ? -c : c;
        if (m != 1)
            out += std::to_string(m) + "*";
        out += join(r[i].word, "*");
    }
    return out;
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty())
        lines.push_back(cur);
    return lines;
}

}  // namespace

ModuleExpr parse_module_expr(const std::string& text)
{
    Cursor c(tokenize(text, 1), 1, text.size() + 1);
    return parse_module(c);
}

std::string print_module_expr(const ModuleExpr& e)
{
    std::vector<std::string> parts;
    for (const auto& a : e) {
        switch (a.kind) {
        case ModuleAtom::Kind::regular:
            parts.push_back("A");
            break;
        case ModuleAtom::Kind::dual_regular:
            parts.push_back("DA");
            break;
        case ModuleAtom::Kind::projective:
            parts.push_back("P(" + a.vertex + ")");
            break;
        case ModuleAtom::Kind::injective:
            parts.push_back("I(" + a.vertex + ")");
            break;
        case ModuleAtom::Kind::simple:
            parts.push_back("S(" + a.vertex + ")");
            break;
        case ModuleAtom::Kind::ideal:
            parts.push_back("ideal(" + join(a.word, "*") + ")");
            break;
        case ModuleAtom::Kind::truncation:
            parts.push_back("trunc(" + a.vertex + ", " + std::to_string(a.length) + ")");
            break;
        }
    }
    return join(parts, " + ");
}

AlgebraSpec parse_algebra_dsl(const std::string& text)
{
    AlgebraSpec s;
    const auto lines = split_lines(text);
    bool have_name = false;
    std::optional<std::size_t> builtin_line, dsl_line;
    std::map<std::string, Pos> seen_keys;
    std::vector<std::pair<std::string, Pos>> arrow_ends;  // vertex references
    std::vector<WordRef> refs;
    std::set<std::string> seen_vertices_decl;
    bool in_relations = false;

    auto once = [&](const std::string& key, Pos p) {
        if (seen_keys.count(key))
            throw ParseError(p.line, p.column, "at most one '" + key + "' line");
        seen_keys[key] = p;
    };
    auto mark_builtin = [&](Pos p) {
        if (builtin_line || dsl_line)
            throw ParseError(p.line, p.column, "a single construction");
        builtin_line = p.line;
    };
    auto mark_dsl = [&](Pos p) {
        if (builtin_line)
            throw ParseError(p.line, p.column, "a single construction");
        if (!dsl_line)
            dsl_line = p.line;
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
        const std::string& raw = lines[li];
        const std::size_t lineno = li + 1;
        auto toks = tokenize(raw, lineno);
        if (toks.empty())
            continue;
        const bool indented = !raw.empty() && std::isspace(static_cast<unsigned char>(raw[0]));
        Cursor c(toks, lineno, raw.size() + 1);
        if (in_relations && indented) {
            s.relations.push_back(parse_expression(c, refs));
            continue;
        }
        in_relations = false;
        Pos kp{lineno, c.column()};
        std::string key = c.word("keyword");
        if (!have_name && key != "algebra")
            throw ParseError(kp.line, kp.column, "'algebra <name>'");
        if (key == "algebra") {
            once(key, kp);
            // the name is the rest of the line
            std::size_t start = raw.find("algebra") + 7;
            std::string name = raw.substr(start);
            auto hash = name.find('#');
            if (hash != std::string::npos)
                name = name.substr(0, hash);
            auto b = name.find_first_not_of(" \t");
            auto e = name.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw ParseError(lineno, raw.size() + 1, "algebra name");
            s.name = name.substr(b, e - b + 1);
            have_name = true;
            continue;
        }
        if (key == "vertices") {
            once(key, kp);
            mark_dsl(kp);
            do {
                Pos p{lineno, c.column()};
                std::string v = c.word("vertex id");
                if (!seen_vertices_decl.insert(v).second)
                    throw ParseError(p.line, p.column, "distinct vertex ids");
                s.vertices.push_back(v);
            } while (!c.done());
        } else if (key == "arrow") {
            mark_dsl(kp);
            ArrowDecl a;
            Pos p{lineno, c.column()};
            a.id = c.word("arrow id");
            if (is_integer(a.id))
                throw ParseError(p.line, p.column, "arrow id that is not an integer");
            for (const auto& b : s.arrows)
                if (b.id == a.id)
                    throw ParseError(p.line, p.column, "distinct arrow ids");
            c.expect(":");
            arrow_ends.push_back({"", {lineno, c.column()}});
            a.source = arrow_ends.back().first = c.word("source vertex");
            c.expect("->");
            arrow_ends.push_back({"", {lineno, c.column()}});
            a.target = arrow_ends.back().first = c.word("target vertex");
            c.finish();
            s.arrows.push_back(a);
            continue;
        } else if (key == "relations") {
            once(key, kp);
            mark_dsl(kp);
            c.expect(":");
            c.finish();
            in_relations = true;
            continue;
        } else if (key == "kupisch") {
            mark_builtin(kp);
            s.construction = Construction::kupisch;
            do
                s.kupisch.push_back(c.integer("Kupisch entry"));
            while (!c.done() && is_integer(c.peek()->text));
            if (!c.done()) {
                if (c.word("'linear'") != "linear")
                    throw ParseError(lineno, toks.back().column, "'linear'");
                s.linear = true;
            }
        } else if (key == "bnlambda") {
            mark_builtin(kp);
            s.construction = Construction::bnlambda;
            s.size = c.integer("n");
            while (!c.done())
                s.lambdas.push_back(static_cast<int>(c.integer("lambda (0 or 1)")));
        } else if (key == "symmetric_chain") {
            mark_builtin(kp);
            s.construction = Construction::symmetric_chain;
            s.size = c.integer("m");
        } else if (key == "klein_four") {
            mark_builtin(kp);
            s.construction = Construction::klein_four;
        } else if (key == "endo_of") {
            once(key, kp);
            s.endo_of = parse_module(c);
            continue;
        } else if (key == "loewy_cap") {
            once(key, kp);
            s.loewy_cap = c.integer("Loewy cap");
        } else if (key == "duality") {
            once(key, kp);
            if (c.word("'asserted'") != "asserted")
                throw ParseError(lineno, toks[1].column, "'asserted'");
            s.duality_asserted = true;
        } else if (key == "order") {
            once(key, kp);
            do
                s.order.push_back(c.word("vertex id"));
            while (!c.done());
        } else {
            throw ParseError(kp.line, kp.column,
                             "keyword (algebra, vertices, arrow, relations:, kupisch, bnlambda, symmetric_chain, "
                             "klein_four, endo_of, loewy_cap, duality, order)");
        }
        c.finish();
    }
    if (!have_name)
        throw ParseError(lines.size() + 1, 1, "'algebra <name>'");
    if (!builtin_line && !dsl_line)
        throw ParseError(lines.size() + 1, 1, "a construction (vertices/arrows or a named family)");
    if (dsl_line) {
        if (s.vertices.empty())
            throw ParseError(*dsl_line, 1, "'vertices' line");
        for (const auto& [v, p] : arrow_ends)
            if (!seen_vertices_decl.count(v))
                throw ParseError(p.line, p.column, "declared vertex id");
        std::map<std::string, const ArrowDecl*> by_id;
        for (const auto& a : s.arrows)
            by_id[a.id] = &a;
        for (const auto& r : refs) {
            for (std::size_t k = 0; k < r.word.size(); ++k) {
                auto it = by_id.find(r.word[k]);
                if (it == by_id.end())
                    throw ParseError(r.pos[k].line, r.pos[k].column, "declared arrow id");
                if (k > 0 && by_id[r.word[k - 1]]->target != it->second->source)
                    throw ParseError(r.pos[k].line, r.pos[k].column, "arrow composable with the previous one");
            }
        }
    }
    return s;
}

std::string print_algebra_spec(const AlgebraSpec& s)
{
    std::ostringstream o;
    o << "algebra " << s.name << "\n";
    switch (s.construction) {
    case Construction::dsl:
        o << "vertices " << join(s.vertices, " ") << "\n";
        for (const auto& a : s.arrows)
            o << "arrow " << a.id << " : " << a.source << " -> " << a.target << "\n";
        if (!s.relations.empty()) {
            o << "relations:\n";
            for (const auto& r : s.relations)
                o << "  " << print_relation(r) << "\n";
        }
        break;
    case Construction::kupisch: {
        o << "kupisch";
        for (auto k : s.kupisch)
            o << " " << k;
        o << (s.linear ? " linear\n" : "\n");
        break;
    }
    case Construction::bnlambda:
        o << "bnlambda " << s.size;
        for (auto l : s.lambdas)
            o << " " << l;
        o << "\n";
        break;
    case Construction::symmetric_chain:
        o << "symmetric_chain " << s.size << "\n";
        break;
    case Construction::klein_four:
        o << "klein_four\n";
        break;
    }
    if (s.endo_of)
        o << "endo_of " << print_module_expr(*s.endo_of) << "\n";
    if (s.loewy_cap != 64)
        o << "loewy_cap " << s.loewy_cap << "\n";
    if (s.duality_asserted)
        o << "duality asserted\n";
    if (!s.order.empty())
        o << "order " << join(s.order, " ") << "\n";
    return o.str();
}

AlgebraPtr build_base_algebra(const AlgebraSpec& s)
{
    switch (s.construction) {
    case Construction::kupisch:
        return nakayama_from_kupisch({s.kupisch, s.linear ? KupischShape::linear : KupischShape::cyclic});
    case Construction::bnlambda:
        return bnlambda_family(s.size, s.lambdas);
    case Construction::symmetric_chain:
        return symmetric_chain_family(s.size);
    case Construction::klein_four:
        return klein_four_like();
    case Construction::dsl:
        break;
    }
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const auto& a : s.arrows)
        arrows.emplace_back(a.id, a.source, a.target);
    Quiver q = Quiver::from_ids(s.vertices, arrows);
    std::vector<Relation> rels;
    for (const auto& r : s.relations) {
        Relation rel;
        for (const auto& t : r)
            rel.push_back({Scalar(t.coeff), make_path(q, t.word)});
        rels.push_back(rel);
    }
    return build_algebra(q, rels, s.loewy_cap, s.name);
}

Representation build_module(const AlgebraPtr& a, const ModuleExpr& e)
{
    std::vector<Representation> parts;
    for (const auto& atom : e) {
        const std::string label = print_module_expr({atom});
        auto vtx = [&] { return a->quiver().vertex_index(atom.vertex); };
        Representation m;
        switch (atom.kind) {
        case ModuleAtom::Kind::regular:
            m = regular(a);
            break;
        case ModuleAtom::Kind::dual_regular:
            m = dual_regular(a);
            break;
        case ModuleAtom::Kind::projective:
            m = projective(a, vtx());
            break;
        case ModuleAtom::Kind::injective:
            m = injective(a, vtx());
            break;
        case ModuleAtom::Kind::simple:
            m = simple(a, vtx());
            break;
        case ModuleAtom::Kind::ideal:
            m = path_ideal(a, make_path(a->quiver(), atom.word));
            break;
        case ModuleAtom::Kind::truncation:
            m = projective_truncation(a, vtx(), atom.length);
            break;
        }
        parts.push_back(m.renamed(label));
    }
    if (parts.size() == 1)
        return parts.front();
    return direct_sum_module(parts).renamed(print_module_expr(e));
}

LoadedAlgebra load_algebra(const AlgebraSpec& s)
{
    LoadedAlgebra out;
    out.spec = s;
    out.base = build_base_algebra(s);
    out.algebra = out.base;
    if (s.endo_of) {
        // summands in the order the expression lists them, so vertex k is the k-th new one
        std::vector<Representation> parts;
        for (const auto& atom : *s.endo_of)
            for (const auto& x : basic_summands(build_module(out.base, {atom})))
                if (std::none_of(parts.begin(), parts.end(), [&](const Representation& p) { return isomorphic(p, x); }))
                    parts.push_back(x);
        out.endo = endomorphism_algebra(parts, s.name);
        out.algebra = out.endo->algebra;
    }
    if (!s.order.empty())
        order_from_ids(*out.algebra, s.order);
    return out;
}

}  // namespace bq::cli
