#include "liaset/formula.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

namespace liaset {

namespace {

i64 floor_div(i64 a, i64 b) {  // b > 0
    i64 q = a / b, r = a % b;
    return r < 0 ? q - 1 : q;
}

i64 narrow_checked(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
        throw std::invalid_argument(std::string(what) + " overflows 64-bit range");
    return static_cast<i64>(v);
}

}  // namespace

// ---- Body construction -----------------------------------------------------

BodyPtr Body::make_atom(Atom a) {
    auto b = std::make_shared<Body>();
    b->kind = Kind::Atom;
    b->atom = std::move(a);
    return b;
}

static BodyPtr make_nary(Body::Kind kind, std::vector<BodyPtr> kids) {
    if (kids.empty()) throw std::invalid_argument("connective needs at least one operand");
    if (kids.size() == 1) return kids[0];
    auto b = std::make_shared<Body>();
    b->kind = kind;
    b->kids = std::move(kids);
    return b;
}

BodyPtr Body::make_and(std::vector<BodyPtr> kids) { return make_nary(Kind::And, std::move(kids)); }
BodyPtr Body::make_or(std::vector<BodyPtr> kids) { return make_nary(Kind::Or, std::move(kids)); }

BodyPtr Body::make_not(BodyPtr kid) {
    auto b = std::make_shared<Body>();
    b->kind = Kind::Not;
    b->kids = {std::move(kid)};
    return b;
}

// ---- Evaluation ------------------------------------------------------------

i128 LinTerm::eval(const std::map<std::string, Vec>& env,
                   const std::map<std::string, i64>& free_vals) const {
    i128 acc = constant;
    for (const auto& vc : vars) {
        const Vec& point = env.at(vc.var);
        if (vc.coord < 0 || static_cast<std::size_t>(vc.coord) >= point.size())
            throw std::invalid_argument("coordinate out of range for variable " + vc.var);
        acc += i128(vc.coeff) * point[vc.coord];
    }
    for (const auto& [name, coeff] : free) acc += i128(coeff) * free_vals.at(name);
    return acc;
}

static bool eval_atom(const Atom& a, const std::map<std::string, Vec>& env,
                      const std::map<std::string, i64>& free_vals) {
    i128 v = a.f.eval(env, free_vals);
    switch (a.rel) {
        case Rel::Le: return v <= 0;
        case Rel::Lt: return v < 0;
        case Rel::Eq: return v == 0;
        case Rel::Ne: return v != 0;
        case Rel::Ge: return v >= 0;
        case Rel::Gt: return v > 0;
    }
    return false;
}

bool eval_body(const BodyPtr& b, const std::map<std::string, Vec>& env,
               const std::map<std::string, i64>& free_vals) {
    switch (b->kind) {
        case Body::Kind::Atom: return eval_atom(b->atom, env, free_vals);
        case Body::Kind::Not: return !eval_body(b->kids[0], env, free_vals);
        case Body::Kind::And:
            for (const auto& k : b->kids)
                if (!eval_body(k, env, free_vals)) return false;
            return true;
        case Body::Kind::Or:
            for (const auto& k : b->kids)
                if (eval_body(k, env, free_vals)) return true;
            return false;
    }
    return false;
}

// ---- Lexer -----------------------------------------------------------------

namespace {

enum class Tok { End, Ident, Int, Sym };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    i64 value = 0;
    int line = 1, col = 1;
};

bool is_keyword(const std::string& s) {
    return s == "exists" || s == "forall" || s == "in" || s == "and" || s == "or" || s == "not";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (text[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(text.substr(i, j - i));
            bump(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            i128 v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                v = v * 10 + (text[j] - '0');
                if (v > std::numeric_limits<i64>::max())
                    throw ParseError("integer literal too large", line, col);
                ++j;
            }
            t.kind = Tok::Int;
            t.value = static_cast<i64>(v);
            t.text = std::string(text.substr(i, j - i));
            bump(j - i);
        } else {
            static constexpr std::string_view two_char[] = {"<=", ">=", "!="};
            static constexpr std::string_view one_char = "<>=+-*():[]^";
            std::string_view rest = text.substr(i);
            std::size_t len = 0;
            for (auto s : two_char)
                if (rest.starts_with(s)) len = 2;
            if (!len && one_char.find(c) != std::string_view::npos) len = 1;
            if (!len) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            t.kind = Tok::Sym;
            t.text = std::string(rest.substr(0, len));
            bump(len);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---- Parser ----------------------------------------------------------------

// Accumulates a linear expression with i128 coefficients, narrowed (with a
// range check) when the final LinTerm is materialized.
struct LinBuilder {
    std::map<std::pair<std::string, int>, i128> vars;
    std::map<std::string, i128> free;
    i128 constant = 0;

    void add_var(const std::string& name, int coord, i128 coeff) {
        vars[{name, coord}] += coeff;
    }
    void add_free(const std::string& name, i128 coeff) { free[name] += coeff; }

    LinTerm finalize(int line, int col) const {
        LinTerm t;
        for (const auto& [key, c] : vars) {
            if (c == 0) continue;
            if (c > std::numeric_limits<i64>::max() || c < std::numeric_limits<i64>::min())
                throw ParseError("coefficient overflow on " + key.first, line, col);
            t.vars.push_back({key.first, key.second, static_cast<i64>(c)});
        }
        for (const auto& [name, c] : free) {
            if (c == 0) continue;
            if (c > std::numeric_limits<i64>::max() || c < std::numeric_limits<i64>::min())
                throw ParseError("coefficient overflow on " + name, line, col);
            t.free[name] = static_cast<i64>(c);
        }
        if (constant > std::numeric_limits<i64>::max() ||
            constant < std::numeric_limits<i64>::min())
            throw ParseError("constant term overflow", line, col);
        t.constant = static_cast<i64>(constant);
        return t;
    }
};

class Parser {
  public:
    explicit Parser(std::string_view text) : toks_(lex(text)) {}

    Formula run() {
        Formula f;
        while (peek().kind == Tok::Ident && (peek().text == "exists" || peek().text == "forall"))
            f.quants.push_back(parse_quant());
        if (f.quants.empty()) fail("expected 'exists' or 'forall'");
        expect_sym(":");
        f.body = parse_or();
        if (peek().kind != Tok::End) fail("trailing input after formula");
        return f;
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    // var name -> declared dimension (0 when unspecified)
    std::map<std::string, int> quant_dims_;

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, peek().line, peek().col);
    }
    bool at_sym(std::string_view s) const {
        return peek().kind == Tok::Sym && peek().text == s;
    }
    bool at_kw(std::string_view s) const {
        return peek().kind == Tok::Ident && peek().text == s;
    }
    void expect_sym(std::string_view s) {
        if (!at_sym(s)) fail("expected '" + std::string(s) + "'");
        take();
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != Tok::Ident || is_keyword(peek().text))
            fail(std::string("expected ") + what);
        return take().text;
    }

    QuantSpec parse_quant() {
        QuantSpec q;
        q.q = take().text == "exists" ? Quant::Exists : Quant::Forall;
        int line = peek().line, col = peek().col;
        q.var = expect_ident("variable name");
        if (quant_dims_.count(q.var))
            throw ParseError("duplicate quantified variable " + q.var, line, col);
        if (!at_kw("in")) fail("expected 'in'");
        take();
        q.set_name = expect_ident("set name");
        if (at_sym("^")) {
            take();
            if (peek().kind != Tok::Int || peek().value < 1) fail("expected dimension >= 1");
            q.declared_dim = static_cast<int>(take().value);
        }
        quant_dims_[q.var] = q.declared_dim;
        return q;
    }

    BodyPtr parse_or() {
        std::vector<BodyPtr> kids{parse_and()};
        while (at_kw("or")) {
            take();
            kids.push_back(parse_and());
        }
        return Body::make_or(std::move(kids));
    }

    BodyPtr parse_and() {
        std::vector<BodyPtr> kids{parse_unary()};
        while (at_kw("and")) {
            take();
            kids.push_back(parse_unary());
        }
        return Body::make_and(std::move(kids));
    }

    BodyPtr parse_unary() {
        if (at_kw("not")) {
            take();
            return Body::make_not(parse_unary());
        }
        if (at_sym("(")) {
            take();
            BodyPtr inner = parse_or();
            expect_sym(")");
            return inner;
        }
        return parse_atom();
    }

    BodyPtr parse_atom() {
        int line = peek().line, col = peek().col;
        LinBuilder lhs;
        parse_linexpr(lhs);
        Rel rel = parse_rel();
        LinBuilder rhs;
        parse_linexpr(rhs);
        // Fold to lhs - rhs rel 0.
        for (const auto& [key, c] : rhs.vars) lhs.vars[key] -= c;
        for (const auto& [name, c] : rhs.free) lhs.free[name] -= c;
        lhs.constant -= rhs.constant;
        return Body::make_atom(Atom{lhs.finalize(line, col), rel});
    }

    Rel parse_rel() {
        if (peek().kind != Tok::Sym) fail("expected comparison operator");
        std::string s = peek().text;
        Rel r;
        if (s == "<=") r = Rel::Le;
        else if (s == "<") r = Rel::Lt;
        else if (s == "=") r = Rel::Eq;
        else if (s == "!=") r = Rel::Ne;
        else if (s == ">=") r = Rel::Ge;
        else if (s == ">") r = Rel::Gt;
        else fail("expected comparison operator");
        take();
        return r;
    }

    void parse_linexpr(LinBuilder& out) {
        i64 sign = 1;
        if (at_sym("-")) {
            take();
            sign = -1;
        }
        parse_term(out, sign);
        for (;;) {
            if (at_sym("+")) sign = 1;
            else if (at_sym("-")) sign = -1;
            else break;
            take();
            parse_term(out, sign);
        }
    }

    void parse_term(LinBuilder& out, i64 sign) {
        if (peek().kind == Tok::Int) {
            i64 v = take().value;
            if (at_sym("*")) {
                take();
                parse_access(out, i128(sign) * v);
            } else {
                out.constant += i128(sign) * v;
            }
            return;
        }
        if (peek().kind == Tok::Ident && !is_keyword(peek().text)) {
            parse_access(out, sign);
            return;
        }
        fail("expected term");
    }

    void parse_access(LinBuilder& out, i128 coeff) {
        int line = peek().line, col = peek().col;
        std::string name = expect_ident("variable or scalar name");
        auto it = quant_dims_.find(name);
        if (it != quant_dims_.end()) {
            if (!at_sym("["))
                throw ParseError("quantified variable " + name +
                                     " needs a coordinate, e.g. " + name + "[1]",
                                 line, col);
            take();
            if (peek().kind != Tok::Int || peek().value < 1)
                fail("expected coordinate index >= 1");
            i64 coord = take().value;
            if (it->second > 0 && coord > it->second)
                throw ParseError("coordinate " + std::to_string(coord) + " out of range for " +
                                     name + " (declared dimension " +
                                     std::to_string(it->second) + ")",
                                 line, col);
            expect_sym("]");
            out.add_var(name, static_cast<int>(coord - 1), coeff);
        } else {
            if (at_sym("["))
                throw ParseError("cannot index free scalar " + name, line, col);
            out.add_free(name, coeff);
        }
    }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).run(); }

// ---- Pretty printing -------------------------------------------------------

namespace {

void print_linterm(std::string& out, const LinTerm& t) {
    bool first = true;
    auto emit = [&](i64 coeff, const std::string& access) {
        if (first) {
            if (coeff < 0) out += "-";
            first = false;
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        u64 mag = coeff < 0 ? ~static_cast<u64>(coeff) + 1 : static_cast<u64>(coeff);
        if (access.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += access;
        }
    };
    for (const auto& vc : t.vars)
        emit(vc.coeff, vc.var + "[" + std::to_string(vc.coord + 1) + "]");
    for (const auto& [name, coeff] : t.free) emit(coeff, name);
    if (t.constant != 0 || first) emit(t.constant, "");
}

const char* rel_text(Rel r) {
    switch (r) {
        case Rel::Le: return "<=";
        case Rel::Lt: return "<";
        case Rel::Eq: return "=";
        case Rel::Ne: return "!=";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

int body_prec(const Body& b) {
    switch (b.kind) {
        case Body::Kind::Or: return 0;
        case Body::Kind::And: return 1;
        case Body::Kind::Not: return 2;
        case Body::Kind::Atom: return 3;
    }
    return 3;
}

void print_body(std::string& out, const BodyPtr& b, int min_prec) {
    bool parens = body_prec(*b) < min_prec;
    if (parens) out += "(";
    switch (b->kind) {
        case Body::Kind::Atom:
            print_linterm(out, b->atom.f);
            out += " ";
            out += rel_text(b->atom.rel);
            out += " 0";
            break;
        case Body::Kind::Not:
            out += "not ";
            print_body(out, b->kids[0], 2);
            break;
        case Body::Kind::And:
            for (std::size_t i = 0; i < b->kids.size(); ++i) {
                if (i) out += " and ";
                print_body(out, b->kids[i], 2);
            }
            break;
        case Body::Kind::Or:
            for (std::size_t i = 0; i < b->kids.size(); ++i) {
                if (i) out += " or ";
                print_body(out, b->kids[i], 1);
            }
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string pretty_print(const Formula& f) {
    std::string out;
    for (const auto& q : f.quants) {
        out += q.q == Quant::Exists ? "exists " : "forall ";
        out += q.var + " in " + q.set_name;
        if (q.declared_dim > 0) out += "^" + std::to_string(q.declared_dim);
        out += " ";
    }
    out += ": ";
    print_body(out, f.body, 0);
    return out;
}

// ---- Structure queries and rewrites ----------------------------------------

int Formula::max_coord_used(const std::string& var) const {
    int best = 0;
    auto walk = [&](auto&& self, const BodyPtr& b) -> void {
        if (b->kind == Body::Kind::Atom) {
            for (const auto& vc : b->atom.f.vars)
                if (vc.var == var) best = std::max(best, vc.coord + 1);
            return;
        }
        for (const auto& k : b->kids) self(self, k);
    };
    walk(walk, body);
    return best;
}

namespace {

// Rebuild a body with atoms mapped through `fn`.
template <typename Fn>
BodyPtr map_atoms(const BodyPtr& b, const Fn& fn) {
    switch (b->kind) {
        case Body::Kind::Atom: return Body::make_atom(fn(b->atom));
        case Body::Kind::Not: return Body::make_not(map_atoms(b->kids[0], fn));
        default: {
            std::vector<BodyPtr> kids;
            kids.reserve(b->kids.size());
            for (const auto& k : b->kids) kids.push_back(map_atoms(k, fn));
            auto nb = std::make_shared<Body>();
            nb->kind = b->kind;
            nb->kids = std::move(kids);
            return nb;
        }
    }
}

}  // namespace

Formula substitute_free(const Formula& f, const std::map<std::string, i64>& free_vals) {
    Formula out = f;
    out.body = map_atoms(f.body, [&](const Atom& a) {
        Atom na = a;
        i128 c = na.f.constant;
        for (auto it = na.f.free.begin(); it != na.f.free.end();) {
            auto v = free_vals.find(it->first);
            if (v != free_vals.end()) {
                c += i128(it->second) * v->second;
                it = na.f.free.erase(it);
            } else {
                ++it;
            }
        }
        na.f.constant = narrow_checked(c, "substituted constant");
        return na;
    });
    return out;
}

Formula substitute_var(const Formula& f, const std::string& var, const Vec& value) {
    if (f.quants.empty() || f.quants.front().var != var)
        throw std::invalid_argument("substitute_var requires the leading quantifier");
    Formula out;
    out.quants.assign(f.quants.begin() + 1, f.quants.end());
    out.body = map_atoms(f.body, [&](const Atom& a) {
        Atom na;
        na.rel = a.rel;
        na.f.free = a.f.free;
        i128 c = a.f.constant;
        for (const auto& vc : a.f.vars) {
            if (vc.var == var) {
                if (vc.coord < 0 || static_cast<std::size_t>(vc.coord) >= value.size())
                    throw std::invalid_argument("substituted point has too few coordinates");
                c += i128(vc.coeff) * value[vc.coord];
            } else {
                na.f.vars.push_back(vc);
            }
        }
        na.f.constant = narrow_checked(c, "substituted constant");
        return na;
    });
    return out;
}

Formula negate_dualize(const Formula& f) {
    Formula out = f;
    for (auto& q : out.quants)
        q.q = q.q == Quant::Exists ? Quant::Forall : Quant::Exists;
    out.body = Body::make_not(f.body);
    return out;
}

std::vector<std::string> free_names(const Formula& f) {
    std::set<std::string> names;
    auto walk = [&](auto&& self, const BodyPtr& b) -> void {
        if (b->kind == Body::Kind::Atom) {
            for (const auto& [name, coeff] : b->atom.f.free) names.insert(name);
            return;
        }
        for (const auto& k : b->kids) self(self, k);
    };
    walk(walk, f.body);
    return {names.begin(), names.end()};
}

// ---- Canonical atoms and DNF -----------------------------------------------

GeAtomOrConst canonical_ge(const LinTerm& f) {
    std::map<std::pair<std::string, int>, i64> vars;
    for (const auto& vc : f.vars)
        if (vc.coeff) vars[{vc.var, vc.coord}] += vc.coeff;
    std::erase_if(vars, [](const auto& kv) { return kv.second == 0; });
    std::map<std::string, i64> frees;
    for (const auto& [name, c] : f.free)
        if (c) frees[name] += c;
    std::erase_if(frees, [](const auto& kv) { return kv.second == 0; });

    GeAtomOrConst out;
    if (vars.empty() && frees.empty()) {
        out.is_const = true;
        out.truth = f.constant >= 0;
        return out;
    }
    i64 g = 0;
    for (const auto& [key, c] : vars) g = std::gcd(g, c);
    for (const auto& [name, c] : frees) g = std::gcd(g, c);
    // f >= 0 over integers iff f/g >= ceil(-c/g), i.e. f/g + floor(c/g) >= 0.
    for (auto& [key, c] : vars) c /= g;
    for (auto& [name, c] : frees) c /= g;
    out.atom.constant = floor_div(f.constant, g);
    for (const auto& [key, c] : vars) out.atom.vars.push_back({key.first, key.second, c});
    for (const auto& [name, c] : frees) out.atom.free.emplace_back(name, c);
    return out;
}

GeAtom GeAtom::negated() const {
    GeAtom n = *this;
    for (auto& vc : n.vars) vc.coeff = -vc.coeff;
    for (auto& [name, c] : n.free) c = -c;
    n.constant = -constant - 1;
    return n;
}

namespace {

Rel negate_rel(Rel r) {
    switch (r) {
        case Rel::Le: return Rel::Gt;
        case Rel::Lt: return Rel::Ge;
        case Rel::Eq: return Rel::Ne;
        case Rel::Ne: return Rel::Eq;
        case Rel::Ge: return Rel::Lt;
        case Rel::Gt: return Rel::Le;
    }
    return r;
}

BodyPtr to_nnf(const BodyPtr& b, bool neg) {
    switch (b->kind) {
        case Body::Kind::Atom: {
            Atom a = b->atom;
            if (neg) a.rel = negate_rel(a.rel);
            return Body::make_atom(std::move(a));
        }
        case Body::Kind::Not: return to_nnf(b->kids[0], !neg);
        case Body::Kind::And:
        case Body::Kind::Or: {
            bool is_and = (b->kind == Body::Kind::And) != neg;
            std::vector<BodyPtr> kids;
            kids.reserve(b->kids.size());
            for (const auto& k : b->kids) kids.push_back(to_nnf(k, neg));
            return is_and ? Body::make_and(std::move(kids)) : Body::make_or(std::move(kids));
        }
    }
    return b;
}

LinTerm negate_term(const LinTerm& f) {
    LinTerm n = f;
    for (auto& vc : n.vars) vc.coeff = -vc.coeff;
    for (auto& [name, c] : n.free) c = -c;
    n.constant = -n.constant;
    return n;
}

LinTerm minus_one(LinTerm f) {
    if (f.constant == std::numeric_limits<i64>::min())
        throw std::invalid_argument("constant term overflow during normalization");
    f.constant -= 1;
    return f;
}

// The >=-only expansions of each relation, as lists of conjuncts per clause.
std::vector<std::vector<LinTerm>> expand_rel(const LinTerm& f, Rel rel) {
    switch (rel) {
        case Rel::Ge: return {{f}};
        case Rel::Gt: return {{minus_one(f)}};
        case Rel::Le: return {{negate_term(f)}};
        case Rel::Lt: return {{minus_one(negate_term(f))}};
        case Rel::Eq: return {{f, negate_term(f)}};
        case Rel::Ne: return {{minus_one(f)}, {minus_one(negate_term(f))}};
    }
    return {};
}

// Sorted-unique insert of a canonical atom; reports a contradictory clause by
// returning false when the atom's exact complement is already present.
bool clause_add(CoClause& c, const GeAtom& a) {
    GeAtom neg = a.negated();
    if (std::binary_search(c.atoms.begin(), c.atoms.end(), neg)) return false;
    auto it = std::lower_bound(c.atoms.begin(), c.atoms.end(), a);
    if (it == c.atoms.end() || *it != a) c.atoms.insert(it, a);
    return true;
}

void dedup_clauses(std::vector<CoClause>& cs) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

// DNF of an NNF body. Each returned clause is sorted, deduplicated, free of
// complement pairs and of constant atoms.
std::vector<CoClause> dnf_rec(const BodyPtr& b) {
    switch (b->kind) {
        case Body::Kind::Atom: {
            std::vector<CoClause> out;
            for (const auto& conj : expand_rel(b->atom.f, b->atom.rel)) {
                CoClause clause;
                bool dead = false;
                for (const LinTerm& t : conj) {
                    GeAtomOrConst g = canonical_ge(t);
                    if (g.is_const) {
                        if (!g.truth) dead = true;
                    } else if (!clause_add(clause, g.atom)) {
                        dead = true;
                    }
                    if (dead) break;
                }
                if (!dead) out.push_back(std::move(clause));
            }
            dedup_clauses(out);
            return out;
        }
        case Body::Kind::Or: {
            std::vector<CoClause> out;
            for (const auto& k : b->kids) {
                auto part = dnf_rec(k);
                out.insert(out.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
                if (out.size() > kDnfClauseCap)
                    throw ResourceLimit("normal form exceeds clause cap");
            }
            dedup_clauses(out);
            return out;
        }
        case Body::Kind::And: {
            std::vector<CoClause> acc{CoClause{}};
            for (const auto& k : b->kids) {
                auto part = dnf_rec(k);
                std::vector<CoClause> next;
                for (const auto& lhs : acc) {
                    for (const auto& rhs : part) {
                        CoClause merged = lhs;
                        bool dead = false;
                        for (const auto& a : rhs.atoms) {
                            if (!clause_add(merged, a)) {
                                dead = true;
                                break;
                            }
                        }
                        if (!dead) next.push_back(std::move(merged));
                        if (next.size() > kDnfClauseCap)
                            throw ResourceLimit("normal form exceeds clause cap");
                    }
                }
                dedup_clauses(next);
                acc = std::move(next);
            }
            return acc;
        }
        case Body::Kind::Not:
            throw std::logic_error("negation survived NNF");
    }
    return {};
}

}  // namespace

Dnf to_dnf(const BodyPtr& body) {
    auto clauses = dnf_rec(to_nnf(body, false));
    // A clause with no atoms is a tautology: collapse to the canonical TRUE.
    for (const auto& c : clauses)
        if (c.atoms.empty()) return Dnf{{CoClause{}}};
    return Dnf{std::move(clauses)};
}

std::size_t inequality_dimension_upper(const Formula& f) {
    std::set<GeAtom> reps;
    auto walk = [&](auto&& self, const BodyPtr& b) -> void {
        if (b->kind == Body::Kind::Atom) {
            for (const auto& conj : expand_rel(b->atom.f, b->atom.rel)) {
                for (const LinTerm& t : conj) {
                    GeAtomOrConst g = canonical_ge(t);
                    if (g.is_const) continue;
                    reps.insert(std::min(g.atom, g.atom.negated()));
                }
            }
            return;
        }
        for (const auto& k : b->kids) self(self, k);
    };
    walk(walk, to_nnf(f.body, false));
    return reps.size();
}

}  // namespace liaset
