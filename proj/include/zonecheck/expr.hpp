// State predicates and constraint expressions: boolean combinations of
// location atoms and (possibly diagonal) clock constraints. One shared
// parser serves model guards/invariants and property predicates; the
// tokenizer also understands the unicode aliases for the connectives.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zonecheck {

enum class CmpOp { Lt, Le, Eq, Ge, Gt };

inline std::string cmp_to_string(CmpOp op) {
    switch (op) {
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Eq: return "=";
        case CmpOp::Ge: return ">=";
        case CmpOp::Gt: return ">";
    }
    return "?";
}

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { True, False, Loc, Clock, Not, And, Or };

    Kind kind = Kind::True;
    std::string name;      // Loc: location; Clock: left-hand clock
    std::string rhs_clock; // Clock: subtrahend clock of a diagonal atom ("" if none)
    CmpOp op = CmpOp::Le;
    std::int64_t constant = 0;
    ExprPtr a, b;

    static ExprPtr make_true() { return std::make_shared<Expr>(Expr{Kind::True}); }
    static ExprPtr make_false() { return std::make_shared<Expr>(Expr{Kind::False}); }
    static ExprPtr loc(std::string n) {
        Expr e{Kind::Loc};
        e.name = std::move(n);
        return std::make_shared<Expr>(std::move(e));
    }
    static ExprPtr clock(std::string lhs, std::string rhs, CmpOp op, std::int64_t c) {
        Expr e{Kind::Clock};
        e.name = std::move(lhs);
        e.rhs_clock = std::move(rhs);
        e.op = op;
        e.constant = c;
        return std::make_shared<Expr>(std::move(e));
    }
    static ExprPtr negate(ExprPtr x) {
        Expr e{Kind::Not};
        e.a = std::move(x);
        return std::make_shared<Expr>(std::move(e));
    }
    static ExprPtr conj(ExprPtr x, ExprPtr y) {
        Expr e{Kind::And};
        e.a = std::move(x);
        e.b = std::move(y);
        return std::make_shared<Expr>(std::move(e));
    }
    static ExprPtr disj(ExprPtr x, ExprPtr y) {
        Expr e{Kind::Or};
        e.a = std::move(x);
        e.b = std::move(y);
        return std::make_shared<Expr>(std::move(e));
    }
};

inline void visit_expr(const ExprPtr& e, const std::function<void(const Expr&)>& fn) {
    if (!e) return;
    fn(*e);
    visit_expr(e->a, fn);
    visit_expr(e->b, fn);
}

inline std::string render_expr(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::True: return "true";
        case Expr::Kind::False: return "false";
        case Expr::Kind::Loc: return e->name;
        case Expr::Kind::Clock: {
            std::string lhs = e->name;
            if (!e->rhs_clock.empty()) lhs += " - " + e->rhs_clock;
            return lhs + " " + cmp_to_string(e->op) + " " + std::to_string(e->constant);
        }
        case Expr::Kind::Not: return "!(" + render_expr(e->a) + ")";
        case Expr::Kind::And: return "(" + render_expr(e->a) + " & " + render_expr(e->b) + ")";
        case Expr::Kind::Or: return "(" + render_expr(e->a) + " | " + render_expr(e->b) + ")";
    }
    return "?";
}

// True iff every comparison in the expression is non-strict (digital engines
// require closed constraints).
inline bool expr_is_closed(const ExprPtr& e) {
    bool closed = true;
    visit_expr(e, [&](const Expr& x) {
        if (x.kind == Expr::Kind::Clock && (x.op == CmpOp::Lt || x.op == CmpOp::Gt))
            closed = false;
    });
    return closed;
}

inline bool expr_is_diagonal_free(const ExprPtr& e) {
    bool df = true;
    visit_expr(e, [&](const Expr& x) {
        if (x.kind == Expr::Kind::Clock && !x.rhs_clock.empty()) df = false;
    });
    return df;
}

// ── Tokenizer / parser ──────────────────────────────────────────────────────

struct ExprError {
    std::string message;
    std::size_t offset = 0;
};

namespace detail {

enum class Tok { End, Ident, Number, LParen, RParen, And, Or, Not, Minus, Lt, Le, Eq, Ge, Gt, Until, Dot, Slash };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.offset = pos_;
        if (pos_ >= text_.size()) return t;
        // unicode aliases for the logical connectives and comparators
        if (take("∧")) { t.kind = Tok::And; return t; }     // wedge
        if (take("∨")) { t.kind = Tok::Or; return t; }      // vee
        if (take("¬")) { t.kind = Tok::Not; return t; }     // not sign
        if (take("≤")) { t.kind = Tok::Le; return t; }      // <=
        if (take("≥")) { t.kind = Tok::Ge; return t; }      // >=
        if (take("◇")) { t.kind = Tok::Ident; t.text = "F"; return t; } // lozenge
        char c = text_[pos_];
        if (c == '(') { ++pos_; t.kind = Tok::LParen; return t; }
        if (c == ')') { ++pos_; t.kind = Tok::RParen; return t; }
        if (c == '&') { ++pos_; t.kind = Tok::And; return t; }
        if (c == '|') { ++pos_; t.kind = Tok::Or; return t; }
        if (c == '!') { ++pos_; t.kind = Tok::Not; return t; }
        if (c == '-') { ++pos_; t.kind = Tok::Minus; return t; }
        if (c == '.') { ++pos_; t.kind = Tok::Dot; return t; }
        if (c == '/') { ++pos_; t.kind = Tok::Slash; return t; }
        if (c == '<') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '=') { ++pos_; t.kind = Tok::Le; }
            else t.kind = Tok::Lt;
            return t;
        }
        if (c == '>') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '=') { ++pos_; t.kind = Tok::Ge; }
            else t.kind = Tok::Gt;
            return t;
        }
        if (c == '=') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '=') ++pos_;
            t.kind = Tok::Eq;
            return t;
        }
        if (c >= '0' && c <= '9') {
            t.kind = Tok::Number;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
                t.text += text_[pos_++];
            return t;
        }
        if (is_ident_start(c)) {
            t.kind = Tok::Ident;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                t.text += text_[pos_++];
            return t;
        }
        t.kind = Tok::End;
        t.text = std::string(1, c);
        throw ExprError{"unexpected character '" + t.text + "'", pos_};
    }

private:
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    bool take(std::string_view utf8) {
        if (text_.substr(pos_, utf8.size()) == utf8) {
            pos_ += utf8.size();
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : lex_(text) { advance(); }

    // Parses a full expression and requires end of input.
    ExprPtr parse_complete() {
        ExprPtr e = parse_or();
        if (cur_.kind != Tok::End)
            throw ExprError{"unexpected trailing input", cur_.offset};
        return e;
    }

    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (cur_.kind == Tok::Or) {
            advance();
            e = Expr::disj(e, parse_and());
        }
        return e;
    }

    const Token& current() const { return cur_; }
    void advance() { cur_ = lex_.next(); }

    std::int64_t parse_integer() {
        if (cur_.kind != Tok::Number)
            throw ExprError{"expected an integer constant", cur_.offset};
        std::int64_t v = std::stoll(cur_.text);
        advance();
        return v;
    }

private:
    ExprPtr parse_and() {
        ExprPtr e = parse_unary();
        while (cur_.kind == Tok::And) {
            advance();
            e = Expr::conj(e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (cur_.kind == Tok::Not) {
            advance();
            return Expr::negate(parse_unary());
        }
        return parse_primary();
    }

    static std::optional<CmpOp> as_cmp(Tok t) {
        switch (t) {
            case Tok::Lt: return CmpOp::Lt;
            case Tok::Le: return CmpOp::Le;
            case Tok::Eq: return CmpOp::Eq;
            case Tok::Ge: return CmpOp::Ge;
            case Tok::Gt: return CmpOp::Gt;
            default: return std::nullopt;
        }
    }

    static CmpOp flipped(CmpOp op) {
        switch (op) {
            case CmpOp::Lt: return CmpOp::Gt;
            case CmpOp::Le: return CmpOp::Ge;
            case CmpOp::Ge: return CmpOp::Le;
            case CmpOp::Gt: return CmpOp::Lt;
            case CmpOp::Eq: return CmpOp::Eq;
        }
        return op;
    }

    ExprPtr parse_primary() {
        if (cur_.kind == Tok::LParen) {
            advance();
            ExprPtr e = parse_or();
            if (cur_.kind != Tok::RParen)
                throw ExprError{"expected ')'", cur_.offset};
            advance();
            return e;
        }
        if (cur_.kind == Tok::Number) {
            // reversed atom: INT cmp clock [- clock]
            std::int64_t c = parse_integer();
            auto cmp = as_cmp(cur_.kind);
            if (!cmp) throw ExprError{"expected a comparator after constant", cur_.offset};
            advance();
            auto [lhs, rhs] = parse_clock_sides();
            return Expr::clock(lhs, rhs, flipped(*cmp), c);
        }
        if (cur_.kind == Tok::Ident) {
            std::string first = cur_.text;
            if (first == "true") { advance(); return Expr::make_true(); }
            if (first == "false") { advance(); return Expr::make_false(); }
            advance();
            std::string rhs;
            if (cur_.kind == Tok::Minus) {
                advance();
                if (cur_.kind != Tok::Ident)
                    throw ExprError{"expected a clock after '-'", cur_.offset};
                rhs = cur_.text;
                advance();
            }
            auto cmp = as_cmp(cur_.kind);
            if (!cmp) {
                if (!rhs.empty())
                    throw ExprError{"expected a comparator after clock difference", cur_.offset};
                return Expr::loc(first); // bare identifier: location atom
            }
            advance();
            std::int64_t c = parse_integer();
            return Expr::clock(first, rhs, *cmp, c);
        }
        throw ExprError{"expected an expression", cur_.offset};
    }

    std::pair<std::string, std::string> parse_clock_sides() {
        if (cur_.kind != Tok::Ident)
            throw ExprError{"expected a clock name", cur_.offset};
        std::string lhs = cur_.text;
        advance();
        std::string rhs;
        if (cur_.kind == Tok::Minus) {
            advance();
            if (cur_.kind != Tok::Ident)
                throw ExprError{"expected a clock after '-'", cur_.offset};
            rhs = cur_.text;
            advance();
        }
        return {lhs, rhs};
    }

    Lexer lex_;
    Token cur_;
};

} // namespace detail

// Throws ExprError on malformed input.
inline ExprPtr parse_expr(std::string_view text) {
    detail::ExprParser p(text);
    return p.parse_complete();
}

} // namespace zonecheck
