#include "pcpctl/formula.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace pcpctl {

namespace {

enum class Tok { lparen, rparen, rbracket, bang, amp, bar, next, until, truth, falsity, atom, prob, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;                 // atom name
    Comparison cmp = Comparison::equal;  // prob
    Rational bound;                   // prob
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }
bool group_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == ',' || c == '\''; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ >= text_.size()) break;
            out.push_back(one());
        }
        out.push_back(Token{Tok::end, text_.size(), {}, {}, {}});
        return out;
    }

private:
    // Length of a "(...)" group at `from` with only group characters and at
    // least one comma, or 0.
    std::size_t group_length(std::size_t from) const {
        if (from >= text_.size() || text_[from] != '(') return 0;
        std::size_t i = from + 1;
        bool comma = false;
        while (i < text_.size() && group_char(text_[i])) {
            comma = comma || text_[i] == ',';
            ++i;
        }
        if (i >= text_.size() || text_[i] != ')' || i == from + 1 || !comma) return 0;
        return i - from + 1;
    }

    Token one() {
        const std::size_t start = pos_;
        const char c = text_[pos_];
        auto simple = [&](Tok k) {
            ++pos_;
            return Token{k, start, {}, {}, {}};
        };
        switch (c) {
            case ')': return simple(Tok::rparen);
            case ']': return simple(Tok::rbracket);
            case '!': return simple(Tok::bang);
            case '&': return simple(Tok::amp);
            case '|': return simple(Tok::bar);
            case '(':
                if (auto len = group_length(pos_)) {
                    pos_ += len;
                    return Token{Tok::atom, start, std::string(text_.substr(start, len)), {}, {}};
                }
                return simple(Tok::lparen);
            default: break;
        }
        if (!ident_start(c)) throw ParseError(std::string("unexpected character '") + c + "'", pos_);

        while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
        std::string word(text_.substr(start, pos_ - start));
        if (word == "P" && pos_ < text_.size() && text_[pos_] == '{') return quantifier(start);
        if (word == "X") return Token{Tok::next, start, {}, {}, {}};
        if (word == "U") return Token{Tok::until, start, {}, {}, {}};
        if (word == "true") return Token{Tok::truth, start, {}, {}, {}};
        if (word == "false") return Token{Tok::falsity, start, {}, {}, {}};
        if (auto len = group_length(pos_)) {
            word += text_.substr(pos_, len);
            pos_ += len;
        }
        return Token{Tok::atom, start, std::move(word), {}, {}};
    }

    // Having read "P", parse "{cmp rational}[" up to and including '['.
    Token quantifier(std::size_t start) {
        ++pos_;  // '{'
        Token t{Tok::prob, start, {}, {}, {}};
        if (text_.substr(pos_, 2) == ">=") {
            t.cmp = Comparison::greater_equal;
            pos_ += 2;
        } else if (pos_ < text_.size() && text_[pos_] == '>') {
            t.cmp = Comparison::greater;
            ++pos_;
        } else if (pos_ < text_.size() && text_[pos_] == '=') {
            t.cmp = Comparison::equal;
            ++pos_;
        } else {
            throw ParseError("expected '>', '=' or '>=' in probability bound", pos_);
        }
        auto close = text_.find('}', pos_);
        if (close == std::string_view::npos) throw ParseError("unterminated probability bound", pos_);
        try {
            t.bound = parse_rational(text_.substr(pos_, close - pos_));
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed probability bound", pos_);
        }
        if (t.bound < 0 || t.bound > 1) throw ParseError("probability bound outside [0,1]", pos_);
        pos_ = close + 1;
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ >= text_.size() || text_[pos_] != '[') throw ParseError("expected '[' after probability bound", pos_);
        ++pos_;
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Either a state formula or a (PCTL*-shaped) path formula.
struct Expr {
    StatePtr state;
    PathPtr path;
};

PathPtr as_path(const Expr& e) { return e.state ? lift(e.state) : e.path; }

PathPtr make_path(PathFormula::Kind kind, PathPtr l, PathPtr r = nullptr) {
    PathFormula f;
    f.kind = kind;
    f.left = std::move(l);
    f.right = std::move(r);
    return std::make_shared<const PathFormula>(std::move(f));
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Expr parse_all() {
        Expr e = parse_or();
        if (peek().kind != Tok::end) throw ParseError("unexpected trailing input", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& take() { return tokens_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    Expr parse_or() {
        std::vector<Expr> items{parse_and()};
        while (accept(Tok::bar)) items.push_back(parse_and());
        if (items.size() == 1) return items.front();
        bool all_state = true;
        for (const auto& e : items) all_state = all_state && e.state;
        if (all_state) {
            StatePtr acc = negation(items[0].state);
            for (std::size_t i = 1; i < items.size(); ++i) acc = conjunction(acc, negation(items[i].state));
            return {negation(acc), nullptr};
        }
        PathPtr acc = make_path(PathFormula::Kind::negation, as_path(items[0]));
        for (std::size_t i = 1; i < items.size(); ++i) {
            acc = make_path(PathFormula::Kind::conjunction, acc,
                            make_path(PathFormula::Kind::negation, as_path(items[i])));
        }
        return {nullptr, make_path(PathFormula::Kind::negation, acc)};
    }

    Expr parse_and() {
        Expr acc = parse_until();
        while (accept(Tok::amp)) {
            Expr rhs = parse_until();
            if (acc.state && rhs.state) {
                acc = {conjunction(acc.state, rhs.state), nullptr};
            } else {
                acc = {nullptr, make_path(PathFormula::Kind::conjunction, as_path(acc), as_path(rhs))};
            }
        }
        return acc;
    }

    Expr parse_until() {
        Expr lhs = parse_unary();
        if (!accept(Tok::until)) return lhs;
        Expr rhs = parse_until();
        if (lhs.state && rhs.state) return {nullptr, until(lhs.state, rhs.state)};
        return {nullptr, make_path(PathFormula::Kind::until, as_path(lhs), as_path(rhs))};
    }

    Expr parse_unary() {
        if (accept(Tok::bang)) {
            Expr inner = parse_unary();
            if (inner.state) return {negation(inner.state), nullptr};
            return {nullptr, make_path(PathFormula::Kind::negation, inner.path)};
        }
        if (accept(Tok::next)) {
            Expr inner = parse_unary();
            if (inner.state) return {nullptr, next(inner.state)};
            return {nullptr, make_path(PathFormula::Kind::next, inner.path)};
        }
        return parse_primary();
    }

    Expr parse_primary() {
        const Token& t = take();
        switch (t.kind) {
            case Tok::truth: return {truth(), nullptr};
            case Tok::falsity: return {falsity(), nullptr};
            case Tok::atom: return {atom(t.text), nullptr};
            case Tok::lparen: {
                Expr e = parse_or();
                expect(Tok::rparen, "')'");
                return e;
            }
            case Tok::prob: {
                Comparison cmp = t.cmp;
                Rational bound = t.bound;
                Expr body = parse_or();
                expect(Tok::rbracket, "']'");
                return {probability(cmp, bound, as_path(body)), nullptr};
            }
            case Tok::end: throw ParseError("unexpected end of formula", t.pos);
            default: throw ParseError("unexpected token", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Expr parse_expr(std::string_view text) { return Parser(Lexer(text).run()).parse_all(); }

}  // namespace

StatePtr parse_state_formula(std::string_view text) {
    Expr e = parse_expr(text);
    if (!e.state) throw ParseError("path formula is not a state formula", 0);
    return e.state;
}

PathPtr parse_path_formula(std::string_view text) { return as_path(parse_expr(text)); }

}  // namespace pcpctl
