#include "mlp/parser.hpp"

#include "mlp/error.hpp"

#include <cctype>
#include <optional>

namespace mlp {

namespace {

enum class Tok { ident, variable, number, lparen, rparen, lbrace, rbrace, comma, dot, colon, if_, dash, newline, end };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        for (;;) {
            if (pos_ >= text_.size()) return {Tok::end, "", line_, col_};
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            break;
        }
        int line = line_;
        int col = col_;
        char c = text_[pos_];
        auto single = [&](Tok k) {
            advance();
            return Token{k, std::string(1, c), line, col};
        };
        switch (c) {
            case '\n': {
                Token t{Tok::newline, "\\n", line, col};
                advance();
                return t;
            }
            case '(': return single(Tok::lparen);
            case ')': return single(Tok::rparen);
            case '{': return single(Tok::lbrace);
            case '}': return single(Tok::rbrace);
            case ',': return single(Tok::comma);
            case '.': return single(Tok::dot);
            case '-': return single(Tok::dash);
            case ':':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                    advance();
                    advance();
                    return {Tok::if_, ":-", line, col};
                }
                return single(Tok::colon);
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                advance();
            }
            bool var = std::isupper(static_cast<unsigned char>(s[0])) || s[0] == '_';
            return {var ? Tok::variable : Tok::ident, std::move(s), line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                s += text_[pos_];
                advance();
            }
            return {Tok::number, std::move(s), line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const char* describe(Tok k) {
    switch (k) {
        case Tok::ident: return "identifier";
        case Tok::variable: return "variable";
        case Tok::number: return "number";
        case Tok::lparen: return "'('";
        case Tok::rparen: return "')'";
        case Tok::lbrace: return "'{'";
        case Tok::rbrace: return "'}'";
        case Tok::comma: return "','";
        case Tok::dot: return "'.'";
        case Tok::colon: return "':'";
        case Tok::if_: return "':-'";
        case Tok::dash: return "'-'";
        case Tok::newline: return "end of line";
        case Tok::end: return "end of input";
    }
    return "token";
}

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts) : lex_(text), opts_(opts) { shift(); }

    ModuleSource run() {
        ModuleSource src;
        skip_newlines();
        expect_keyword("module");
        src.name = expect(Tok::ident).text;
        end_of_line();

        bool seen[3] = {false, false, false};
        std::vector<Atom>* lists[3] = {&src.input, &src.output, &src.hidden};
        const char* names[3] = {"input", "output", "hidden"};
        for (;;) {
            skip_newlines();
            if (cur_.kind == Tok::end) return src;
            if (cur_.kind != Tok::ident) error("expected a section header");
            if (cur_.text == "rules") {
                shift();
                expect(Tok::colon);
                parse_rules(src);
                return src;
            }
            int idx = -1;
            for (int i = 0; i < 3; ++i)
                if (cur_.text == names[i]) idx = i;
            if (idx < 0) error("unknown section '" + cur_.text + "'");
            if (seen[idx]) error(std::string("duplicate section '") + names[idx] + "'");
            seen[idx] = true;
            shift();
            expect(Tok::colon);
            parse_declaration(src, *lists[idx], names[idx]);
        }
    }

private:
    void shift() { cur_ = lex_.next(); }

    [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, cur_.line, cur_.column); }

    Token expect(Tok k) {
        if (cur_.kind != k) error(std::string("expected ") + describe(k) + ", found " + describe(cur_.kind));
        Token t = cur_;
        shift();
        return t;
    }

    void expect_keyword(const char* kw) {
        if (cur_.kind != Tok::ident || cur_.text != kw) error(std::string("expected '") + kw + "'");
        shift();
    }

    void skip_newlines() {
        while (cur_.kind == Tok::newline) shift();
    }

    void end_of_line() {
        if (cur_.kind == Tok::end) return;
        expect(Tok::newline);
    }

    void parse_declaration(ModuleSource& src, std::vector<Atom>& into, const char* section) {
        if (cur_.kind == Tok::dash) {
            shift();
            end_of_line();
            return;
        }
        for (;;) {
            Token at = cur_;
            AtomPattern p = parse_atom();
            if (!p.ground()) throw ParseError(std::string(section) + " atoms must be ground", at.line, at.column);
            Atom a = instantiate(p);
            for (const auto* other : {&src.input, &src.output, &src.hidden}) {
                if (other == &into) continue;
                for (const auto& b : *other)
                    if (b == a)
                        throw ParseError("atom " + a.str() + " is declared in two interface sections", at.line,
                                         at.column);
            }
            bool dup = false;
            for (const auto& b : into) dup = dup || b == a;
            if (!dup) into.push_back(std::move(a));
            if (cur_.kind != Tok::comma) break;
            shift();
            skip_newlines();
        }
        end_of_line();
    }

    static Atom instantiate(const AtomPattern& p) {
        std::vector<std::string> args;
        for (const auto& t : p.args) args.push_back(t.text);
        return Atom::make(p.predicate, args);
    }

    AtomPattern parse_atom() {
        if (cur_.kind != Tok::ident) error(std::string("expected an atom, found ") + describe(cur_.kind));
        if (cur_.text == "not") error("'not' cannot be used as a predicate");
        if (!opts_.allow_reserved && cur_.text.find("__") != std::string::npos)
            error("predicate '" + cur_.text + "' uses the reserved '__' infix");
        AtomPattern p;
        p.predicate = cur_.text;
        shift();
        if (cur_.kind != Tok::lparen) return p;
        shift();
        for (;;) {
            switch (cur_.kind) {
                case Tok::ident:
                case Tok::number: p.args.push_back({cur_.text, false}); break;
                case Tok::variable: p.args.push_back({cur_.text, true}); break;
                default: error(std::string("expected a term, found ") + describe(cur_.kind));
            }
            shift();
            if (cur_.kind == Tok::comma) {
                shift();
                continue;
            }
            expect(Tok::rparen);
            return p;
        }
    }

    void skip_layout() { skip_newlines(); }

    void parse_rules(ModuleSource& src) {
        for (;;) {
            skip_layout();
            if (cur_.kind == Tok::end) return;
            src.rules.push_back(parse_rule());
        }
    }

    RuleSource parse_rule() {
        RuleSource r;
        r.line = cur_.line;
        if (cur_.kind == Tok::lbrace) {
            r.kind = RuleKind::choice;
            shift();
            skip_layout();
            if (cur_.kind == Tok::rbrace) error("choice rule needs at least one head atom");
            for (;;) {
                r.head.push_back(parse_atom());
                skip_layout();
                if (cur_.kind == Tok::comma) {
                    shift();
                    skip_layout();
                    continue;
                }
                expect(Tok::rbrace);
                break;
            }
        } else if (cur_.kind == Tok::if_) {
            r.kind = RuleKind::constraint;
        } else {
            r.kind = RuleKind::normal;
            r.head.push_back(parse_atom());
        }
        skip_layout();
        if (cur_.kind == Tok::if_) {
            shift();
            skip_layout();
            if (cur_.kind != Tok::dot) parse_body(r);
        } else if (r.kind == RuleKind::constraint) {
            error("expected ':-'");
        }
        skip_layout();
        expect(Tok::dot);
        return r;
    }

    void parse_body(RuleSource& r) {
        for (;;) {
            bool negative = false;
            if (cur_.kind == Tok::ident && cur_.text == "not") {
                negative = true;
                shift();
            }
            (negative ? r.body_neg : r.body_pos).push_back(parse_atom());
            skip_layout();
            if (cur_.kind != Tok::comma) return;
            shift();
            skip_layout();
        }
    }

    Lexer lex_;
    ParseOptions opts_;
    Token cur_{Tok::end, "", 1, 1};
};

}  // namespace

bool AtomPattern::ground() const {
    for (const auto& t : args)
        if (t.variable) return false;
    return true;
}

std::vector<std::string> RuleSource::variables() const {
    std::vector<std::string> out;
    auto visit = [&](const std::vector<AtomPattern>& ps) {
        for (const auto& p : ps)
            for (const auto& t : p.args) {
                if (!t.variable) continue;
                bool seen = false;
                for (const auto& v : out) seen = seen || v == t.text;
                if (!seen) out.push_back(t.text);
            }
    };
    visit(head);
    visit(body_pos);
    visit(body_neg);
    return out;
}

ModuleSource parse_module(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).run();
}

}  // namespace mlp
