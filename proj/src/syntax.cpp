#include "cbneed/syntax.hpp"

#include <cctype>
#include <sstream>

namespace cbneed {

namespace {

struct Lexer {
    enum class Tok { Lambda, Dot, LParen, RParen, LBracket, RBracket, Arrow, Ident, End };

    explicit Lexer(const std::string& text) : src(text) { advance(); }

    const std::string& src;
    std::size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    std::size_t tok_pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "parse error at position " << tok_pos << ": " << msg;
        throw ParseError(os.str(), tok_pos);
    }

    static bool ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        tok_pos = pos;
        if (pos >= src.size()) { tok = Tok::End; return; }
        char c = src[pos];
        if (c == '\\') { tok = Tok::Lambda; ++pos; return; }
        // UTF-8 lambda (0xCE 0xBB)
        if (static_cast<unsigned char>(c) == 0xCE && pos + 1 < src.size() &&
            static_cast<unsigned char>(src[pos + 1]) == 0xBB) {
            tok = Tok::Lambda; pos += 2; return;
        }
        if (c == '.') { tok = Tok::Dot; ++pos; return; }
        if (c == '(') { tok = Tok::LParen; ++pos; return; }
        if (c == ')') { tok = Tok::RParen; ++pos; return; }
        if (c == '[') { tok = Tok::LBracket; ++pos; return; }
        if (c == ']') { tok = Tok::RBracket; ++pos; return; }
        if (c == '<' && pos + 1 < src.size() && src[pos + 1] == '-') {
            tok = Tok::Arrow; pos += 2; return;
        }
        if (ident_start(c)) {
            std::size_t start = pos;
            while (pos < src.size() && ident_char(src[pos])) ++pos;
            tok = Tok::Ident;
            ident = src.substr(start, pos - start);
            return;
        }
        tok_pos = pos;
        fail(std::string("unexpected character '") + c + "'");
    }

    void expect(Tok t, const char* what) {
        if (tok != t) fail(std::string("expected ") + what);
        advance();
    }
};

struct Parser {
    explicit Parser(const std::string& text) : lx(text) {}
    Lexer lx;

    TermPtr term() {
        if (lx.tok == Lexer::Tok::Lambda) return abstraction();
        return application();
    }

    TermPtr abstraction() {
        lx.advance();  // lambda
        if (lx.tok != Lexer::Tok::Ident) lx.fail("expected binder after lambda");
        std::string binder = lx.ident;
        lx.advance();
        lx.expect(Lexer::Tok::Dot, "'.' after binder");
        return mk_abs(std::move(binder), term());
    }

    TermPtr application() {
        TermPtr acc = atom_required();
        while (true) {
            if (lx.tok == Lexer::Tok::Lambda) {
                // trailing abstraction: body extends maximally right
                acc = mk_app(std::move(acc), abstraction());
                return acc;
            }
            TermPtr next = atom_optional();
            if (!next) return acc;
            acc = mk_app(std::move(acc), std::move(next));
        }
    }

    TermPtr atom_required() {
        TermPtr a = atom_optional();
        if (!a) lx.fail("expected a term");
        return a;
    }

    TermPtr atom_optional() {
        switch (lx.tok) {
            case Lexer::Tok::Ident: {
                TermPtr v = mk_var(lx.ident);
                lx.advance();
                return v;
            }
            case Lexer::Tok::LParen: {
                lx.advance();
                TermPtr t = term();
                lx.expect(Lexer::Tok::RParen, "')'");
                return t;
            }
            default:
                return nullptr;
        }
    }

    Program program() {
        Program p;
        p.head = term();
        while (lx.tok == Lexer::Tok::LBracket) {
            lx.advance();
            if (lx.tok != Lexer::Tok::Ident) lx.fail("expected binder in ES");
            EnvEntry e;
            e.name = lx.ident;
            lx.advance();
            lx.expect(Lexer::Tok::Arrow, "'<-'");
            e.value = term();
            lx.expect(Lexer::Tok::RBracket, "']'");
            p.env.push_back(std::move(e));
        }
        if (lx.tok != Lexer::Tok::End) lx.fail("trailing input");
        return p;
    }

    void done() {
        if (lx.tok != Lexer::Tok::End) lx.fail("trailing input");
    }
};

void print_term_rec(const TermPtr& t, std::ostream& os, bool parens_app, bool parens_abs) {
    switch (t->kind) {
        case Term::Kind::Var:
            os << t->name;
            break;
        case Term::Kind::Abs:
            if (parens_abs) os << '(';
            os << '\\' << t->name << '.';
            print_term_rec(t->body, os, false, false);
            if (parens_abs) os << ')';
            break;
        case Term::Kind::App:
            if (parens_app) os << '(';
            print_term_rec(t->left, os, false, true);
            os << ' ';
            print_term_rec(t->right, os, true, true);
            if (parens_app) os << ')';
            break;
    }
}

}  // namespace

TermPtr parse_term(const std::string& text) {
    Parser p(text);
    TermPtr t = p.term();
    p.done();
    return t;
}

ParsedProgram parse_program(const std::string& text, NameSupply& supply) {
    Parser parser(text);
    ParsedProgram out;
    out.program = parser.program();
    out.renamed = rename_apart(out.program, supply);
    return out;
}

ParsedProgram parse_program(const std::string& text) {
    NameSupply supply;
    return parse_program(text, supply);
}

std::string print_term(const TermPtr& t) {
    std::ostringstream os;
    print_term_rec(t, os, false, false);
    return os.str();
}

std::string print_program(const Program& p) {
    std::ostringstream os;
    print_term_rec(p.head, os, false, false);
    if (!p.env.empty()) os << ' ';
    for (const auto& e : p.env) {
        os << '[' << e.name << " <- ";
        print_term_rec(e.value, os, false, false);
        os << ']';
    }
    return os.str();
}

}  // namespace cbneed
