#include "uniserial/presentation_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace uniserial {

namespace {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind = End;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(tok_.line) + ", column " +
                         std::to_string(tok_.col) + ": " + msg);
    }
    void expect_symbol(const std::string& sym) {
        if (tok_.kind != Token::Symbol || tok_.text != sym)
            fail("expected '" + sym + "', found '" + tok_.text + "'");
        advance();
    }
    std::string expect_ident() {
        if (tok_.kind != Token::Ident) fail("expected identifier, found '" + tok_.text + "'");
        return take().text;
    }
    bool accept_symbol(const std::string& sym) {
        if (tok_.kind == Token::Symbol && tok_.text == sym) {
            advance();
            return true;
        }
        return false;
    }
    bool accept_ident(const std::string& word) {
        if (tok_.kind == Token::Ident && tok_.text == word) {
            advance();
            return true;
        }
        return false;
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else if (c == '#') {  // comment to end of line
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = Token{Token::End, "<end of input>", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '\''))
                ++pos_;
            tok_ = Token{Token::Ident, s_.substr(start, pos_ - start), line_, col_};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_ = Token{Token::Number, s_.substr(start, pos_ - start), line_, col_};
        } else if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            tok_ = Token{Token::Symbol, "->", line_, col_};
        } else {
            ++pos_;
            tok_ = Token{Token::Symbol, std::string(1, c), line_, col_};
        }
        col_ += static_cast<int>(tok_.text.size());
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// [<rational>*] <arrow>[^<int>] (* <arrow>[^<int>])*  — leftmost arrow
// applied last ("a after b")
AlgebraElement parse_relation_expr(Lexer& lx, const Quiver& quiver, const Field& field) {
    AlgebraElement result(field);
    bool first_term = true;
    while (true) {
        bool neg = false;
        if (lx.accept_symbol("-")) {
            neg = true;
        } else if (lx.accept_symbol("+")) {
            if (first_term) lx.fail("relation cannot start with '+'");
        } else if (!first_term) {
            break;
        }
        first_term = false;

        FieldElement coeff = field.one();
        if (lx.peek().kind == Token::Number) {
            std::string num = lx.take().text;
            if (lx.accept_symbol("/")) {
                if (lx.peek().kind != Token::Number) lx.fail("expected denominator");
                num += "/" + lx.take().text;
            }
            coeff = field.parse(num);
            lx.expect_symbol("*");
        }
        if (neg) coeff = -coeff;

        std::vector<std::pair<std::string, unsigned>> factors;
        while (true) {
            Token t = lx.peek();
            if (t.kind != Token::Ident) lx.fail("expected arrow name, found '" + t.text + "'");
            std::string name = lx.take().text;
            unsigned exp = 1;
            if (lx.accept_symbol("^")) {
                if (lx.peek().kind != Token::Number) lx.fail("expected exponent");
                exp = static_cast<unsigned>(std::stoul(lx.take().text));
                if (exp == 0) lx.fail("zero exponent");
            }
            factors.emplace_back(name, exp);
            if (!lx.accept_symbol("*")) break;
        }

        Path p;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
            int a = quiver.arrow_index(it->first);
            if (a < 0) lx.fail("unknown arrow '" + it->first + "'");
            for (unsigned k = 0; k < it->second; ++k) {
                if (p.source == -1) {
                    p.source = quiver.arrow(a).source;
                } else if (quiver.arrow(a).source != p.target(quiver)) {
                    lx.fail("arrows '" + it->first + "' not composable in relation path");
                }
                p.arrows.push_back(a);
            }
        }
        result.add_term(p, coeff);
    }
    return result;
}

}  // namespace

ParsedPresentation parse_presentation(const std::string& text) {
    Lexer lx(text);
    ParsedPresentation out;
    Presentation& pres = out.presentation;

    if (!lx.accept_ident("field")) lx.fail("expected 'field'");
    if (lx.accept_ident("Q")) {
        pres.field = Field(0);
    } else if (lx.accept_ident("GF")) {
        lx.expect_symbol("(");
        if (lx.peek().kind != Token::Number) lx.fail("expected prime modulus");
        pres.field = Field(std::stoul(lx.take().text));
        lx.expect_symbol(")");
    } else {
        lx.fail("expected 'Q' or 'GF(<prime>)'");
    }

    if (!lx.accept_ident("quiver")) lx.fail("expected 'quiver'");
    lx.expect_symbol("{");
    while (!lx.accept_symbol("}")) {
        if (lx.accept_ident("vertex")) {
            do {
                Token t = lx.peek();
                if (t.kind != Token::Ident && t.kind != Token::Number)
                    lx.fail("expected vertex identifier");
                pres.quiver.add_vertex(lx.take().text);
            } while (!lx.accept_symbol(";"));
        } else if (lx.accept_ident("arrow")) {
            std::string name = lx.expect_ident();
            lx.expect_symbol(":");
            Token s = lx.peek();
            if (s.kind != Token::Ident && s.kind != Token::Number)
                lx.fail("expected source vertex");
            std::string src = lx.take().text;
            lx.expect_symbol("->");
            Token t = lx.peek();
            if (t.kind != Token::Ident && t.kind != Token::Number)
                lx.fail("expected target vertex");
            std::string tgt = lx.take().text;
            lx.expect_symbol(";");
            pres.quiver.add_arrow(name, src, tgt);
        } else {
            lx.fail("expected 'vertex', 'arrow' or '}'");
        }
    }

    if (lx.accept_ident("relations")) {
        lx.expect_symbol("{");
        while (!lx.accept_symbol("}")) {
            AlgebraElement rel = parse_relation_expr(lx, pres.quiver, pres.field);
            lx.expect_symbol(";");
            if (rel.is_zero()) continue;
            // split by (source, target) component; e_j z e_i stays in the ideal
            std::map<std::pair<int, int>, AlgebraElement> components;
            for (const auto& [p, c] : rel.terms()) {
                auto key = std::make_pair(p.source, p.target(pres.quiver));
                auto it = components.find(key);
                if (it == components.end())
                    it = components.emplace(key, AlgebraElement(pres.field)).first;
                it->second.add_term(p, c);
            }
            if (components.size() > 1)
                out.notes.push_back("relation '" + rel.str(pres.quiver) + "' split into " +
                                    std::to_string(components.size()) +
                                    " uniform components");
            for (auto& [key, comp] : components) pres.relations.push_back(std::move(comp));
        }
    }
    if (lx.peek().kind != Token::End) lx.fail("unexpected trailing input");

    pres.validate();
    return out;
}

std::string print_presentation(const Presentation& p) {
    std::ostringstream out;
    if (p.field.is_rationals())
        out << "field Q\n";
    else
        out << "field GF(" << p.field.characteristic() << ")\n";
    out << "quiver {\n  vertex";
    for (size_t v = 0; v < p.quiver.vertex_count(); ++v)
        out << " " << p.quiver.vertex_name(static_cast<int>(v));
    out << " ;\n";
    for (const Arrow& a : p.quiver.arrows())
        out << "  arrow " << a.name << " : " << p.quiver.vertex_name(a.source) << " -> "
            << p.quiver.vertex_name(a.target) << " ;\n";
    out << "}\n";
    out << "relations {\n";
    for (const AlgebraElement& rel : p.relations) out << "  " << rel.str(p.quiver) << " ;\n";
    out << "}\n";
    return out.str();
}

}  // namespace uniserial
