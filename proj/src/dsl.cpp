#include "sft/dsl.hpp"

#include <cctype>
#include <sstream>

namespace sft {

namespace {

struct Token {
    enum Kind { Word, Int, Punct, End } kind = End;
    std::string text;
    int line = 1, col = 1;
    long long value = 0; // for Int
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text = "end of input";
            return;
        }
        char c = src_[pos_];
        if (c == '{' || c == '}' || c == '(' || c == ')' || c == ',' || c == '=' || c == ';') {
            tok_.kind = Token::Punct;
            tok_.text = std::string(1, c);
            step();
            return;
        }
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c)) ||
            std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            if (c == '-') {
                word.push_back(c);
                step();
            }
            while (pos_ < src_.size()) {
                char d = src_[pos_];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
                    word.push_back(d);
                    step();
                } else {
                    break;
                }
            }
            if (word.empty() || word == "-")
                throw ParseError("stray '-'", tok_.line, tok_.col, 1);
            bool numeric = true;
            for (std::size_t i = word[0] == '-' ? 1 : 0; i < word.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(word[i]))) numeric = false;
            if (word[0] == '-' && word.size() == 1) numeric = false;
            if (numeric && (word[0] == '-' || std::isdigit(static_cast<unsigned char>(word[0])))) {
                tok_.kind = Token::Int;
                tok_.value = std::stoll(word);
            } else {
                if (word[0] == '-')
                    throw ParseError("malformed number '" + word + "'", tok_.line, tok_.col,
                                     static_cast<int>(word.size()));
                tok_.kind = Token::Word;
            }
            tok_.text = word;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_, 1);
    }

    void step() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

bool is_reserved(const std::string& w) {
    return w == "sft" || w == "dim" || w == "alphabet" || w == "forbid";
}

[[noreturn]] void fail(const Token& t, const std::string& expected) {
    throw ParseError("expected " + expected + ", found '" + t.text + "'", t.line, t.col,
                     static_cast<int>(t.text.size()));
}

void expect_punct(Lexer& lex, char c) {
    auto t = lex.take();
    if (t.kind != Token::Punct || t.text[0] != c) fail(t, std::string("'") + c + "'");
}

void expect_keyword(Lexer& lex, const std::string& kw) {
    auto t = lex.take();
    if (t.kind != Token::Word || t.text != kw) fail(t, "'" + kw + "'");
}

void skip_optional_semicolon(Lexer& lex) {
    if (lex.peek().kind == Token::Punct && lex.peek().text == ";") lex.take();
}

int expect_int(Lexer& lex, const std::string& what, long long lo, long long hi) {
    auto t = lex.take();
    if (t.kind != Token::Int) fail(t, what);
    if (t.value < lo || t.value > hi)
        throw ParseError(what + " " + t.text + " out of range", t.line, t.col,
                         static_cast<int>(t.text.size()));
    return static_cast<int>(t.value);
}

} // namespace

SpecDocument parse_spec(std::string_view source) {
    Lexer lex(source);
    expect_keyword(lex, "sft");
    expect_punct(lex, '{');

    expect_keyword(lex, "dim");
    int dim = expect_int(lex, "dimension", 1, 16);
    skip_optional_semicolon(lex);

    expect_keyword(lex, "alphabet");
    std::vector<std::string> symbols;
    // symbols are words or plain nonnegative numbers; reserved words end the list
    for (;;) {
        const auto& t = lex.peek();
        bool word = t.kind == Token::Word && !is_reserved(t.text);
        bool num = t.kind == Token::Int && t.text[0] != '-';
        if (!word && !num) break;
        for (const auto& prev : symbols)
            if (prev == t.text)
                throw ParseError("duplicate symbol '" + t.text + "'", t.line, t.col,
                                 static_cast<int>(t.text.size()));
        symbols.push_back(lex.take().text);
    }
    if (symbols.empty()) fail(lex.peek(), "at least one alphabet symbol");
    skip_optional_semicolon(lex);

    Alphabet alphabet(symbols);

    std::vector<FinitePattern> patterns;
    std::vector<SourceSpan> spans;
    while (lex.peek().kind == Token::Word && lex.peek().text == "forbid") {
        auto kw = lex.take();
        expect_punct(lex, '{');
        std::vector<std::pair<Coord, Symbol>> cells;
        while (lex.peek().kind == Token::Punct && lex.peek().text == "(") {
            lex.take();
            Coord coord;
            coord.push_back(expect_int(lex, "coordinate", -1000000, 1000000));
            while (lex.peek().kind == Token::Punct && lex.peek().text == ",") {
                lex.take();
                coord.push_back(expect_int(lex, "coordinate", -1000000, 1000000));
            }
            expect_punct(lex, ')');
            if (static_cast<int>(coord.size()) != dim) {
                throw ParseError("coordinate has " + std::to_string(coord.size()) +
                                     " components in a dim " + std::to_string(dim) + " spec",
                                 kw.line, kw.col, static_cast<int>(kw.text.size()));
            }
            expect_punct(lex, '=');
            auto st = lex.take();
            if (st.kind != Token::Word && st.kind != Token::Int) fail(st, "a symbol");
            auto idx = alphabet.index_of(st.text);
            if (!idx)
                throw ParseError("unknown symbol '" + st.text + "'", st.line, st.col,
                                 static_cast<int>(st.text.size()));
            for (const auto& [c, s] : cells) {
                if (c == coord)
                    throw ParseError("cell assigned twice in one forbid block", st.line, st.col,
                                     static_cast<int>(st.text.size()));
            }
            cells.emplace_back(std::move(coord), *idx);
        }
        auto close = lex.take();
        if (close.kind != Token::Punct || close.text != "}") fail(close, "a cell or '}'");
        if (cells.empty())
            throw ParseError("forbid block has no cells", kw.line, kw.col,
                             static_cast<int>(kw.text.size()));
        patterns.push_back(make_pattern(dim, std::move(cells)));
        SourceSpan span;
        span.line = kw.line;
        span.col = kw.col;
        span.length = close.col - kw.col + 1; // best effort; spans one line at least
        spans.push_back(span);
        skip_optional_semicolon(lex);
    }

    expect_punct(lex, '}');
    auto tail = lex.take();
    if (tail.kind != Token::End) fail(tail, "end of input");

    SpecDocument doc;
    doc.source = std::string(source);
    doc.spec = make_spec(std::move(alphabet), dim, std::move(patterns));
    doc.forbid_spans = std::move(spans);
    return doc;
}

std::string print_spec(const SftSpec& spec) {
    std::ostringstream out;
    out << "sft {\n";
    out << "  dim " << spec.dim << ";\n";
    out << "  alphabet";
    for (const auto& s : spec.alphabet.symbols()) out << ' ' << s;
    out << ";\n";
    for (const auto& p : spec.forbidden) {
        out << "  forbid {";
        for (const auto& [c, s] : p.cells) {
            out << " (";
            for (std::size_t a = 0; a < c.size(); ++a) {
                if (a) out << ',';
                out << c[a];
            }
            out << ")=" << spec.alphabet.name(s);
        }
        out << " }\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace sft
