#include "bsys/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "bsys/errors.hpp"

namespace bsys {

namespace {

struct Token {
    enum Kind { ident, integer, plus, minus, star, caret, lparen, rparen, slash, comma, colon, eol };
    Kind kind;
    std::string text;
    SourcePos pos;
};

const char* kind_name(Token::Kind k) {
    switch (k) {
        case Token::ident: return "identifier";
        case Token::integer: return "integer";
        case Token::plus: return "'+'";
        case Token::minus: return "'-'";
        case Token::star: return "'*'";
        case Token::caret: return "'^'";
        case Token::lparen: return "'('";
        case Token::rparen: return "')'";
        case Token::slash: return "'/'";
        case Token::comma: return "','";
        case Token::colon: return "':'";
        case Token::eol: return "end of line";
    }
    return "?";
}

// Tokenized lines (blank and comment-only lines dropped); each line ends with
// an eol token so expression parsers always have a terminator to point at.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 1;
    std::size_t i = 0;
    std::vector<Token> cur;
    int col = 1;
    auto flush = [&]() {
        if (!cur.empty()) {
            cur.push_back({Token::eol, "", {line_no, col}});
            lines.push_back(std::move(cur));
            cur.clear();
        }
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            flush();
            ++line_no;
            col = 1;
            ++i;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            ++i;
            ++col;
            continue;
        }
        SourcePos pos{line_no, col};
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string s;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_')) {
                s += text[i++];
                ++col;
            }
            cur.push_back({Token::ident, std::move(s), pos});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string s;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i++];
                ++col;
            }
            cur.push_back({Token::integer, std::move(s), pos});
            continue;
        }
        Token::Kind k;
        switch (ch) {
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '*': k = Token::star; break;
            case '^': k = Token::caret; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            case '/': k = Token::slash; break;
            case ',': k = Token::comma; break;
            case ':': k = Token::colon; break;
            default:
                throw ParseError(pos, std::string("unexpected character '") + ch + "'");
        }
        cur.push_back({k, std::string(1, ch), pos});
        ++i;
        ++col;
    }
    flush();
    return lines;
}

// Value of a (partially parsed) law expression: an operator-polynomial part
// plus one operator-polynomial coefficient per signal variable encountered.
struct LinVal {
    Polynomial op;
    std::map<int, Polynomial> sig;

    explicit LinVal(int nvars) : op(nvars) {}
    bool has_signals() const {
        for (const auto& [pos, p] : sig)
            if (!p.is_zero()) return true;
        return false;
    }
};

class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, std::size_t start, int nvars,
               const std::map<std::string, int>& opvars, const std::map<std::string, int>& sigvars)
        : t_(toks), i_(start), nvars_(nvars), opvars_(opvars), sigvars_(sigvars) {}

    LinVal parse_expr() {
        bool negate = false;
        if (peek().kind == Token::minus) {
            negate = true;
            ++i_;
        }
        LinVal acc = parse_term();
        if (negate) scale(acc, Rational(-1));
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            bool sub = peek().kind == Token::minus;
            ++i_;
            LinVal rhs = parse_term();
            if (sub) scale(rhs, Rational(-1));
            add_into(acc, rhs);
        }
        return acc;
    }

    const Token& peek() const { return t_[i_]; }
    std::size_t cursor() const { return i_; }

private:
    LinVal parse_term() {
        LinVal acc = parse_factor();
        while (peek().kind == Token::star) {
            SourcePos star_pos = peek().pos;
            ++i_;
            LinVal rhs = parse_factor();
            acc = multiply(acc, rhs, star_pos);
        }
        return acc;
    }

    LinVal parse_factor() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::integer: {
                ++i_;
                Integer num(tok.text);
                Integer den(1);
                if (peek().kind == Token::slash) {
                    ++i_;
                    const Token& d = peek();
                    if (d.kind != Token::integer)
                        throw ParseError(d.pos, "expected an integer denominator");
                    den = Integer(d.text);
                    if (den == 0) throw ParseError(d.pos, "zero denominator");
                    ++i_;
                }
                Rational q(num, den);
                q.canonicalize();
                LinVal v(nvars_);
                v.op = Polynomial::constant(nvars_, q);
                return v;
            }
            case Token::ident: {
                ++i_;
                int power = 1;
                SourcePos power_pos = tok.pos;
                if (peek().kind == Token::caret) {
                    ++i_;
                    const Token& p = peek();
                    if (p.kind != Token::integer)
                        throw ParseError(p.pos, "expected an integer exponent");
                    power_pos = p.pos;
                    power = parse_small_int(p);
                    ++i_;
                }
                if (auto it = opvars_.find(tok.text); it != opvars_.end()) {
                    LinVal v(nvars_);
                    v.op = Polynomial::variable(nvars_, it->second, power);
                    return v;
                }
                if (auto it = sigvars_.find(tok.text); it != sigvars_.end()) {
                    if (power != 1)
                        throw ParseError(power_pos, "nonlinear use of signal variable '" +
                                                        tok.text + "'");
                    LinVal v(nvars_);
                    v.sig.emplace(it->second, Polynomial::constant(nvars_, Rational(1)));
                    return v;
                }
                throw ParseError(tok.pos, "unknown identifier '" + tok.text + "'");
            }
            case Token::lparen: {
                ++i_;
                LinVal v = parse_expr();
                if (peek().kind != Token::rparen)
                    throw ParseError(peek().pos, "expected ')'");
                ++i_;
                return v;
            }
            default:
                throw ParseError(tok.pos, std::string("expected a number, identifier, or '(', "
                                                      "found ") +
                                              kind_name(tok.kind));
        }
    }

    int parse_small_int(const Token& tok) const {
        if (tok.text.size() > 4)
            throw ParseError(tok.pos, "exponent too large: " + tok.text);
        int v = std::stoi(tok.text);
        if (v > 1000) throw ParseError(tok.pos, "exponent too large: " + tok.text);
        return v;
    }

    static void scale(LinVal& v, const Rational& c) {
        v.op = v.op.scaled(c);
        for (auto& [pos, p] : v.sig) p = p.scaled(c);
    }

    static void add_into(LinVal& acc, const LinVal& rhs) {
        acc.op += rhs.op;
        for (const auto& [pos, p] : rhs.sig) {
            auto [it, inserted] = acc.sig.emplace(pos, p);
            if (!inserted) it->second += p;
        }
    }

    LinVal multiply(const LinVal& a, const LinVal& b, SourcePos star_pos) const {
        if (a.has_signals() && b.has_signals())
            throw ParseError(star_pos, "nonlinear use of signal variables: signal * signal");
        const LinVal& scalar = a.has_signals() ? b : a;
        const LinVal& linear = a.has_signals() ? a : b;
        LinVal out(nvars_);
        out.op = scalar.op * linear.op;
        for (const auto& [pos, p] : linear.sig) out.sig.emplace(pos, scalar.op * p);
        return out;
    }

    const std::vector<Token>& t_;
    std::size_t i_;
    int nvars_;
    const std::map<std::string, int>& opvars_;
    const std::map<std::string, int>& sigvars_;
};

struct HeaderState {
    std::optional<RingSpec> ring;
    std::vector<std::string> w_names, c_names;
    bool saw_w = false, saw_c = false;
    std::map<std::string, int> opvars;
    std::map<std::string, int> sigvars;  // position in w ++ c
    std::set<std::string> taken;
};

void expect_keyword(const std::vector<Token>& line, const char* kw) {
    if (line.front().kind != Token::ident || line.front().text != kw)
        throw ParseError(line.front().pos, std::string("expected '") + kw + "'");
}

void parse_ring_line(const std::vector<Token>& line, HeaderState& h) {
    expect_keyword(line, "ring");
    std::size_t i = 1;
    if (line[i].kind != Token::ident || (line[i].text != "diff" && line[i].text != "shift"))
        throw ParseError(line[i].pos, "expected 'diff' or 'shift'");
    OperatorKind kind =
        line[i].text == "diff" ? OperatorKind::differential : OperatorKind::shift;
    ++i;
    std::vector<std::string> names;
    for (; line[i].kind == Token::ident; ++i) {
        if (!h.taken.insert(line[i].text).second)
            throw ParseError(line[i].pos, "duplicate operator variable '" + line[i].text + "'");
        h.opvars.emplace(line[i].text, static_cast<int>(names.size()));
        names.push_back(line[i].text);
    }
    if (line[i].kind != Token::eol)
        throw ParseError(line[i].pos, "expected an operator variable name");
    if (names.empty()) throw ParseError(line[i].pos, "ring declares no operator variables");
    h.ring.emplace(static_cast<int>(names.size()), kind, std::move(names));
}

// Parses "vars w: ..." or "vars c: ..."; returns which block it declared.
char parse_vars_line(const std::vector<Token>& line, HeaderState& h) {
    expect_keyword(line, "vars");
    std::size_t i = 1;
    if (line[i].kind != Token::ident || (line[i].text != "w" && line[i].text != "c"))
        throw ParseError(line[i].pos, "expected 'w:' or 'c:'");
    const char block = line[i].text[0];
    ++i;
    if (line[i].kind != Token::colon) throw ParseError(line[i].pos, "expected ':'");
    ++i;
    std::vector<std::string>& names = block == 'w' ? h.w_names : h.c_names;
    bool& saw = block == 'w' ? h.saw_w : h.saw_c;
    if (saw) throw ParseError(line[0].pos, std::string("duplicate 'vars ") + block + ":' block");
    saw = true;
    for (; line[i].kind == Token::ident; ++i) {
        if (!h.taken.insert(line[i].text).second)
            throw ParseError(line[i].pos, "identifier '" + line[i].text + "' already declared");
        names.push_back(line[i].text);
    }
    if (line[i].kind != Token::eol)
        throw ParseError(line[i].pos, "expected a signal variable name");
    if (names.empty()) throw ParseError(line[i].pos, "empty variable block");
    return block;
}

void finalize_sigvars(HeaderState& h) {
    int pos = 0;
    for (const auto& n : h.w_names) h.sigvars.emplace(n, pos++);
    for (const auto& n : h.c_names) h.sigvars.emplace(n, pos++);
}

ModuleVector parse_law_line(const std::vector<Token>& line, const HeaderState& h, int rank) {
    const int nvars = h.ring->n;
    const bool vec_form = line.front().text == "lawvec";
    std::size_t i = 1;
    ModuleVector law(rank, nvars);
    if (vec_form) {
        int comp = 0;
        while (true) {
            if (comp >= rank)
                throw ParseError(line[i].pos, "lawvec has more entries than signal variables (" +
                                                  std::to_string(rank) + ")");
            ExprParser ep(line, i, nvars, h.opvars, h.sigvars);
            LinVal v = ep.parse_expr();
            i = ep.cursor();
            if (v.has_signals())
                throw ParseError(line[i].pos,
                                 "lawvec entries must be operator polynomials, free of signal "
                                 "variables");
            law[comp++] = v.op;
            if (line[i].kind == Token::comma) {
                ++i;
                continue;
            }
            break;
        }
        if (line[i].kind != Token::eol)
            throw ParseError(line[i].pos, std::string("unexpected ") + kind_name(line[i].kind) +
                                              " after lawvec entry");
        if (comp != rank)
            throw ParseError(line[i].pos, "lawvec has " + std::to_string(comp) +
                                              " entries, expected " + std::to_string(rank));
    } else {
        ExprParser ep(line, i, nvars, h.opvars, h.sigvars);
        LinVal v = ep.parse_expr();
        i = ep.cursor();
        if (line[i].kind != Token::eol)
            throw ParseError(line[i].pos, std::string("unexpected ") + kind_name(line[i].kind) +
                                              " after expression");
        if (!v.op.is_zero())
            throw ParseError(line.front().pos,
                             "law contains a term without a signal variable");
        for (const auto& [pos, p] : v.sig) law[pos] += p;
    }
    if (law.is_zero()) throw ParseError(line.front().pos, "law reduces to zero");
    return law;
}

SourcePos eof_pos(const std::vector<std::vector<Token>>& lines) {
    if (lines.empty()) return {1, 1};
    const Token& t = lines.back().back();
    return {t.pos.line + 1, 1};
}

}  // namespace

ControlSystem parse_system(const std::string& text) {
    auto lines = tokenize(text);
    HeaderState h;
    std::size_t li = 0;
    if (li >= lines.size()) throw ParseError(eof_pos(lines), "expected a 'ring' line");
    parse_ring_line(lines[li++], h);
    if (li >= lines.size()) throw ParseError(eof_pos(lines), "expected 'vars w:' line");
    if (parse_vars_line(lines[li++], h) != 'w')
        throw ParseError(lines[li - 1][1].pos, "the w block must come before the c block");
    if (li >= lines.size()) throw ParseError(eof_pos(lines), "expected 'vars c:' line");
    if (parse_vars_line(lines[li++], h) != 'c')
        throw ParseError(lines[li - 1][1].pos, "expected the c block after the w block");
    finalize_sigvars(h);

    const int rank = static_cast<int>(h.w_names.size() + h.c_names.size());
    std::vector<ModuleVector> laws;
    for (; li < lines.size(); ++li) {
        const Token& head = lines[li].front();
        if (head.kind != Token::ident || (head.text != "law" && head.text != "lawvec"))
            throw ParseError(head.pos, "expected a 'law' or 'lawvec' line");
        laws.push_back(parse_law_line(lines[li], h, rank));
    }
    return ControlSystem(*h.ring, VariablePartition(h.w_names, h.c_names),
                         Submodule(rank, h.ring->n, std::move(laws)));
}

ModuleFile parse_module_file(const std::string& text) {
    auto lines = tokenize(text);
    HeaderState h;
    std::size_t li = 0;
    if (li >= lines.size()) throw ParseError(eof_pos(lines), "expected a 'ring' line");
    parse_ring_line(lines[li++], h);
    if (li >= lines.size()) throw ParseError(eof_pos(lines), "expected a 'vars' line");
    const char block = parse_vars_line(lines[li++], h);
    finalize_sigvars(h);

    const std::vector<std::string>& names = block == 'w' ? h.w_names : h.c_names;
    const int rank = static_cast<int>(names.size());
    std::vector<ModuleVector> laws;
    for (; li < lines.size(); ++li) {
        const Token& head = lines[li].front();
        if (head.kind != Token::ident || (head.text != "law" && head.text != "lawvec"))
            throw ParseError(head.pos, "expected a 'law' or 'lawvec' line");
        laws.push_back(parse_law_line(lines[li], h, rank));
    }
    return ModuleFile(*h.ring, block, names, Submodule(rank, h.ring->n, std::move(laws)));
}

}  // namespace bsys
