#include "ncdp/expr.hpp"

#include <cctype>
#include <set>

namespace ncdp::expr {

ExprError::ExprError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Int, Ident, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    int line, column;
};

bool is_word(std::string_view s) {
    for (char ch : s)
        if (ch != 'x' && ch != 'y' && ch != 'z') return false;
    return !s.empty();
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        int l = line, c = col;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, c});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            std::string_view id = src.substr(i, j - i);
            if (is_word(id)) {
                for (std::size_t k = 0; k < id.size(); ++k) out.push_back({Tok::Var, std::string(1, id[k]), l, c + int(k)});
            } else {
                out.push_back({Tok::Ident, std::string(id), l, c});
            }
            advance(j - i);
            continue;
        }
        Tok k;
        switch (ch) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '/': k = Tok::Slash; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw ExprError(std::string("unexpected character '") + ch + "'", l, c);
        }
        out.push_back({k, std::string(1, ch), l, c});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

    NodePtr parse() {
        NodePtr e = expr();
        if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    std::vector<Token> t_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t k = 0) const { return t_[std::min(pos_ + k, t_.size() - 1)]; }
    const Token& take() { return t_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& tk = peek();
        throw ExprError(tk.kind == Tok::End ? msg + " at end of input" : msg, tk.line, tk.column);
    }

    static std::shared_ptr<Node> make(Kind k, const Token& at) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->line = at.line;
        n->column = at.column;
        return n;
    }

    NodePtr expr() {
        const Token& start = peek();
        NodePtr first = term();
        if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) return first;
        auto s = make(Kind::Sum, start);
        s->children.push_back(first);
        s->signs.push_back('+');
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            s->signs.push_back(take().kind == Tok::Plus ? '+' : '-');
            s->children.push_back(term());
        }
        return s;
    }

    bool starts_atom() const {
        Tok k = peek().kind;
        return k == Tok::Int || k == Tok::Ident || k == Tok::Var || k == Tok::LParen;
    }

    NodePtr term() {
        const Token& start = peek();
        NodePtr acc = factor();
        std::shared_ptr<Node> prod;
        auto flush = [&]() -> NodePtr { return prod ? NodePtr(prod) : acc; };
        for (;;) {
            if (peek().kind == Tok::Slash) {
                const Token& op = take();
                NodePtr lhs = flush();
                prod.reset();
                auto q = make(Kind::Quotient, op);
                q->children = {lhs, factor(true)};
                acc = q;
                continue;
            }
            bool explicit_star = peek().kind == Tok::Star;
            if (!explicit_star && !starts_atom()) break;
            if (explicit_star) take();
            if (!prod) {
                prod = make(Kind::Product, start);
                prod->children.push_back(acc);
            }
            prod->children.push_back(factor());
        }
        return flush();
    }

    // A divisor literal stops at the next '/', so x/2/3 is (x/2)/3.
    NodePtr factor(bool divisor = false) {
        NodePtr a = atom(divisor);
        if (peek().kind != Tok::Caret) return a;
        const Token& op = take();
        if (peek().kind != Tok::Int) fail("expected an unsigned integer exponent");
        const Token& e = take();
        auto p = make(Kind::Power, op);
        if (e.text.size() > 6) throw ExprError("exponent too large", e.line, e.column);
        p->exponent = static_cast<unsigned>(std::stoul(e.text));
        p->children.push_back(a);
        return p;
    }

    NodePtr atom(bool divisor = false) {
        const Token& tk = peek();
        switch (tk.kind) {
            case Tok::Int: {
                take();
                auto n = make(Kind::Number, tk);
                Integer num(tk.text), den(1);
                if (!divisor && peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
                    take();
                    const Token& d = take();
                    den = Integer(d.text);
                    if (den == 0) throw ExprError("zero denominator", d.line, d.column);
                }
                n->value = Rational(num, den);
                n->value.canonicalize();
                return n;
            }
            case Tok::Var: {
                take();
                auto n = make(Kind::Variable, tk);
                n->letter = ncalg::letter_from_char(tk.text[0]);
                return n;
            }
            case Tok::Ident: {
                take();
                auto n = make(Kind::Parameter, tk);
                n->name = tk.text;
                return n;
            }
            case Tok::LParen: {
                take();
                auto g = make(Kind::Group, tk);
                g->children.push_back(expr());
                if (peek().kind != Tok::RParen) fail("expected ')'");
                take();
                return g;
            }
            case Tok::Minus: {
                take();
                auto n = make(Kind::Negation, tk);
                n->children.push_back(atom(divisor));
                return n;
            }
            default:
                fail(tk.kind == Tok::End ? "expected an operand" : "unexpected '" + tk.text + "'");
        }
    }
};

template <class Poly>
struct Lowering {
    const Bindings& params;
    Poly (*variable)(ncalg::Letter);

    Rational scalar_of(const Poly& p, const Node& at) const;

    Poly operator()(const NodePtr& n) const {
        switch (n->kind) {
            case Kind::Number: return Poly(n->value);
            case Kind::Variable: return variable(n->letter);
            case Kind::Parameter: {
                auto it = params.find(n->name);
                if (it == params.end()) throw ExprError("unbound parameter '" + n->name + "'", n->line, n->column);
                return Poly(it->second);
            }
            case Kind::Sum: {
                Poly acc;
                for (std::size_t i = 0; i < n->children.size(); ++i) {
                    Poly v = (*this)(n->children[i]);
                    if (n->signs[i] == '-')
                        acc -= v;
                    else
                        acc += v;
                }
                return acc;
            }
            case Kind::Product: {
                Poly acc(Rational(1));
                for (const auto& c : n->children) acc = acc * (*this)(c);
                return acc;
            }
            case Kind::Quotient: {
                Poly num = (*this)(n->children[0]);
                Rational den = scalar_of((*this)(n->children[1]), *n->children[1]);
                if (den == 0) throw ExprError("zero denominator after substitution", n->line, n->column);
                return num * (1 / den);
            }
            case Kind::Power: return (*this)(n->children[0]).pow(n->exponent);
            case Kind::Negation: return -(*this)(n->children[0]);
            case Kind::Group: return (*this)(n->children[0]);
        }
        return Poly();
    }
};

template <>
Rational Lowering<ncalg::NCPoly>::scalar_of(const ncalg::NCPoly& p, const Node& at) const {
    if (p.is_zero()) return 0;
    if (p.size() != 1 || !p.terms().begin()->first.empty())
        throw ExprError("division by a non-scalar", at.line, at.column);
    return p.terms().begin()->second;
}

template <>
Rational Lowering<CommPoly>::scalar_of(const CommPoly& p, const Node& at) const {
    if (p.is_zero()) return 0;
    if (p.size() != 1 || p.terms().begin()->first != CommPoly::Exponent{})
        throw ExprError("division by a non-scalar", at.line, at.column);
    return p.terms().begin()->second;
}

ncalg::NCPoly nc_var(ncalg::Letter l) { return ncalg::NCPoly::letter(l); }
CommPoly comm_var(ncalg::Letter l) { return CommPoly::variable(static_cast<std::size_t>(l)); }

void print_into(const NodePtr& n, std::string& out) {
    switch (n->kind) {
        case Kind::Number: out += n->value.get_str(); return;
        case Kind::Variable: out += ncalg::letter_char(n->letter); return;
        case Kind::Parameter: out += n->name; return;
        case Kind::Sum:
            for (std::size_t i = 0; i < n->children.size(); ++i) {
                if (i > 0) out += n->signs[i] == '-' ? " - " : " + ";
                print_into(n->children[i], out);
            }
            return;
        case Kind::Product:
            for (std::size_t i = 0; i < n->children.size(); ++i) {
                if (i > 0) out += '*';
                print_into(n->children[i], out);
            }
            return;
        case Kind::Quotient:
            print_into(n->children[0], out);
            out += '/';
            print_into(n->children[1], out);
            return;
        case Kind::Power:
            print_into(n->children[0], out);
            out += '^' + std::to_string(n->exponent);
            return;
        case Kind::Negation:
            out += '-';
            print_into(n->children[0], out);
            return;
        case Kind::Group:
            out += '(';
            print_into(n->children[0], out);
            out += ')';
            return;
    }
}

void collect(const NodePtr& n, std::vector<std::string>& out, std::set<std::string>& seen) {
    if (n->kind == Kind::Parameter && seen.insert(n->name).second) out.push_back(n->name);
    for (const auto& c : n->children) collect(c, out, seen);
}

}  // namespace

NodePtr parse_expression(std::string_view text) { return Parser(lex(text)).parse(); }

std::string print(const NodePtr& n) {
    std::string out;
    print_into(n, out);
    return out;
}

bool same_tree(const NodePtr& a, const NodePtr& b) {
    if (a->kind != b->kind || a->children.size() != b->children.size()) return false;
    switch (a->kind) {
        case Kind::Number:
            if (a->value != b->value) return false;
            break;
        case Kind::Variable:
            if (a->letter != b->letter) return false;
            break;
        case Kind::Parameter:
            if (a->name != b->name) return false;
            break;
        case Kind::Sum:
            if (a->signs != b->signs) return false;
            break;
        case Kind::Power:
            if (a->exponent != b->exponent) return false;
            break;
        default: break;
    }
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!same_tree(a->children[i], b->children[i])) return false;
    return true;
}

std::vector<std::string> parameters(const NodePtr& n) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect(n, out, seen);
    return out;
}

ncalg::NCPoly to_ncpoly(const NodePtr& n, const Bindings& params) {
    return Lowering<ncalg::NCPoly>{params, &nc_var}(n);
}

CommPoly to_commpoly(const NodePtr& n, const Bindings& params) { return Lowering<CommPoly>{params, &comm_var}(n); }

}  // namespace ncdp::expr
