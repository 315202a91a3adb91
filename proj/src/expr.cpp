#include "hfi/expr.hpp"

#include <charconv>
#include <cmath>
#include <vector>

#include "hfi/errors.hpp"

namespace hfi {
namespace {

ExprPtr make_number(double v) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::number;
    e->number = v;
    return e;
}

ExprPtr make_var() {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::var;
    return e;
}

ExprPtr make_unary(ExprKind k, ExprPtr a) {
    if (k == ExprKind::neg && a->kind == ExprKind::number) {
        double v = -a->number;
        if (std::isfinite(v)) return make_number(v);
    }
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    return e;
}

ExprPtr make_binary(ExprKind k, ExprPtr a, ExprPtr b) {
    if (a->kind == ExprKind::number && b->kind == ExprKind::number) {
        double v = 0.0;
        switch (k) {
            case ExprKind::add: v = a->number + b->number; break;
            case ExprKind::sub: v = a->number - b->number; break;
            case ExprKind::mul: v = a->number * b->number; break;
            case ExprKind::div: v = a->number / b->number; break;
            default: v = NAN; break;
        }
        if (std::isfinite(v)) return make_number(v);
    }
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr make_pow(ExprPtr base, double exponent) {
    if (base->kind == ExprKind::number) {
        double v = std::pow(base->number, exponent);
        if (std::isfinite(v)) return make_number(v);
    }
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::pow;
    e->number = exponent;
    e->a = std::move(base);
    return e;
}

struct Token {
    enum Type { num, ident, plus, minus, star, slash, caret, lparen, rparen, end } type;
    double value = 0.0;
    std::string text;
    int col = 0;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char ch = src[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if ((ch >= '0' && ch <= '9') || ch == '.') {
            size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            if (j < src.size() && src[j] == '.') {
                ++j;
                while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < src.size() && src[k] >= '0' && src[k] <= '9') {
                    while (k < src.size() && src[k] >= '0' && src[k] <= '9') ++k;
                    j = k;
                }
            }
            double v = 0.0;
            auto res = std::from_chars(src.data() + i, src.data() + j, v);
            if (res.ec != std::errc() || res.ptr != src.data() + j)
                throw SyntaxError("malformed number '" + src.substr(i, j - i) + "'", col);
            out.push_back(Token{Token::num, v, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_') {
            size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                    src[j] == '_' || (src[j] >= '0' && src[j] <= '9')))
                ++j;
            out.push_back(Token{Token::ident, 0.0, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        Token::Type t;
        switch (ch) {
            case '+': t = Token::plus; break;
            case '-': t = Token::minus; break;
            case '*': t = Token::star; break;
            case '/': t = Token::slash; break;
            case '^': t = Token::caret; break;
            case '(': t = Token::lparen; break;
            case ')': t = Token::rparen; break;
            default: throw SyntaxError(std::string("unexpected character '") + ch + "'", col);
        }
        out.push_back(Token{t, 0.0, std::string(1, ch), col});
        ++i;
    }
    out.push_back(Token{Token::end, 0.0, "", static_cast<int>(src.size()) + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (cur().type != Token::end)
            throw SyntaxError("unexpected '" + cur().text + "'", cur().col);
        return e;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    ExprPtr expr() {
        ExprPtr e = term();
        while (cur().type == Token::plus || cur().type == Token::minus) {
            ExprKind k = cur().type == Token::plus ? ExprKind::add : ExprKind::sub;
            advance();
            e = make_binary(k, e, term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (cur().type == Token::star || cur().type == Token::slash) {
            ExprKind k = cur().type == Token::star ? ExprKind::mul : ExprKind::div;
            advance();
            e = make_binary(k, e, factor());
        }
        return e;
    }

    ExprPtr factor() {
        if (cur().type == Token::minus) {
            advance();
            return make_unary(ExprKind::neg, factor());
        }
        ExprPtr base = atom();
        if (cur().type == Token::caret) {
            advance();
            double sign = 1.0;
            if (cur().type == Token::minus) {
                sign = -1.0;
                advance();
            }
            if (cur().type != Token::num)
                throw SyntaxError("expected numeric exponent", cur().col);
            double e = sign * cur().value;
            advance();
            return make_pow(base, e);
        }
        return base;
    }

    ExprPtr atom() {
        const Token& t = cur();
        switch (t.type) {
            case Token::num:
                advance();
                return make_number(t.value);
            case Token::ident: {
                if (t.text == "u") {
                    advance();
                    return make_var();
                }
                if (t.text == "ln" || t.text == "exp") {
                    ExprKind k = t.text == "ln" ? ExprKind::ln : ExprKind::exp;
                    advance();
                    expect(Token::lparen, "'('");
                    ExprPtr inner = expr();
                    expect(Token::rparen, "')'");
                    return make_unary(k, inner);
                }
                throw SyntaxError("unknown identifier '" + t.text + "'", t.col);
            }
            case Token::lparen: {
                advance();
                ExprPtr inner = expr();
                expect(Token::rparen, "')'");
                return inner;
            }
            default:
                throw SyntaxError("expected expression", t.col);
        }
    }

    void expect(Token::Type type, const char* what) {
        if (cur().type != type)
            throw SyntaxError(std::string("expected ") + what, cur().col);
        advance();
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

double eval_node(const Expr& e, double u) {
    switch (e.kind) {
        case ExprKind::number: return e.number;
        case ExprKind::var: return u;
        case ExprKind::add: return eval_node(*e.a, u) + eval_node(*e.b, u);
        case ExprKind::sub: return eval_node(*e.a, u) - eval_node(*e.b, u);
        case ExprKind::mul: return eval_node(*e.a, u) * eval_node(*e.b, u);
        case ExprKind::div: return eval_node(*e.a, u) / eval_node(*e.b, u);
        case ExprKind::pow: return std::pow(eval_node(*e.a, u), e.number);
        case ExprKind::neg: return -eval_node(*e.a, u);
        case ExprKind::ln: {
            double v = eval_node(*e.a, u);
            if (!(v > 0.0)) throw DomainError("ln of non-positive value " + std::to_string(v));
            return std::log(v);
        }
        case ExprKind::exp: return std::exp(eval_node(*e.a, u));
    }
    throw EvalError("corrupt expression node");
}

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::neg: return 3;
        case ExprKind::pow: return 4;
        default: return 5;
    }
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void print_node(const Expr& e, int min_prec, std::string& out) {
    const int prec = precedence(e.kind);
    const bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (e.kind) {
        case ExprKind::number: out += format_number(e.number); break;
        case ExprKind::var: out += 'u'; break;
        case ExprKind::add:
        case ExprKind::sub:
            print_node(*e.a, prec, out);
            out += e.kind == ExprKind::add ? '+' : '-';
            print_node(*e.b, prec + 1, out);
            break;
        case ExprKind::mul:
        case ExprKind::div:
            print_node(*e.a, prec, out);
            out += e.kind == ExprKind::mul ? '*' : '/';
            print_node(*e.b, prec + 1, out);
            break;
        case ExprKind::pow:
            print_node(*e.a, 5, out);
            out += '^';
            out += format_number(e.number);
            break;
        case ExprKind::neg:
            out += '-';
            print_node(*e.a, prec, out);
            break;
        case ExprKind::ln:
        case ExprKind::exp:
            out += e.kind == ExprKind::ln ? "ln(" : "exp(";
            print_node(*e.a, 0, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

ExprPtr parse(const std::string& src) {
    if (src.empty()) throw SyntaxError("empty expression", 1);
    return Parser(lex(src)).run();
}

ExprPtr diff(const ExprPtr& e) {
    switch (e->kind) {
        case ExprKind::number: return make_number(0.0);
        case ExprKind::var: return make_number(1.0);
        case ExprKind::add: return make_binary(ExprKind::add, diff(e->a), diff(e->b));
        case ExprKind::sub: return make_binary(ExprKind::sub, diff(e->a), diff(e->b));
        case ExprKind::mul:
            return make_binary(ExprKind::add, make_binary(ExprKind::mul, diff(e->a), e->b),
                               make_binary(ExprKind::mul, e->a, diff(e->b)));
        case ExprKind::div:
            return make_binary(
                ExprKind::div,
                make_binary(ExprKind::sub, make_binary(ExprKind::mul, diff(e->a), e->b),
                            make_binary(ExprKind::mul, e->a, diff(e->b))),
                make_pow(e->b, 2.0));
        case ExprKind::pow:
            return make_binary(ExprKind::mul,
                               make_binary(ExprKind::mul, make_number(e->number),
                                           make_pow(e->a, e->number - 1.0)),
                               diff(e->a));
        case ExprKind::neg: return make_unary(ExprKind::neg, diff(e->a));
        case ExprKind::ln: return make_binary(ExprKind::div, diff(e->a), e->a);
        case ExprKind::exp:
            return make_binary(ExprKind::mul, diff(e->a), make_unary(ExprKind::exp, e->a));
    }
    throw EvalError("corrupt expression node");
}

double eval(const ExprPtr& e, double u) {
    double v = eval_node(*e, u);
    if (!std::isfinite(v)) throw EvalError("non-finite result " + std::to_string(v));
    return v;
}

std::string to_string(const ExprPtr& e) {
    std::string out;
    print_node(*e, 0, out);
    return out;
}

bool structurally_equal(const ExprPtr& x, const ExprPtr& y) {
    if (x->kind != y->kind) return false;
    switch (x->kind) {
        case ExprKind::number: return x->number == y->number;
        case ExprKind::var: return true;
        case ExprKind::pow: return x->number == y->number && structurally_equal(x->a, y->a);
        case ExprKind::neg:
        case ExprKind::ln:
        case ExprKind::exp: return structurally_equal(x->a, y->a);
        default: return structurally_equal(x->a, y->a) && structurally_equal(x->b, y->b);
    }
}

}  // namespace hfi
