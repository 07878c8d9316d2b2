#include "subring/expr.hpp"

#include <cctype>
#include <stdexcept>

#include "subring/util.hpp"

namespace subring {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::string& var;
    const SymbolEnv& env;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression error at offset " + std::to_string(pos) + ": " + msg +
                                    " in '" + s + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    PolynomialQ parse_expr() {
        PolynomialQ acc;
        bool neg = eat('-');
        acc = parse_term();
        if (neg)
            acc = -acc;
        for (;;) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    PolynomialQ parse_term() {
        PolynomialQ acc = parse_power();
        while (eat('*'))
            acc = acc * parse_power();
        return acc;
    }

    PolynomialQ parse_power() {
        PolynomialQ base = parse_atom();
        if (!eat('^'))
            return base;
        PolynomialQ e = parse_atom();
        if (!e.is_constant())
            fail("exponent must be constant");
        mpq_class ev = e.constant_value();
        if (ev.get_den() != 1 || ev < 0)
            fail("exponent must be a nonnegative integer");
        return base.pow(mpz_class(ev.get_num()).get_ui());
    }

    mpz_class constant_arg(const PolynomialQ& p, const char* what) {
        if (!p.is_constant())
            fail(std::string(what) + " must be constant");
        mpq_class v = p.constant_value();
        if (v.get_den() != 1)
            fail(std::string(what) + " must be an integer");
        return v.get_num();
    }

    PolynomialQ parse_atom() {
        skip_ws();
        if (pos >= s.size())
            fail("unexpected end");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            PolynomialQ inner = parse_expr();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            return PolynomialQ::constant(mpq_class(mpz_class(s.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (peek() == '(') {
                ++pos;
                PolynomialQ a = parse_expr();
                if (!eat(','))
                    fail("expected ',' in " + name + "()");
                PolynomialQ b = parse_expr();
                if (!eat(')'))
                    fail("expected ')' after " + name + "()");
                mpz_class av = constant_arg(a, "function argument");
                mpz_class bv = constant_arg(b, "function argument");
                if (name == "binom") {
                    if (!av.fits_slong_p() || !bv.fits_slong_p())
                        fail("binom arguments out of range");
                    return PolynomialQ::constant(mpq_class(binomial(av.get_si(), bv.get_si())));
                }
                if (name == "fdiv") {
                    if (bv == 0)
                        fail("fdiv by zero");
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
                    return PolynomialQ::constant(mpq_class(q));
                }
                fail("unknown function '" + name + "'");
            }
            if (name == var)
                return PolynomialQ::variable();
            auto it = env.find(name);
            if (it == env.end())
                fail("unbound symbol '" + name + "'");
            return PolynomialQ::constant(mpq_class(it->second));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

PolynomialQ parse_poly_expr(const std::string& text, const std::string& var, const SymbolEnv& env) {
    Parser p{text, 0, var, env};
    PolynomialQ result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return result;
}

std::optional<std::string> guard_violation(const std::string& text, const SymbolEnv& env) {
    size_t start = 0;
    while (start <= text.size()) {
        size_t amp = text.find('&', start);
        std::string clause = text.substr(start, amp == std::string::npos ?amp : amp - start);

        static const char* ops[] = {"<=", ">=", "==", "!=", "<", ">"};
        size_t op_pos = std::string::npos;
        std::string op;
        for (const char* candidate : ops) {
            size_t where = clause.find(candidate);
            if (where != std::string::npos && (op_pos == std::string::npos || where < op_pos)) {
                op_pos = where;
                op = candidate;
            }
        }
        if (op_pos == std::string::npos)
            throw std::invalid_argument("guard clause without comparison: '" + clause + "'");

        SymbolEnv no_var = env;
        auto side = [&](const std::string& t) {
            PolynomialQ p = parse_poly_expr(t, "__none__", no_var);
            if (!p.is_constant())
                throw std::invalid_argument("guard side not constant: '" + t + "'");
            return p.constant_value();
        };
        mpq_class lhs = side(clause.substr(0, op_pos));
        mpq_class rhs = side(clause.substr(op_pos + op.size()));

        bool ok;
        if (op == "<=") ok = lhs <= rhs;
        else if (op == ">=") ok = lhs >= rhs;
        else if (op == "==") ok = lhs == rhs;
        else if (op == "!=") ok = lhs != rhs;
        else if (op == "<") ok = lhs < rhs;
        else ok = lhs > rhs;
        if (!ok) {
            size_t a = clause.find_first_not_of(" \t");
            size_t b = clause.find_last_not_of(" \t");
            return clause.substr(a, b - a + 1);
        }

        if (amp == std::string::npos)
            break;
        start = amp + 1;
    }
    return std::nullopt;
}

bool eval_guard(const std::string& text, const SymbolEnv& env) {
    return !guard_violation(text, env).has_value();
}

} // namespace subring
