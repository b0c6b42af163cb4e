#include "k3audit/scalar_parser.hpp"

#include <cctype>

namespace k3 {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw error("scalar parse error at position " + std::to_string(pos) +
                    ": " + msg + " in \"" + s + "\"");
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    Cyclo expr() {
        Cyclo v = term();
        while (true) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    Cyclo term() {
        Cyclo v = factor();
        while (true) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) v = v / factor();
            else return v;
        }
    }

    Cyclo factor() {
        if (eat('-')) return -factor();
        return atom();
    }

    Cyclo atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Cyclo v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'z') {
            ++pos;
            long long n = integer();
            long long k = 1;
            if (eat('^')) {
                bool neg = eat('-');
                k = integer();
                if (neg) k = -k;
            }
            return Cyclo::root_of_unity((unsigned)n, k);
        }
        if (std::isdigit((unsigned char)c)) {
            long long n = integer();
            return Cyclo(Rational(n));
        }
        fail("expected atom");
    }
};

} // namespace

Cyclo parse_scalar(const std::string& text) {
    Parser p(text);
    Cyclo v = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw error("scalar parse error: trailing input in \"" + text + "\"");
    return v;
}

} // namespace k3
