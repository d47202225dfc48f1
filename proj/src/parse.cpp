#include "nmil/parse.hpp"

#include <cctype>

namespace nmil {

namespace {

struct Scanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw user_error("syntax error at position " + std::to_string(pos) + ": " + what);
    }
    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }
};

}  // namespace

Support parse_polynomial(const std::string& text) {
    Scanner sc{text};
    std::vector<std::map<int, long>> terms;  // var index (1-based) -> exponent
    int max_var = 0;

    bool first = true;
    while (!sc.eof()) {
        if (!first) {
            char op = sc.take();
            if (op != '+' && op != '-') sc.fail("expected '+' or '-' between terms");
        } else if (sc.peek() == '+' || sc.peek() == '-') {
            sc.take();  // leading sign
        }
        first = false;

        std::map<int, long> expo;
        bool has_var = false;
        bool more = true;
        while (more) {
            char c = sc.peek();
            if (c == 'x') {
                sc.take();
                size_t at = sc.pos;
                long idx = sc.integer();
                if (idx < 1) throw user_error("syntax error at position " + std::to_string(at) +
                                              ": variable index must be >= 1");
                long e = 1;
                if (sc.peek() == '^') {
                    sc.take();
                    e = sc.integer();
                    if (e < 0) sc.fail("negative exponent");
                }
                expo[static_cast<int>(idx)] += e;
                max_var = std::max<long>(max_var, idx);
                has_var = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                sc.integer();  // coefficient, ignored
            } else {
                sc.fail("expected a monomial factor");
            }
            if (sc.peek() == '*') {
                sc.take();
            } else {
                more = false;
            }
        }
        if (!has_var)
            throw user_error("constant term is not allowed: the input must satisfy f(0) = 0");
        terms.push_back(std::move(expo));
    }
    if (terms.empty()) throw user_error("empty polynomial");

    std::vector<IntVec> monomials;
    for (const auto& t : terms) {
        IntVec m(max_var, 0);
        for (const auto& [idx, e] : t) m[idx - 1] = e;
        monomials.push_back(std::move(m));
    }
    return Support::make(max_var, std::move(monomials));
}

}  // namespace nmil
