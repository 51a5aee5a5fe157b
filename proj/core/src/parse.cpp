#include "minf/parse.hpp"

#include <cctype>
#include <map>

namespace minf {

namespace {

constexpr int kMaxVars = 9;

// Sparse polynomial with exponent vectors of fixed working length.
using Poly = std::map<std::vector<int>, Rat>;

Poly poly_const(const Rat& c) {
    Poly p;
    if (c != 0) p[std::vector<int>(kMaxVars, 0)] = c;
    return p;
}

void poly_add_inplace(Poly& a, const Poly& b, int sign) {
    for (const auto& [e, c] : b) {
        Rat& slot = a[e];
        slot += (sign > 0) ? c : -c;
        if (slot == 0) a.erase(e);
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(kMaxVars);
            for (int i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
            Rat& slot = out[e];
            slot += ca * cb;
            if (slot == 0) out.erase(e);
        }
    }
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : src_(text) {}

    Poly run() {
        Poly p = parse_expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        return p;
    }

    int max_var() const { return max_var_; }

private:
    const std::string& src_;
    std::size_t pos_ = 0;
    int max_var_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        const char c = src_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    Poly parse_expr() {
        int sign = 1;
        skip_ws();
        if (peek_is('+')) {
            ++pos_;
        } else if (peek_is('-')) {
            ++pos_;
            sign = -1;
        }
        Poly acc = poly_const(0);
        poly_add_inplace(acc, parse_term(), sign);
        while (true) {
            skip_ws();
            if (peek_is('+')) {
                ++pos_;
                poly_add_inplace(acc, parse_term(), 1);
            } else if (peek_is('-')) {
                ++pos_;
                poly_add_inplace(acc, parse_term(), -1);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (true) {
            if (peek_is('*')) {
                ++pos_;
                acc = poly_mul(acc, parse_factor());
            } else if (starts_factor()) {
                // Implicit multiplication: "2x", "x y".
                acc = poly_mul(acc, parse_factor());
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        if (peek_is('^')) {
            ++pos_;
            const Int e = parse_integer("exponent");
            if (e < 0) throw ParseError("negative exponent", pos_);
            Poly out = poly_const(1);
            for (Int i = 0; i < e; ++i) out = poly_mul(out, base);
            return out;
        }
        return base;
    }

    Poly parse_base() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = parse_expr();
            if (!peek_is(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Int num = parse_integer("number");
            if (peek_is('/')) {
                ++pos_;
                const Int den = parse_integer("denominator");
                if (den == 0) throw ParseError("zero denominator", pos_);
                return poly_const(Rat(num, den));
            }
            return poly_const(Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Int parse_integer(const std::string& what) {
        skip_ws();
        const std::size_t start = pos_;
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            digits += src_[pos_++];
        if (digits.empty()) throw ParseError("expected " + what, start);
        return Int(digits);
    }

    Poly parse_variable() {
        const std::size_t start = pos_;
        const char c = src_[pos_++];
        int idx = 0;
        if (c == 'x' && pos_ < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            std::string digits;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits += src_[pos_++];
            idx = std::stoi(digits);
            if (idx < 1 || idx > kMaxVars)
                throw ParseError("variable index out of range", start);
        } else if (c == 'x') {
            idx = 1;
        } else if (c == 'y') {
            idx = 2;
        } else if (c == 'z') {
            idx = 3;
        } else if (c == 'w') {
            idx = 4;
        } else {
            throw ParseError(std::string("unknown variable '") + c + "'", start);
        }
        max_var_ = std::max(max_var_, idx);
        std::vector<int> e(kMaxVars, 0);
        e[idx - 1] = 1;
        Poly p;
        p[e] = Rat(1);
        return p;
    }
};

}  // namespace

SupportSpec parse_polynomial(const std::string& text) {
    Parser parser(text);
    const Poly poly = parser.run();
    const int n = parser.max_var();
    if (n < 2) throw ParseError("a polynomial in at least two variables is required", 0);
    SupportSpec spec;
    spec.n = n;
    spec.coefficients.emplace();
    for (const auto& [e, c] : poly) {
        bool constant = true;
        for (int i = 0; i < kMaxVars; ++i) {
            if (e[i] != 0) constant = false;
            if (i >= n && e[i] != 0)
                throw ParseError("internal variable bookkeeping error", 0);
        }
        // A constant term does not affect any invariant at infinity.
        if (constant) continue;
        Vec v(n);
        for (int i = 0; i < n; ++i) v[i] = e[i];
        spec.support.push_back(std::move(v));
        spec.coefficients->push_back(c);
    }
    if (spec.support.empty())
        throw ParseError("polynomial has no non-constant terms", 0);
    spec.validate();
    return spec;
}

}  // namespace minf
