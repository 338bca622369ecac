#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lgs {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Recursive-descent parser for + - * / ^ ( ) over integers and named
// variables. Juxtaposition is not multiplication. Ops supplies:
//   Value number(const std::string& digits)
//   Value variable(const std::string& name)     (throws ParseError if unknown)
//   Value div(const Value&, const Value&)
//   Value pow(const Value&, int)
template <class Value, class Ops>
class ExprParser {
public:
    ExprParser(std::string_view text, Ops& ops) : s_(text), ops_(ops) {}

    Value parse() {
        Value v = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    std::string_view s_;
    size_t i_ = 0;
    Ops& ops_;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    Value sum() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Value v = product();
        if (neg) v = -v;
        for (;;) {
            if (eat('+'))
                v = v + product();
            else if (eat('-'))
                v = v - product();
            else
                return v;
        }
    }

    Value product() {
        Value v = power();
        for (;;) {
            if (eat('*'))
                v = v * power();
            else if (eat('/'))
                v = ops_.div(v, power());
            else
                return v;
        }
    }

    int exponent() {
        skip();
        bool neg = false;
        bool paren = eat('(');
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected integer exponent");
        int e = std::stoi(std::string(s_.substr(start, i_ - start)));
        if (paren && !eat(')')) fail("expected ')'");
        return neg ? -e : e;
    }

    Value power() {
        Value base = atom();
        if (eat('^')) return ops_.pow(base, exponent());
        return base;
    }

    Value atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Value v = sum();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == '-') {
            ++i_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return ops_.number(std::string(s_.substr(start, i_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            return ops_.variable(std::string(s_.substr(start, i_ - start)));
        }
        fail("unexpected character");
    }
};

}  // namespace detail
}  // namespace lgs
