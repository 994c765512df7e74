#include "cocone/rational.hpp"

#include <limits>

namespace cocone {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw Error("empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den <= 0) throw Error("rational literal with nonpositive denominator: " + text);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw Error("bad rational literal '" + text + "': " + e.what());
    }
}

std::string to_decimal(const Rational& q, int digits) {
    Int num = numerator(q);
    Int den = denominator(q);
    std::string sign = num < 0 ? "-" : "";
    if (num < 0) num = -num;
    Int whole = num / den;
    Int rem = num % den;
    std::string out = sign + whole.str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += char('0' + int(rem / den));
        rem %= den;
    }
    return out;
}

std::int64_t checked_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw Error("integer out of int64 range: " + v.str());
    return static_cast<std::int64_t>(v);
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

} // namespace cocone
