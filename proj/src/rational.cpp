#include "lring/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace lring {

Integer factorial_int(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("zero raised to negative power");
        return Rational(0);
    }
    Rational acc = 1;
    Rational b = exp > 0 ? base : Rational(1) / base;
    int e = exp > 0 ? exp : -exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace lring
