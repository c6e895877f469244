#include "mrbla/rational.hpp"

#include "mrbla/errors.hpp"

#include <cctype>

namespace mrbla {

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) {
        return x.get_num().get_str();
    }
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool plain_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

Rational rational_from_string(const std::string& text, bool strict) {
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!plain_integer(num) || !plain_integer(den) || den[0] == '-') {
        throw MalformedInputError("not a rational literal: \"" + text + "\"");
    }
    Rational x;
    if (x.set_str(num + "/" + den, 10) != 0) {
        throw MalformedInputError("not a rational literal: \"" + text + "\"");
    }
    if (x.get_den() == 0) {
        throw MalformedInputError("zero denominator: \"" + text + "\"");
    }
    x.canonicalize();
    if (strict && to_string(x) != text) {
        throw MalformedInputError("non-canonical rational \"" + text + "\" (canonical form is \"" +
                                  to_string(x) + "\")");
    }
    return x;
}

Rational pow_rational(const Rational& base, int exponent) {
    Rational out = 1;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

} // namespace mrbla
