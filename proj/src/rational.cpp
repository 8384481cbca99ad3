#include "lielimits/rational.hpp"

#include "lielimits/error.hpp"

#include <cctype>

namespace lielimits {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("not a rational number: '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t to_int64(const Integer& z, const char* what) {
    if (!z.fits_slong_p()) throw InternalError(std::string(what) + ": value does not fit in 64 bits");
    return z.get_si();
}

std::int64_t to_int64(const Rational& q, const char* what) {
    if (!is_integer(q)) throw InternalError(std::string(what) + ": expected an integer, got " + q.get_str());
    return to_int64(Integer(q.get_num()), what);
}

}  // namespace lielimits
