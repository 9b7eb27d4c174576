#include "mixsym/rational.hpp"

#include <regex>
#include <stdexcept>

namespace mixsym {

std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return to_fraction_string(r);
}

Rational parse_rational(const std::string& text) {
    static const std::regex pattern(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern)) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    Integer num(match[1].str().front() == '+' ? match[1].str().substr(1) : match[1].str());
    Integer den = match[2].matched ? Integer(match[2].str()) : Integer(1);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace mixsym
