#include "spingeo/rational.hpp"

#include <sstream>

namespace spingeo {

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string to_string(const CRat& c) {
    if (c.is_zero()) return "0";
    std::string s;
    if (c.re != 0) s += to_string(c.re);
    if (c.im != 0) {
        if (!s.empty() && c.im > 0) s += "+";
        if (c.im == -1) s += "-";
        else if (c.im != 1) s += to_string(c.im);
        s += "i";
    }
    return s;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    return Rational(s);
}

} // namespace spingeo
