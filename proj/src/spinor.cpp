#include "spingeo/spinor.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace spingeo {

std::string SpinorIndex::name() const {
    if (mask == 0) return "1";
    std::string s = "e_{";
    for (int i = 1; i <= 5; ++i)
        if (contains(i)) s += static_cast<char>('0' + i);
    s += "}";
    return s;
}

Spinor Spinor::basis(unsigned mask) {
    Spinor s;
    s.amp_[mask] = CRat(1);
    return s;
}

bool Spinor::is_zero() const {
    for (const auto& a : amp_)
        if (!a.is_zero()) return false;
    return true;
}

Spinor Spinor::conj() const {
    Spinor s;
    for (unsigned m = 0; m < 32; ++m) s.amp_[m] = amp_[m].conj();
    return s;
}

Spinor operator+(const Spinor& a, const Spinor& b) {
    Spinor s;
    for (unsigned m = 0; m < 32; ++m) s.amp_[m] = a.amp_[m] + b.amp_[m];
    return s;
}

Spinor operator-(const Spinor& a, const Spinor& b) {
    Spinor s;
    for (unsigned m = 0; m < 32; ++m) s.amp_[m] = a.amp_[m] - b.amp_[m];
    return s;
}

Spinor operator-(const Spinor& a) {
    Spinor s;
    for (unsigned m = 0; m < 32; ++m) s.amp_[m] = -a.amp_[m];
    return s;
}

Spinor operator*(const CRat& c, const Spinor& a) {
    Spinor s;
    for (unsigned m = 0; m < 32; ++m) s.amp_[m] = c * a.amp_[m];
    return s;
}

Spinor& Spinor::operator+=(const Spinor& b) {
    for (unsigned m = 0; m < 32; ++m) amp_[m] += b.amp_[m];
    return *this;
}

Spinor& Spinor::operator-=(const Spinor& b) {
    for (unsigned m = 0; m < 32; ++m) amp_[m] -= b.amp_[m];
    return *this;
}

Spinor Spinor::primitive() const {
    BigInt g = 0, l = 1;
    for (const auto& a : amp_) {
        for (const Rational* q : {&a.re, &a.im}) {
            if (*q == 0) continue;
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(*q)));
            l = boost::multiprecision::lcm(l, denominator(*q));
        }
    }
    if (g == 0) return *this;
    CRat scale(Rational(l, g));
    for (const auto& a : amp_) {
        if (a.is_zero()) continue;
        if (a.re != 0 ? a.re < 0 : a.im < 0) scale = -scale;
        break;
    }
    return scale * (*this);
}

std::vector<Rational> Spinor::real_coords() const {
    std::vector<Rational> v;
    v.reserve(64);
    for (unsigned m = 0; m < 32; ++m) {
        v.push_back(amp_[m].re);
        v.push_back(amp_[m].im);
    }
    return v;
}

std::array<std::complex<double>, 32> Spinor::to_complex() const {
    std::array<std::complex<double>, 32> out;
    for (unsigned m = 0; m < 32; ++m) out[m] = amp_[m].to_complex();
    return out;
}

std::string Spinor::str() const {
    std::string s;
    for (unsigned m = 0; m < 32; ++m) {
        if (amp_[m].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(amp_[m]) + ")";
        SpinorIndex idx{m};
        if (m != 0) s += "*" + idx.name();
    }
    return s.empty() ? "0" : s;
}

namespace {

// Recursive-descent parser for the spinor text form.
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("spinor parse error at position " +
                                    std::to_string(pos) + ": " + what);
    }

    Spinor parse_expr() {
        Spinor acc;
        bool neg = eat('-');
        acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    // term := factor (('*'? factor))*, products of coefficients and at most
    // one basis monomial / parenthesized expression.
    Spinor parse_term() {
        CRat coeff(1);
        Spinor vec;
        bool have_vec = false;
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c == '(') {
                ++pos;
                Spinor inner = parse_expr();
                if (!eat(')')) fail("expected ')'");
                if (have_vec) fail("product of two spinor factors");
                vec = inner;
                have_vec = true;
            } else if (c == 'e') {
                if (have_vec) fail("product of two basis monomials");
                vec = parse_basis();
                have_vec = true;
            } else if (c == 'i' && !std::isdigit(static_cast<unsigned char>(peek_next()))) {
                ++pos;
                coeff *= CRat::unit_i();
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_number();
            } else if (c == '*') {
                ++pos;
            } else {
                break;
            }
        }
        if (!have_vec) vec = Spinor::scalar_one();
        return coeff * vec;
    }

    char peek_next() { return pos + 1 < s.size() ? s[pos + 1] : '\0'; }

    CRat parse_number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        Rational num(s.substr(start, pos - start));
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (dstart == pos) fail("expected denominator");
            Rational den(s.substr(dstart, pos - dstart));
            if (den == 0) fail("zero denominator");
            num /= den;
        }
        CRat c(num);
        skip_ws();
        if (pos < s.size() && s[pos] == 'i') {
            ++pos;
            c *= CRat::unit_i();
        }
        return c;
    }

    Spinor parse_basis() {
        // at 'e'
        ++pos;
        if (!eat('_')) fail("expected '_' after e");
        bool braced = eat('{');
        unsigned mask = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            int d = s[pos] - '0';
            if (d < 1 || d > 5) fail("basis index out of range 1..5");
            unsigned bit = 1u << (d - 1);
            if (mask & bit) fail("repeated basis index");
            mask |= bit;
            ++pos;
        }
        if (braced && !eat('}')) fail("expected '}'");
        if (mask == 0) fail("empty basis monomial");
        return Spinor::basis(mask);
    }
};

} // namespace

Spinor parse_spinor(const std::string& text) {
    Parser p(text);
    p.skip_ws();
    if (p.pos >= text.size()) throw std::invalid_argument("empty spinor expression");
    Spinor out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("trailing characters in spinor expression: '" +
                                    text.substr(p.pos) + "'");
    return out;
}

} // namespace spingeo
