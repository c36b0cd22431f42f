#include "dpfl/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "dpfl/errors.hpp"

namespace dpfl {

Rational frac(long p, long q) {
    if (q == 0) throw InvalidRange("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

mpz_class pow10(std::size_t k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty number");

    bool negative = false;
    if (s.front() == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("lone sign in '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed fraction '" + std::string(text) + "'");
        mpz_class p(std::string(num), 10);
        mpz_class q(std::string(den), 10);
        if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(p, q);
        value.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view fracpart = s.substr(dot + 1);
        if (!all_digits(whole) || !all_digits(fracpart))
            throw ParseError("malformed decimal '" + std::string(text) + "'");
        mpz_class scale = pow10(fracpart.size());
        mpz_class p = mpz_class(std::string(whole), 10) * scale + mpz_class(std::string(fracpart), 10);
        value = Rational(p, scale);
        value.canonicalize();
    } else {
        if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
        value = Rational(mpz_class(std::string(s), 10));
    }
    if (negative) value = -value;
    return value;
}

std::string to_fraction_string(const Rational& r) {
    return r.get_str();
}

std::string to_decimal_string(const Rational& r, int digits) {
    if (digits < 0) digits = 0;
    mpz_class num = abs(r.get_num());
    const mpz_class& den = r.get_den();
    mpz_class scale = pow10(static_cast<std::size_t>(digits));

    mpz_class scaled = num * scale;
    mpz_class q = scaled / den;
    mpz_class rem = scaled % den;
    bool exact = rem == 0;
    if (2 * rem >= den) q += 1;  // round half away from zero

    std::string d = q.get_str();
    std::string out;
    if (sgn(r) < 0 && q != 0) out += '-';
    if (digits == 0) {
        out += d;
    } else {
        if (d.size() <= static_cast<std::size_t>(digits))
            d.insert(0, static_cast<std::size_t>(digits) + 1 - d.size(), '0');
        out += d.substr(0, d.size() - digits);
        out += '.';
        out += d.substr(d.size() - digits);
    }
    if (!exact) out += '~';
    return out;
}

}  // namespace dpfl
