#include "mvl/truth_value.hpp"

#include <cctype>

namespace mvl {

namespace {

bool is_integer_text(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("decimal literals are rejected, use p/q: '" + text + "'");
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_text(s)) throw std::invalid_argument("malformed rational literal: '" + text + "'");
        return Rat(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den))
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    mpz_class d(den);
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

TruthValue parse_truth_value(const std::string& text) { return TruthValue(parse_rational(text)); }

std::string format_rational(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_str();
}

std::string to_decimal_string(const Rat& v, int sig_digits) {
    if (sgn(v) == 0) return "0";
    std::string sign = sgn(v) < 0 ? "-" : "";
    mpz_class p = abs(v.get_num()), q = v.get_den();

    // Decimal exponent e with 10^e <= p/q < 10^(e+1).
    long e = 0;
    mpz_class lo = p, hi = q;  // invariant: value = lo/hi * 10^e
    while (lo < hi) {
        lo *= 10;
        --e;
    }
    while (lo >= 10 * hi) {
        hi *= 10;
        ++e;
    }

    // Round p/q * 10^(sig-1-e) half-to-even.
    mpz_class num = p, den = q;
    long shift = sig_digits - 1 - e;
    if (shift >= 0) {
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= pow10;
    } else {
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= pow10;
    }
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    mpz_class twice = 2 * rem;
    if (twice > den || (twice == den && mpz_odd_p(quot.get_mpz_t())))
        quot += 1;

    std::string digits = quot.get_str();
    if (static_cast<int>(digits.size()) > sig_digits) {
        // Rounding carried into one more digit (e.g. 999.. -> 1000..).
        ++e;
        digits.pop_back();
    }

    std::string out;
    if (e >= 0) {
        out = digits.substr(0, static_cast<std::size_t>(e) + 1);
        std::string frac = digits.substr(static_cast<std::size_t>(e) + 1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    } else {
        std::string frac(static_cast<std::size_t>(-e - 1), '0');
        frac += digits;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = frac.empty() ? "0" : "0." + frac;
    }
    return sign + out;
}

}  // namespace mvl
