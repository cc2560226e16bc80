#ifndef MVL_TRUTH_VALUE_HPP
#define MVL_TRUTH_VALUE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mvl {

// Exact rational arithmetic everywhere. Residua are discontinuous on x = y,
// so floating point would corrupt tie cases.
using Rat = mpq_class;

// A rational in [0,1], canonical reduced form, exact equality.
class TruthValue {
public:
    TruthValue() : v_(0) {}

    explicit TruthValue(Rat v) : v_(std::move(v)) {
        v_.canonicalize();
        check_range(v_);
    }

    TruthValue(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("truth value: zero denominator");
        v_.canonicalize();
        check_range(v_);
    }

    static TruthValue zero() { return TruthValue(); }
    static TruthValue one() { return TruthValue(Rat(1)); }

    const Rat& rat() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    // 1 - x
    TruthValue complement() const { return TruthValue(1 - v_); }

    friend bool operator==(const TruthValue& a, const TruthValue& b) { return a.v_ == b.v_; }
    friend bool operator!=(const TruthValue& a, const TruthValue& b) { return a.v_ != b.v_; }
    friend bool operator<(const TruthValue& a, const TruthValue& b) { return a.v_ < b.v_; }
    friend bool operator<=(const TruthValue& a, const TruthValue& b) { return a.v_ <= b.v_; }
    friend bool operator>(const TruthValue& a, const TruthValue& b) { return a.v_ > b.v_; }
    friend bool operator>=(const TruthValue& a, const TruthValue& b) { return a.v_ >= b.v_; }

private:
    static void check_range(const Rat& v) {
        if (sgn(v) < 0 || v > 1) throw std::domain_error("truth value outside [0,1]: " + v.get_str());
    }

    Rat v_;
};

inline const TruthValue& tv_min(const TruthValue& a, const TruthValue& b) { return a <= b ? a : b; }
inline const TruthValue& tv_max(const TruthValue& a, const TruthValue& b) { return a >= b ? a : b; }

// Parses `p/q` or an integer. Decimal input is rejected (exactness contract).
Rat parse_rational(const std::string& text);

// Like parse_rational, with the [0,1] range check folded in.
TruthValue parse_truth_value(const std::string& text);

// `p/q`, or the bare integer when the denominator is 1.
std::string format_rational(const Rat& v);
inline std::string format_truth_value(const TruthValue& v) { return format_rational(v.rat()); }

// Decimal approximation with `sig_digits` significant digits, round-half-even,
// trailing zeros stripped. Exact terminating decimals print short ("0.5").
std::string to_decimal_string(const Rat& v, int sig_digits = 12);

}  // namespace mvl

#endif
