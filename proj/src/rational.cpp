#include "slrk/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace slrk {

namespace {

// Leading zeros would make the multiprecision parser read octal.
BigInt from_digits(std::string_view s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(s.substr(first)));
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
    BigInt value = from_digits(s);
    return negative ? BigInt(-value) : value;
}

BigInt pow10(long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) {
            throw std::invalid_argument("malformed exponent in '" + std::string(s) + "'");
        }
        exponent = std::stoll(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw std::invalid_argument("malformed decimal '" + std::string(s) + "'");
        }
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long long>(frac.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(s) + "'");
        digits = std::string(s);
    }
    Rational value{from_digits(digits)};
    if (exponent >= 0) {
        value *= pow10(exponent);
    } else {
        value /= pow10(-exponent);
    }
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
        BigInt den = parse_integer(den_text);
        if (den == 0) throw std::domain_error("zero denominator in '" + std::string(text) + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text);
    return Rational(parse_integer(text));
}

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("non-finite value has no rational form");
    int exponent = 0;
    double mantissa = std::frexp(x, &exponent);
    // 53 bits of mantissa become an exact integer.
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational value{BigInt(scaled)};
    BigInt scale = 1;
    scale <<= std::abs(exponent);
    if (exponent >= 0) {
        value *= scale;
    } else {
        value /= scale;
    }
    return value;
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational result = 1;
    Rational factor = base;
    while (exponent > 0) {
        if (exponent & 1) result *= factor;
        factor *= factor;
        exponent >>= 1;
    }
    return result;
}

Rational best_rational(const Rational& x, const BigInt& max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("max_denominator must be positive");
    if (boost::multiprecision::denominator(x) <= max_denominator) return x;

    // Convergents p/q of the continued fraction of x.
    BigInt p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    BigInt n = boost::multiprecision::numerator(x);
    BigInt d = boost::multiprecision::denominator(x);
    while (true) {
        BigInt a = n / d;
        if (n < 0 && a * d != n) a -= 1;  // floor
        const BigInt q2 = q0 + a * q1;
        if (q2 > max_denominator) break;
        const BigInt p2 = p0 + a * p1;
        p0 = p1; q0 = q1;
        p1 = p2; q1 = q2;
        const BigInt rem = n - a * d;
        n = d;
        d = rem;
        if (d == 0) break;
    }
    // Best semiconvergent versus last convergent.
    const BigInt k = (max_denominator - q0) / q1;
    const Rational bound1(p0 + k * p1, q0 + k * q1);
    const Rational bound2(p1, q1);
    const Rational e1 = abs(bound1 - x);
    const Rational e2 = abs(bound2 - x);
    return e2 <= e1 ? bound2 : bound1;
}

Rational best_rational(double x, long long max_denominator) {
    return best_rational(from_double(x), BigInt(max_denominator));
}

}  // namespace slrk
