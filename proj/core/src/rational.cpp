#include "hvs/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "hvs/errors.hpp"

namespace hvs {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw DomainError(std::string("rational overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational reduced(i128 num, i128 den, const char* what) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {narrow(num, what), narrow(den, what)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
    return reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_, "addition");
}

Rational operator-(const Rational& a, const Rational& b) {
    return reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                   i128(a.den_) * b.den_, "subtraction");
}

Rational operator*(const Rational& a, const Rational& b) {
    return reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "multiplication");
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "division");
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw DomainError("malformed rational '" + std::string(text) + "'"); };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](i128& out) -> std::size_t {
        std::size_t start = i;
        out = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out = out * 10 + (text[i] - '0');
            if (out > i128(std::numeric_limits<std::int64_t>::max()) * 10) fail();
            ++i;
        }
        return i - start;
    };

    i128 whole = 0;
    std::size_t whole_len = digits(whole);
    if (i < text.size() && text[i] == '/') {
        if (whole_len == 0) fail();
        ++i;
        i128 den = 0;
        if (digits(den) == 0 || i != text.size() || den == 0) fail();
        return reduced(negative ? -whole : whole, den, "parse");
    }
    if (i < text.size() && text[i] == '.') {
        ++i;
        i128 frac = 0;
        std::size_t frac_len = digits(frac);
        if ((whole_len == 0 && frac_len == 0) || i != text.size() || frac_len > 18) fail();
        i128 den = 1;
        for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
        i128 num = whole * den + frac;
        return reduced(negative ? -num : num, den, "parse");
    }
    if (whole_len == 0 || i != text.size()) fail();
    return reduced(negative ? -whole : whole, 1, "parse");
}

bool is_unit_grade(const Rational& r) { return r >= Rational(0) && r <= Rational(1); }

bool is_negative_unit_grade(const Rational& r) {
    return r >= Rational(-1) && r <= Rational(0);
}

}  // namespace hvs
