#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hvs {

/// Exact signed rational, always stored in lowest terms with a positive
/// denominator. All membership grades run through this type so that
/// sup/inf and equality are exact; there is no floating point anywhere
/// in the engine.
///
/// Intermediates use 128-bit arithmetic; results that do not fit back
/// into 64 bits after reduction throw DomainError (unreachable for
/// grade-sized values).
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts "p", "p/q", and decimal literals like "0.3" or "-.25".
    static Rational parse(std::string_view text);

    [[nodiscard]] std::int64_t num() const { return num_; }
    [[nodiscard]] std::int64_t den() const { return den_; }

    /// Canonical form: "p" when the denominator is 1, else "p/q".
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// 0 ≤ r ≤ 1, the codomain of positive grades.
bool is_unit_grade(const Rational& r);
/// −1 ≤ r ≤ 0, the codomain of negative grades.
bool is_negative_unit_grade(const Rational& r);

}  // namespace hvs
