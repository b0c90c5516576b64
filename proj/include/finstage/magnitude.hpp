#ifndef FINSTAGE_MAGNITUDE_HPP
#define FINSTAGE_MAGNITUDE_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "finstage/exactnum.hpp"

namespace finstage {

// Values with more decimal digits than this stay symbolic by default.
inline constexpr std::size_t kDefaultDigitBudget = 10000;

// Exact renderings longer than this print as 2^k when they are powers of two.
inline constexpr std::size_t kDefaultDisplayDigits = 19;

std::size_t decimal_digits(const BigNat& value);

// A natural number that is either materialized (Exact) or an exact symbolic
// power tower base^exponent whose exponent is itself a Magnitude.
class Magnitude {
public:
    Magnitude() : rep_(BigNat(0)) {}
    explicit Magnitude(BigNat value);

    static Magnitude exact(BigNat value) { return Magnitude(std::move(value)); }
    // base^exponent exactly as written, no canonicalization.
    static Magnitude tower(BigNat base, Magnitude exponent);
    // base^exponent in canonical form: Exact iff the value has at most
    // `digit_budget` decimal digits.
    static Magnitude power(BigNat base, Magnitude exponent, std::size_t digit_budget = kDefaultDigitBudget);

    Magnitude canonical(std::size_t digit_budget = kDefaultDigitBudget) const;

    bool is_exact() const noexcept { return std::holds_alternative<BigNat>(rep_); }
    const BigNat& value() const;
    const BigNat& base() const;
    const Magnitude& exponent() const;

    // Number of stacked exponentiations; 0 for Exact.
    std::size_t height() const;

    // The full value when every intermediate fits in `digit_budget` digits.
    std::optional<BigNat> expand(std::size_t digit_budget = kDefaultDigitBudget) const;

    // Exact values in decimal (powers of two past `display_digits` as 2^k);
    // towers as nested 2^(...) expressions.
    std::string to_string(std::size_t display_digits = kDefaultDisplayDigits) const;

private:
    struct Tower {
        BigNat base;
        std::shared_ptr<const Magnitude> exponent;
    };

    std::variant<BigNat, Tower> rep_;
};

// Exact total order. Towers are compared structurally (same-base exponents,
// common perfect-power roots, nested log2 enclosures); nothing larger than
// `digit_budget` decimal digits is ever expanded. Throws Undecided only when
// two towers of different roots agree in every enclosure tried.
std::strong_ordering magnitude_cmp(const Magnitude& a, const Magnitude& b,
                                   std::size_t digit_budget = kDefaultDigitBudget);

} // namespace finstage

#endif
