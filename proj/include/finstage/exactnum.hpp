#ifndef FINSTAGE_EXACTNUM_HPP
#define FINSTAGE_EXACTNUM_HPP

// Exact arithmetic kernel: arbitrary-precision integers and rationals, finite
// bit strings, canonical dyadic rationals and rational enclosures. Nothing in
// here touches floating point.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace finstage {

using BigInt = mpz_class;
// Natural numbers share the integer representation; every API taking a BigNat
// rejects negative values.
using BigNat = mpz_class;

BigNat parse_nat(std::string_view text);
std::string to_string(const BigInt& value);
std::size_t bit_length(const BigNat& value);
BigNat pow2(std::size_t exponent);
BigNat factorial(unsigned long n);

// Finite bit sequence after the radix point. Position 1 is the first bit
// behind the point; serialization is ASCII '0'/'1', position 1 first.
// Comparison is by exact bit sequence, never by value.
class BinaryString {
public:
    BinaryString() = default;

    static BinaryString parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    // 1-based. Positions past the end read as `padding`.
    int bit(std::size_t position, int padding = 0) const noexcept
    {
        if (position == 0 || position > bits_.size()) {
            return padding;
        }
        return bits_[position - 1] == '1' ? 1 : 0;
    }

    bool ends_in_one() const noexcept { return !bits_.empty() && bits_.back() == '1'; }

    void push_back(int bit) { bits_.push_back(bit ? '1' : '0'); }
    void set(std::size_t position, int bit) { bits_[position - 1] = bit ? '1' : '0'; }

    BinaryString trimmed() const;
    bool starts_with(const BinaryString& prefix) const;

    const std::string& str() const noexcept { return bits_; }

    friend bool operator==(const BinaryString&, const BinaryString&) = default;
    friend auto operator<=>(const BinaryString&, const BinaryString&) = default;

private:
    explicit BinaryString(std::string bits) : bits_(std::move(bits)) {}

    std::string bits_;
};

// Exact fraction in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}
    BigRational(const BigInt& value) : q_(value) {}
    BigRational(const BigInt& numerator, const BigInt& denominator);

    // Accepts "p/q" or "p".
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // "p/q", or just "p" for integers.
    std::string to_string() const;

    const mpq_class& raw() const noexcept { return q_; }

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ + b.q_)); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ - b.q_)); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(mpq_class(a.q_ * b.q_)); }
    friend BigRational operator/(const BigRational& a, const BigRational& b);
    friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

    BigRational& operator+=(const BigRational& other) { q_ += other.q_; return *this; }
    BigRational& operator*=(const BigRational& other) { q_ *= other.q_; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        return cmp(a.q_, b.q_) <=> 0;
    }

private:
    explicit BigRational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

BigRational rat_add(const BigRational& a, const BigRational& b);
BigRational rat_mul(const BigRational& a, const BigRational& b);
std::strong_ordering rat_cmp(const BigRational& a, const BigRational& b);

// 2^-k as an exact rational.
BigRational inverse_pow2(std::size_t k);

// Truncated (never rounded) decimal expansion with `digits` fractional digits.
// Appends "..." when the expansion does not terminate within `digits`.
std::string to_decimal(const BigRational& value, std::size_t digits);

// value = numerator / 2^exponent with an odd numerator (zero is {0, 0}).
class DyadicRational {
public:
    DyadicRational() = default;
    // Canonicalizes: factors of two move out of the numerator while the
    // exponent allows it.
    DyadicRational(BigNat numerator, std::size_t exponent);

    static std::optional<DyadicRational> from_rational(const BigRational& value);

    const BigNat& numerator() const noexcept { return numerator_; }
    std::size_t exponent() const noexcept { return exponent_; }
    BigRational value() const;
    std::string to_string() const { return value().to_string(); }

    friend bool operator==(const DyadicRational& a, const DyadicRational& b)
    {
        return a.exponent_ == b.exponent_ && a.numerator_ == b.numerator_;
    }

private:
    BigNat numerator_ = 0;
    std::size_t exponent_ = 0;
};

// Value of the bits read as a binary fraction, sum of s_i 2^-i.
DyadicRational dyadic_from_string(const BinaryString& bits);

class RationalInterval {
public:
    RationalInterval() = default;
    RationalInterval(BigRational lo, BigRational hi);
    static RationalInterval point(const BigRational& value) { return {value, value}; }

    const BigRational& lo() const noexcept { return lo_; }
    const BigRational& hi() const noexcept { return hi_; }
    BigRational width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RationalInterval& inner) const { return lo_ <= inner.lo_ && inner.hi_ <= hi_; }

    // "[lo, hi]"
    std::string to_string() const;

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    BigRational lo_;
    BigRational hi_;
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
// Scaling by a non-negative factor.
RationalInterval operator*(const BigRational& factor, const RationalInterval& interval);

// Enclosure of log2(value), value > 0, of width at most 2^-precision_bits.
// Exact point when value is a power of two.
RationalInterval log2_enclosure(const BigRational& value, std::size_t precision_bits);
// Enclosure of log2 over every point of `interval` (lo > 0).
RationalInterval log2_enclosure(const RationalInterval& interval, std::size_t precision_bits);

} // namespace finstage

#endif
