#include "finstage/exactnum.hpp"

#include <algorithm>
#include <stdexcept>

#include "finstage/error.hpp"

namespace finstage {

BigNat parse_nat(std::string_view text)
{
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw InvalidInput("natural=" + std::string(text));
    }
    return BigNat(std::string(text), 10);
}

std::string to_string(const BigInt& value)
{
    return value.get_str(10);
}

std::size_t bit_length(const BigNat& value)
{
    return value == 0 ? 0 : mpz_sizeinbase(value.get_mpz_t(), 2);
}

BigNat pow2(std::size_t exponent)
{
    BigNat result;
    mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
    return result;
}

BigNat factorial(unsigned long n)
{
    BigNat result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

// ---------------------------------------------------------------------------
// BinaryString

BinaryString BinaryString::parse(std::string_view text)
{
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c == '0' || c == '1'; })) {
        throw InvalidInput("bits=" + std::string(text));
    }
    return BinaryString(std::string(text));
}

BinaryString BinaryString::trimmed() const
{
    auto last = bits_.find_last_of('1');
    if (last == std::string::npos) {
        return {};
    }
    return BinaryString(bits_.substr(0, last + 1));
}

bool BinaryString::starts_with(const BinaryString& prefix) const
{
    return bits_.starts_with(prefix.bits_);
}

// ---------------------------------------------------------------------------
// BigRational

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator)
    : q_(numerator, denominator)
{
    if (denominator == 0) {
        throw std::domain_error("zero denominator");
    }
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::string_view digits = part;
        if (!digits.empty() && digits.front() == '-') {
            digits.remove_prefix(1);
        }
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InvalidInput("rational=" + std::string(text));
        }
        return BigInt(std::string(part), 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_int(text));
    }
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw InvalidInput("rational=" + std::string(text));
    }
    return BigRational(num, den);
}

std::string BigRational::to_string() const
{
    return q_.get_str(10);
}

BigRational operator/(const BigRational& a, const BigRational& b)
{
    if (b.q_ == 0) {
        throw std::domain_error("division by zero");
    }
    return BigRational(mpq_class(a.q_ / b.q_));
}

BigRational rat_add(const BigRational& a, const BigRational& b) { return a + b; }
BigRational rat_mul(const BigRational& a, const BigRational& b) { return a * b; }
std::strong_ordering rat_cmp(const BigRational& a, const BigRational& b) { return a <=> b; }

BigRational inverse_pow2(std::size_t k)
{
    return BigRational(BigInt(1), pow2(k));
}

std::string to_decimal(const BigRational& value, std::size_t digits)
{
    BigInt num = abs(value.numerator());
    BigInt den = value.denominator();
    BigInt whole = num / den;
    BigInt rem = num % den;

    std::string out = value.sign() < 0 ? "-" : "";
    out += whole.get_str(10);
    if (digits > 0) {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
        BigInt scaled = rem * scale;
        BigInt frac = scaled / den;
        rem = scaled % den;
        std::string frac_digits = frac.get_str(10);
        out += '.';
        out.append(digits - frac_digits.size(), '0');
        out += frac_digits;
    }
    if (rem != 0) {
        out += "...";
    }
    return out;
}

// ---------------------------------------------------------------------------
// DyadicRational

DyadicRational::DyadicRational(BigNat numerator, std::size_t exponent)
    : numerator_(std::move(numerator)), exponent_(exponent)
{
    if (numerator_ < 0) {
        throw std::domain_error("negative dyadic numerator");
    }
    if (numerator_ == 0) {
        exponent_ = 0;
        return;
    }
    std::size_t twos = mpz_scan1(numerator_.get_mpz_t(), 0);
    std::size_t shift = std::min(twos, exponent_);
    numerator_ >>= shift;
    exponent_ -= shift;
}

std::optional<DyadicRational> DyadicRational::from_rational(const BigRational& value)
{
    if (value.sign() < 0) {
        return std::nullopt;
    }
    BigInt den = value.denominator();
    if (mpz_popcount(den.get_mpz_t()) != 1) {
        return std::nullopt;
    }
    return DyadicRational(value.numerator(), bit_length(den) - 1);
}

BigRational DyadicRational::value() const
{
    return BigRational(numerator_, pow2(exponent_));
}

DyadicRational dyadic_from_string(const BinaryString& bits)
{
    if (bits.empty()) {
        throw EmptyString();
    }
    BigNat numerator(bits.str(), 2);
    return DyadicRational(std::move(numerator), bits.size());
}

// ---------------------------------------------------------------------------
// RationalInterval

RationalInterval::RationalInterval(BigRational lo, BigRational hi)
    : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_) {
        throw std::domain_error("interval with hi < lo");
    }
}

std::string RationalInterval::to_string() const
{
    return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b)
{
    return {a.lo() + b.lo(), a.hi() + b.hi()};
}

RationalInterval operator*(const BigRational& factor, const RationalInterval& interval)
{
    if (factor.sign() < 0) {
        throw std::domain_error("negative interval scale");
    }
    return {factor * interval.lo(), factor * interval.hi()};
}

namespace {

// log2(num/den) for num/den >= 1 to `precision` fractional bits.
//
// Writes num/den = 2^k * y with y in [1, 2); the fractional bits of log2(y)
// come from repeated squaring (y^2 >= 2 means the next bit is 1). The square
// is tracked as an outward-rounded fixed-point pair; when the pair straddles 2
// the working precision is raised and the run restarts.
RationalInterval log2_at_least_one(const BigInt& num, const BigInt& den, std::size_t precision)
{
    long k = static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den));
    BigInt den_scaled = den << static_cast<mp_bitcnt_t>(k);
    if (num < den_scaled) {
        --k;
        den_scaled >>= 1;
    }
    if (num == den_scaled) {
        return RationalInterval::point(BigRational(k));
    }

    for (std::size_t guard = 32;; guard *= 2) {
        const std::size_t work = precision + guard;
        BigInt scaled = num << static_cast<mp_bitcnt_t>(work);
        BigInt lo, hi;
        mpz_fdiv_q(lo.get_mpz_t(), scaled.get_mpz_t(), den_scaled.get_mpz_t());
        mpz_cdiv_q(hi.get_mpz_t(), scaled.get_mpz_t(), den_scaled.get_mpz_t());
        const BigInt two = pow2(work + 1);

        BigInt bits = 0;
        bool ambiguous = false;
        for (std::size_t i = 0; i < precision; ++i) {
            lo = lo * lo;
            mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), work);
            hi = hi * hi;
            mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), work);
            bits <<= 1;
            if (lo >= two) {
                bits += 1;
                mpz_fdiv_q_2exp(lo.get_mpz_t(), lo.get_mpz_t(), 1);
                mpz_cdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), 1);
            } else if (hi >= two) {
                ambiguous = true;
                break;
            }
        }
        if (!ambiguous) {
            BigInt unit = pow2(precision);
            BigRational base(k);
            return {base + BigRational(bits, unit), base + BigRational(bits + 1, unit)};
        }
    }
}

} // namespace

RationalInterval log2_enclosure(const BigRational& value, std::size_t precision_bits)
{
    if (value.sign() <= 0) {
        throw std::domain_error("log2 of a non-positive value");
    }
    if (value.numerator() >= value.denominator()) {
        return log2_at_least_one(value.numerator(), value.denominator(), precision_bits);
    }
    auto inverse = log2_at_least_one(value.denominator(), value.numerator(), precision_bits);
    return {-inverse.hi(), -inverse.lo()};
}

RationalInterval log2_enclosure(const RationalInterval& interval, std::size_t precision_bits)
{
    return {log2_enclosure(interval.lo(), precision_bits).lo(),
            log2_enclosure(interval.hi(), precision_bits).hi()};
}

} // namespace finstage
