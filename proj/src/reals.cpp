#include "finstage/reals.hpp"

#include <stdexcept>

#include "finstage/error.hpp"

namespace finstage {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

BigNat pow10(unsigned long exponent)
{
    BigNat result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

// 10^-(k!)
BigRational liouville_term(unsigned long k)
{
    // 10! decimal digits is already far past anything a stream needs.
    if (k > 9) {
        throw BudgetExceeded("liouville_term=" + std::to_string(k));
    }
    unsigned long exponent = 1;
    for (unsigned long i = 2; i <= k; ++i) {
        exponent *= i;
    }
    return BigRational(BigInt(1), pow10(exponent));
}

} // namespace

std::string_view kind_name(RealKind kind)
{
    switch (kind) {
    case RealKind::Rational: return "rational";
    case RealKind::SqrtFrac: return "sqrt_frac";
    case RealKind::EulerFrac: return "euler_frac";
    case RealKind::LiouvilleTau: return "liouville_tau";
    }
    return "unknown";
}

ComputableReal::ComputableReal(std::string name, State state)
    : name_(std::move(name)), state_(std::move(state))
{
}

ComputableReal ComputableReal::rational(const BigRational& value)
{
    if (value <= BigRational(0) || value >= BigRational(1)) {
        throw OutOfRange("value=" + value.to_string());
    }
    RationalState s{value.numerator(), value.denominator(), value.numerator()};
    return ComputableReal("rat:" + value.to_string(), std::move(s));
}

ComputableReal ComputableReal::sqrt_frac(const BigNat& a, const BigNat& b)
{
    if (a < 0 || b <= 0) {
        throw OutOfRange("sqrt=" + a.get_str() + "/" + b.get_str());
    }
    BigNat offset;
    BigNat quotient = a / b;
    mpz_sqrt(offset.get_mpz_t(), quotient.get_mpz_t());
    // frac(sqrt(a/b)) = 0 exactly when offset^2 * b == a.
    if (offset * offset * b == a) {
        throw OutOfRange("sqrt=" + a.get_str() + "/" + b.get_str());
    }
    std::string name = b == 1 ? "sqrt" + a.get_str() : "sqrt" + a.get_str() + "/" + b.get_str();
    return ComputableReal(std::move(name), SqrtState{a, b, offset, offset, a});
}

ComputableReal ComputableReal::euler_frac()
{
    return ComputableReal("e", EulerState{});
}

ComputableReal ComputableReal::liouville_tau()
{
    return ComputableReal("tau", LiouvilleState{});
}

ComputableReal ComputableReal::from_name(std::string_view name)
{
    if (name == "sqrt2") {
        return sqrt_frac(2, 1);
    }
    if (name == "e") {
        return euler_frac();
    }
    if (name == "tau") {
        return liouville_tau();
    }
    if (name.starts_with("rat:")) {
        return rational(BigRational::parse(name.substr(4)));
    }
    throw InvalidInput("real=" + std::string(name));
}

RealKind ComputableReal::kind() const noexcept
{
    return static_cast<RealKind>(state_.index());
}

RationalInterval ComputableReal::enclosure() const
{
    return std::visit(
        overloaded{
            [](const EulerState& s) {
                BigRational lo = BigRational(s.sum_scaled, s.fact) - BigRational(2);
                BigRational width(BigInt(1), s.fact * s.n);
                return RationalInterval(lo, lo + width);
            },
            [](const LiouvilleState& s) {
                return RationalInterval(s.partial, s.partial + BigRational(2) * liouville_term(s.m + 1));
            },
            [](const auto&) -> RationalInterval { throw std::logic_error("not an enclosure kind"); },
        },
        state_);
}

void ComputableReal::refine()
{
    std::visit(overloaded{
                   [](EulerState& s) {
                       ++s.n;
                       s.fact *= s.n;
                       s.sum_scaled = s.sum_scaled * s.n + 1;
                   },
                   [](LiouvilleState& s) {
                       ++s.m;
                       s.partial += liouville_term(s.m);
                   },
                   [](auto&) { throw std::logic_error("not an enclosure kind"); },
               },
               state_);
}

int ComputableReal::next_bit()
{
    const std::size_t d = depth();
    int bit = 0;
    switch (kind()) {
    case RealKind::Rational: {
        auto& s = std::get<RationalState>(state_);
        s.remainder <<= 1;
        if (s.remainder >= s.q) {
            bit = 1;
            s.remainder -= s.q;
        }
        if (s.remainder == 0 && !boundary_depth_) {
            boundary_depth_ = d + 1;
        }
        break;
    }
    case RealKind::SqrtFrac: {
        auto& s = std::get<SqrtState>(state_);
        s.a_pow4 <<= 2;
        BigNat candidate = 2 * s.scaled + 1;
        if (candidate * candidate * s.b <= s.a_pow4) {
            bit = 1;
            s.scaled = std::move(candidate);
        } else {
            s.scaled <<= 1;
        }
        break;
    }
    case RealKind::EulerFrac:
    case RealKind::LiouvilleTau: {
        // midpoint of [P/2^d, (P+1)/2^d]
        BigRational mid(2 * prefix_value_ + 1, pow2(d + 1));
        for (;;) {
            RationalInterval box = enclosure();
            if (box.hi() < mid) {
                bit = 0;
                break;
            }
            if (box.lo() > mid) {
                bit = 1;
                break;
            }
            refine();
        }
        break;
    }
    }
    prefix_value_ = 2 * prefix_value_ + bit;
    bits_.push_back(bit);
    return bit;
}

BinaryString ComputableReal::prefix(std::size_t d)
{
    if (d == 0) {
        throw DepthZero();
    }
    while (depth() < d) {
        next_bit();
    }
    if (depth() == d) {
        return bits_;
    }
    return BinaryString::parse(std::string_view(bits_.str()).substr(0, d));
}

bool ComputableReal::certify() const
{
    const std::size_t d = depth();
    const BigNat& prefix_p = prefix_value_;
    switch (kind()) {
    case RealKind::Rational: {
        const auto& s = std::get<RationalState>(state_);
        BigNat scaled = s.p << static_cast<mp_bitcnt_t>(d);
        return prefix_p * s.q <= scaled && scaled < (prefix_p + 1) * s.q;
    }
    case RealKind::SqrtFrac: {
        const auto& s = std::get<SqrtState>(state_);
        BigNat shifted = prefix_p + (s.offset << static_cast<mp_bitcnt_t>(d));
        BigNat rhs = s.a << static_cast<mp_bitcnt_t>(2 * d);
        return shifted * shifted * s.b <= rhs && rhs < (shifted + 1) * (shifted + 1) * s.b;
    }
    case RealKind::EulerFrac:
    case RealKind::LiouvilleTau: {
        RationalInterval box = enclosure();
        BigInt unit = pow2(d);
        return BigRational(prefix_p, unit) <= box.lo() && box.hi() <= BigRational(prefix_p + 1, unit);
    }
    }
    return false;
}

bool ComputableReal::strictly_above_prefix() const
{
    const std::size_t d = depth();
    switch (kind()) {
    case RealKind::Rational:
        return std::get<RationalState>(state_).remainder != 0;
    case RealKind::SqrtFrac: {
        const auto& s = std::get<SqrtState>(state_);
        BigNat shifted = prefix_value_ + (s.offset << static_cast<mp_bitcnt_t>(d));
        return shifted * shifted * s.b < (s.a << static_cast<mp_bitcnt_t>(2 * d));
    }
    case RealKind::EulerFrac:
    case RealKind::LiouvilleTau:
        return enclosure().lo() > BigRational(prefix_value_, pow2(d));
    }
    return false;
}

bool ComputableReal::is_dyadic() const
{
    if (kind() != RealKind::Rational) {
        return false;
    }
    const auto& s = std::get<RationalState>(state_);
    return mpz_popcount(s.q.get_mpz_t()) == 1;
}

std::optional<BigRational> ComputableReal::exact_value() const
{
    if (kind() != RealKind::Rational) {
        return std::nullopt;
    }
    const auto& s = std::get<RationalState>(state_);
    return BigRational(s.p, s.q);
}

std::optional<unsigned long> ComputableReal::enclosure_index() const
{
    if (const auto* e = std::get_if<EulerState>(&state_)) {
        return e->n;
    }
    if (const auto* l = std::get_if<LiouvilleState>(&state_)) {
        return l->m;
    }
    return std::nullopt;
}

} // namespace finstage
