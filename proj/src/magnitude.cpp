#include "finstage/magnitude.hpp"

#include <array>
#include <stdexcept>

#include "finstage/error.hpp"

namespace finstage {

std::size_t decimal_digits(const BigNat& value)
{
    if (value == 0) {
        return 1;
    }
    std::size_t digits = mpz_sizeinbase(value.get_mpz_t(), 10);
    // sizeinbase may overshoot by one.
    BigNat threshold;
    mpz_ui_pow_ui(threshold.get_mpz_t(), 10, digits - 1);
    return abs(value) < threshold ? digits - 1 : digits;
}

Magnitude::Magnitude(BigNat value) : rep_(std::move(value))
{
    if (std::get<BigNat>(rep_) < 0) {
        throw std::domain_error("negative magnitude");
    }
}

Magnitude Magnitude::tower(BigNat base, Magnitude exponent)
{
    if (base < 0) {
        throw std::domain_error("negative tower base");
    }
    Magnitude m;
    m.rep_ = Tower{std::move(base), std::make_shared<const Magnitude>(std::move(exponent))};
    return m;
}

const BigNat& Magnitude::value() const
{
    if (!is_exact()) {
        throw std::logic_error("value() on a symbolic magnitude");
    }
    return std::get<BigNat>(rep_);
}

const BigNat& Magnitude::base() const
{
    if (is_exact()) {
        throw std::logic_error("base() on an exact magnitude");
    }
    return std::get<Tower>(rep_).base;
}

const Magnitude& Magnitude::exponent() const
{
    if (is_exact()) {
        throw std::logic_error("exponent() on an exact magnitude");
    }
    return *std::get<Tower>(rep_).exponent;
}

std::size_t Magnitude::height() const
{
    return is_exact() ? 0 : 1 + exponent().height();
}

namespace {

// base^exponent if it has at most `budget` digits.
std::optional<BigNat> bounded_power(const BigNat& base, const BigNat& exponent, std::size_t budget)
{
    if (base == 0) {
        return BigNat(exponent == 0 ? 1 : 0);
    }
    if (base == 1 || exponent == 0) {
        return BigNat(1);
    }
    // base^e >= 2^(e * (bitlen(base) - 1)) and 10^budget < 2^(4 * budget + 4).
    BigNat low_bits = exponent * BigNat(static_cast<unsigned long>(bit_length(base) - 1));
    if (low_bits > BigNat(static_cast<unsigned long>(4 * budget + 4))) {
        return std::nullopt;
    }
    if (!exponent.fits_ulong_p()) {
        return std::nullopt;
    }
    BigNat result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    if (decimal_digits(result) > budget) {
        return std::nullopt;
    }
    return result;
}

} // namespace

Magnitude Magnitude::power(BigNat base, Magnitude exponent, std::size_t digit_budget)
{
    return tower(std::move(base), std::move(exponent)).canonical(digit_budget);
}

Magnitude Magnitude::canonical(std::size_t digit_budget) const
{
    if (is_exact()) {
        return *this;
    }
    const BigNat& b = base();
    Magnitude e = exponent().canonical(digit_budget);
    if (b == 0) {
        // 0^e for e > 0; an unexpanded exponent is never zero.
        return Magnitude(BigNat(e.is_exact() && e.value() == 0 ? 1 : 0));
    }
    if (b == 1) {
        return Magnitude(BigNat(1));
    }
    if (e.is_exact()) {
        if (auto v = bounded_power(b, e.value(), digit_budget)) {
            return Magnitude(std::move(*v));
        }
    }
    return tower(b, std::move(e));
}

std::optional<BigNat> Magnitude::expand(std::size_t digit_budget) const
{
    if (is_exact()) {
        return value();
    }
    auto e = exponent().expand(digit_budget);
    if (!e) {
        return std::nullopt;
    }
    return bounded_power(base(), *e, digit_budget);
}

std::string Magnitude::to_string(std::size_t display_digits) const
{
    if (is_exact()) {
        const BigNat& v = value();
        std::string text = v.get_str(10);
        if (text.size() > display_digits && mpz_popcount(v.get_mpz_t()) == 1) {
            return "2^" + std::to_string(bit_length(v) - 1);
        }
        return text;
    }
    std::string exp = exponent().to_string(display_digits);
    if (exp.find('^') != std::string::npos) {
        exp = "(" + exp + ")";
    }
    return base().get_str(10) + "^" + exp;
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

// Smallest root r and largest k with b = r^k.
std::pair<BigNat, unsigned long> perfect_power_root(const BigNat& b)
{
    for (unsigned long k = bit_length(b); k >= 2; --k) {
        BigNat root;
        if (mpz_root(root.get_mpz_t(), b.get_mpz_t(), k) != 0) {
            return {root, k};
        }
    }
    return {b, 1};
}

std::optional<RationalInterval> iterate_log2(RationalInterval interval, std::size_t times, std::size_t precision)
{
    for (std::size_t i = 0; i < times; ++i) {
        if (interval.lo().sign() <= 0) {
            return std::nullopt;
        }
        interval = log2_enclosure(interval, precision);
    }
    return interval;
}

// Enclosure of log2 applied `level` times to the value of `m`. Towers need
// level >= 1; nullopt when the enclosure cannot be formed at this level.
// `m` must be canonical, so every tower base is at least 2.
std::optional<RationalInterval> log_level(const Magnitude& m, std::size_t level, std::size_t precision)
{
    if (m.is_exact()) {
        return iterate_log2(RationalInterval::point(BigRational(m.value())), level, precision);
    }
    if (level == 0) {
        return std::nullopt;
    }
    const Magnitude& e = m.exponent();
    RationalInterval log_base = log2_enclosure(BigRational(m.base()), precision);
    if (level == 1) {
        if (!e.is_exact()) {
            return std::nullopt;
        }
        return BigRational(e.value()) * log_base;
    }

    // log2(log2(b^e)) = log2(e) + log2(log2(b)), with log2(b) >= 1.
    RationalInterval log_log_base = log2_enclosure(log_base, precision);
    if (auto log_e = log_level(e, 1, precision)) {
        return iterate_log2(*log_e + log_log_base, level - 2, precision);
    }
    if (level == 2) {
        return std::nullopt;
    }

    // With u = log2(e) and s = log2(log2(b)) and u >= s >= 0:
    // log2(u + s) lies in [log2(u), log2(u) + 1].
    auto log_log_e = log_level(e, 2, precision);
    if (!log_log_e) {
        return std::nullopt;
    }
    if (log_log_base.hi().sign() > 0
        && log_log_e->lo() < log2_enclosure(log_log_base.hi(), precision).hi()) {
        return std::nullopt;
    }
    RationalInterval step{log_log_e->lo(), log_log_e->hi() + BigRational(1)};
    return iterate_log2(step, level - 3, precision);
}

std::strong_ordering compare_canonical(const Magnitude& a, const Magnitude& b, std::size_t budget);

std::strong_ordering compare_towers_by_root(const Magnitude& a, const Magnitude& b, bool& decided)
{
    decided = false;
    if (a.is_exact() || b.is_exact() || !a.exponent().is_exact() || !b.exponent().is_exact()) {
        return std::strong_ordering::equal;
    }
    auto [root_a, k_a] = perfect_power_root(a.base());
    auto [root_b, k_b] = perfect_power_root(b.base());
    if (root_a != root_b) {
        return std::strong_ordering::equal;
    }
    decided = true;
    BigNat lhs = a.exponent().value() * k_a;
    BigNat rhs = b.exponent().value() * k_b;
    return cmp(lhs, rhs) <=> 0;
}

std::strong_ordering compare_canonical(const Magnitude& a, const Magnitude& b, std::size_t budget)
{
    if (a.is_exact() && b.is_exact()) {
        return cmp(a.value(), b.value()) <=> 0;
    }
    // A canonical tower has more than `budget` digits.
    if (a.is_exact() && decimal_digits(a.value()) <= budget) {
        return std::strong_ordering::less;
    }
    if (b.is_exact() && decimal_digits(b.value()) <= budget) {
        return std::strong_ordering::greater;
    }
    // Oversized exact values: expand the tower when it is no longer than them.
    if (a.is_exact()) {
        if (auto v = b.expand(decimal_digits(a.value()) + 1)) {
            return cmp(a.value(), *v) <=> 0;
        }
    }
    if (b.is_exact()) {
        if (auto v = a.expand(decimal_digits(b.value()) + 1)) {
            return cmp(*v, b.value()) <=> 0;
        }
    }
    if (!a.is_exact() && !b.is_exact() && a.base() == b.base()) {
        return compare_canonical(a.exponent(), b.exponent(), budget);
    }

    bool decided = false;
    auto by_root = compare_towers_by_root(a, b, decided);
    if (decided) {
        return by_root;
    }

    const std::size_t top = std::max(a.height(), b.height());
    constexpr std::array<std::size_t, 4> precisions{64, 256, 1024, 4096};
    for (std::size_t precision : precisions) {
        for (std::size_t level = top; level <= top + 3; ++level) {
            auto ia = log_level(a, level, precision);
            auto ib = log_level(b, level, precision);
            if (!ia || !ib) {
                continue;
            }
            if (ia->hi() < ib->lo()) {
                return std::strong_ordering::less;
            }
            if (ib->hi() < ia->lo()) {
                return std::strong_ordering::greater;
            }
            // log2 is injective, so equal exact points mean equal values.
            if (ia->is_point() && ib->is_point()) {
                return std::strong_ordering::equal;
            }
        }
    }
    throw Undecided("lhs=" + a.to_string() + " rhs=" + b.to_string());
}

} // namespace

std::strong_ordering magnitude_cmp(const Magnitude& a, const Magnitude& b, std::size_t digit_budget)
{
    return compare_canonical(a.canonical(digit_budget), b.canonical(digit_budget), digit_budget);
}

} // namespace finstage
