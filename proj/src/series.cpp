#include "finstage/series.hpp"

#include "finstage/error.hpp"

namespace finstage {

namespace {

struct SplitSum {
    BigInt numerator;
    BigInt denominator;
};

// Unreduced numerator/denominator of sum 1/i over [first, last].
SplitSum split_harmonic(unsigned long first, unsigned long last)
{
    if (last - first < 8) {
        SplitSum s{0, 1};
        for (unsigned long i = first; i <= last; ++i) {
            s.numerator = s.numerator * i + s.denominator;
            s.denominator *= i;
        }
        return s;
    }
    unsigned long mid = first + (last - first) / 2;
    SplitSum left = split_harmonic(first, mid);
    SplitSum right = split_harmonic(mid + 1, last);
    return {left.numerator * right.denominator + right.numerator * left.denominator,
            left.denominator * right.denominator};
}

} // namespace

BigRational harmonic_range(unsigned long first, unsigned long last)
{
    if (first == 0) {
        throw OutOfRange("first=0");
    }
    if (last < first) {
        return BigRational(0);
    }
    if (last - first < kHarmonicFoldLimit) {
        BigRational sum;
        for (unsigned long i = first; i <= last; ++i) {
            sum += BigRational(BigInt(1), BigInt(i));
        }
        return sum;
    }
    SplitSum s = split_harmonic(first, last);
    return BigRational(s.numerator, s.denominator);
}

BigRational harmonic_partial(unsigned long n)
{
    if (n == 0) {
        throw OutOfRange("n=0");
    }
    return harmonic_range(1, n);
}

OresmeBlock oresme_block(unsigned long k)
{
    if (k == 0 || k >= 63) {
        throw OutOfRange("k=" + std::to_string(k));
    }
    const unsigned long first = (1UL << (k - 1)) + 1;
    const unsigned long last = 1UL << k;
    OresmeBlock block;
    block.k = k;
    block.sum = harmonic_range(first, last);
    block.at_least_half = block.sum >= BigRational(BigInt(1), BigInt(2));
    block.first_denominator = first;
    block.last_denominator = last;
    block.denominators_so_far = pow2(k);
    return block;
}

GeometricCheck geometric_partial(unsigned long n)
{
    if (n == 0) {
        throw OutOfRange("n=0");
    }
    GeometricCheck check;
    for (unsigned long i = 1; i <= n; ++i) {
        check.term_sum += inverse_pow2(i);
    }
    check.closed_form = BigRational(1) - inverse_pow2(n);
    check.agree = check.term_sum == check.closed_form;
    return check;
}

Enclosure e_enclosure(unsigned long n)
{
    if (n == 0) {
        throw OutOfRange("n=0");
    }
    // scaled = n! * S_n, built by Horner: scaled_v = v * scaled_{v-1} + 1.
    BigInt scaled = 1;
    BigInt fact = 1;
    for (unsigned long v = 1; v <= n; ++v) {
        fact *= v;
        scaled = scaled * v + 1;
    }
    BigRational lo(scaled, fact);
    BigRational hi = lo + BigRational(BigInt(1), fact * n);
    return {n, RationalInterval(lo, hi)};
}

std::string certified_decimals(const RationalInterval& interval, std::size_t max_fraction_digits)
{
    if (interval.lo().sign() < 0) {
        throw OutOfRange("interval=" + interval.to_string());
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, max_fraction_digits);
    auto truncated = [&](const BigRational& x) {
        BigInt scaled = x.numerator() * scale / x.denominator();
        return scaled;
    };
    BigInt lo = truncated(interval.lo());
    BigInt hi = truncated(interval.hi());
    BigInt whole_lo = lo / scale;
    if (whole_lo != hi / scale) {
        return {};
    }
    std::string lo_frac = BigInt(lo % scale).get_str(10);
    std::string hi_frac = BigInt(hi % scale).get_str(10);
    lo_frac.insert(0, max_fraction_digits - lo_frac.size(), '0');
    hi_frac.insert(0, max_fraction_digits - hi_frac.size(), '0');
    std::size_t common = 0;
    while (common < max_fraction_digits && lo_frac[common] == hi_frac[common]) {
        ++common;
    }
    std::string out = whole_lo.get_str(10);
    if (common > 0) {
        out += '.';
        out += lo_frac.substr(0, common);
    }
    return out;
}

LiouvillePartial liouville_partial(unsigned long m, unsigned long cap)
{
    if (m == 0) {
        throw OutOfRange("m=0");
    }
    if (m > cap) {
        throw BudgetExceeded("m=" + std::to_string(m) + " cap=" + std::to_string(cap));
    }
    LiouvillePartial out;
    out.m = m;
    unsigned long fact = 1;
    for (unsigned long v = 1; v <= m; ++v) {
        fact *= v;
        out.factorials.push_back(fact);
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fact);
        out.sum += BigRational(BigInt(1), den);
    }

    // The sum terminates after m! decimals.
    std::string expansion = to_decimal(out.sum, fact);
    std::string digits = expansion.substr(expansion.find('.') + 1);
    bool only_binary_digits = expansion.starts_with("0.") && !expansion.ends_with("...");
    for (std::size_t p = 0; p < digits.size(); ++p) {
        if (digits[p] == '1') {
            out.one_positions.push_back(p + 1);
        } else if (digits[p] != '0') {
            only_binary_digits = false;
        }
    }
    out.digits_match = only_binary_digits && out.one_positions == out.factorials;

    BigInt tail_den;
    mpz_ui_pow_ui(tail_den.get_mpz_t(), 10, fact * (m + 1));
    out.tail_bound = BigRational(BigInt(2), tail_den);
    return out;
}

} // namespace finstage
