#include "finstage/table3.hpp"

#include <algorithm>

#include "finstage/error.hpp"

namespace finstage {

namespace {

void require_positive(const BigNat& n)
{
    if (n <= 0) {
        throw ZeroIndex("n=" + n.get_str());
    }
}

} // namespace

BigNat ColumnPosition::index() const
{
    return pow2(column.get_ui() - 1) + offset;
}

BinaryString index_to_string(const BigNat& n)
{
    require_positive(n);
    const std::size_t length = bit_length(n);
    BinaryString bits;
    for (std::size_t i = 0; i < length; ++i) {
        bits.push_back(mpz_tstbit(n.get_mpz_t(), i));
    }
    return bits;
}

BinaryString index_to_string_recursive(const BigNat& n)
{
    require_positive(n);
    ColumnPosition pos = column_of(n);

    // Walk back through the columns collecting the prefixed bit of each one;
    // column 1 contributes the final "1".
    std::string bits;
    BigNat offset = pos.offset;
    for (BigNat column = pos.column; column > 1; --column) {
        bits.push_back(offset % 2 == 0 ? '0' : '1');
        offset /= 2;
    }
    bits.push_back('1');
    return BinaryString::parse(bits);
}

BigNat string_to_index(const BinaryString& bits)
{
    if (bits.empty()) {
        throw EmptyString();
    }
    if (!bits.ends_in_one()) {
        BinaryString trimmed = bits.trimmed();
        throw NotInImage(trimmed.empty() ? std::string() : string_to_index(trimmed).get_str());
    }
    std::string reversed(bits.str().rbegin(), bits.str().rend());
    return BigNat(reversed, 2);
}

ColumnPosition column_of(const BigNat& n)
{
    require_positive(n);
    const std::size_t k = bit_length(n);
    return {BigNat(static_cast<unsigned long>(k)), n - pow2(k - 1)};
}

std::optional<BinaryString> Table3Enumerator::next_bits()
{
    if (limit_ && index_ >= *limit_) {
        return std::nullopt;
    }
    ++index_;
    // Adding 1 to n ripples a carry from position 1 of the reversed digits.
    std::size_t pos = 1;
    while (pos <= bits_.size() && bits_.bit(pos) == 1) {
        bits_.set(pos, 0);
        ++pos;
    }
    if (pos > bits_.size()) {
        bits_.push_back(1);
    } else {
        bits_.set(pos, 1);
    }
    return bits_;
}

std::optional<Table3Entry> Table3Enumerator::next()
{
    auto bits = next_bits();
    if (!bits) {
        return std::nullopt;
    }
    DyadicRational value = dyadic_from_string(*bits);
    return Table3Entry{index_, std::move(*bits), std::move(value)};
}

Table3Enumerator enumerate_prefix(const BigNat& count)
{
    if (count < 0) {
        throw OutOfRange("count=" + count.get_str());
    }
    return Table3Enumerator(count);
}

std::vector<Table3Entry> collect_prefix(const BigNat& count)
{
    std::vector<Table3Entry> entries;
    auto gen = enumerate_prefix(count);
    while (auto entry = gen.next()) {
        entries.push_back(std::move(*entry));
    }
    return entries;
}

BigNat locate_value(const DyadicRational& value)
{
    // Odd numerator below 2^k with k >= 1 is exactly 0 < value < 1.
    if (value.exponent() == 0 || value.numerator() <= 0
        || value.numerator() >= pow2(value.exponent())) {
        throw OutOfRange("value=" + value.to_string());
    }
    std::string digits = value.numerator().get_str(2);
    std::string bits(value.exponent() - digits.size(), '0');
    bits += digits;
    return string_to_index(BinaryString::parse(bits));
}

ApproximationReport approximate(ComputableReal x, std::size_t depth)
{
    if (depth == 0) {
        throw DepthZero();
    }
    ApproximationReport report;
    report.prefix = x.prefix(depth);
    const int next = x.prefix(depth + 1).bit(depth + 1);

    const BigNat lower(report.prefix.str(), 2);
    const BigNat upper = lower + 1;
    const BigNat full = pow2(depth);

    // x lies in [lower, upper) / 2^depth; the next bit says which half.
    BigNat chosen;
    std::size_t bound_exponent = depth + 1;
    if (next == 0) {
        chosen = lower > 0 ? lower : upper;
        if (lower == 0) {
            bound_exponent = depth;
        }
    } else {
        chosen = upper < full ? upper : lower;
        if (upper == full) {
            bound_exponent = depth;
        }
    }
    report.best_value = DyadicRational(chosen, depth);
    report.best_index = locate_value(report.best_value);
    report.error_bound = inverse_pow2(bound_exponent);

    if (x.is_dyadic()) {
        auto value = DyadicRational::from_rational(*x.exact_value());
        report.verdict = Membership::ExactMember;
        report.member_index = locate_value(*value);
        report.reason = "x is a dyadic rational; its terminating expansion is an entry";
    } else {
        report.verdict = Membership::NoFiniteIndex;
        report.nonterminating_certified = x.strictly_above_prefix() && x.certify();
        report.reason = "every enumerated entry is a terminating expansion; x's bit stream is certified "
                        "non-terminating to depth "
                        + std::to_string(depth);
    }
    return report;
}

} // namespace finstage
