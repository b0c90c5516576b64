#include "finstage/finitist.hpp"

#include <algorithm>
#include <bit>

#include "finstage/error.hpp"
#include "finstage/table3.hpp"

namespace finstage {

EvenSet EvenSet::from(std::vector<BigNat> elements)
{
    if (elements.empty()) {
        throw EmptySet();
    }
    std::sort(elements.begin(), elements.end());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const BigNat& e = elements[i];
        if (e <= 0 || mpz_odd_p(e.get_mpz_t()) || (i > 0 && elements[i - 1] == e)) {
            throw NotEvenPositiveDistinct("element=" + e.get_str());
        }
    }
    return EvenSet(std::move(elements));
}

TheoremReport check_even_set(const EvenSet& set)
{
    TheoremReport report;
    const auto& elems = set.elements();
    report.cardinality = elems.size();
    const BigNat m(static_cast<unsigned long>(elems.size()));
    report.half_bound = (elems.size() + 1) / 2;
    report.sorted_bound_holds = true;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < BigNat(static_cast<unsigned long>(2 * (i + 1)))) {
            report.sorted_bound_holds = false;
        }
        if (elems[i] > m) {
            report.witnesses.push_back(elems[i]);
        }
    }
    report.has_witness = !report.witnesses.empty();
    report.half_bound_holds = report.witnesses.size() >= report.half_bound;
    return report;
}

InductionTrace induction_trace(unsigned m, unsigned limit)
{
    if (m == 0) {
        throw OutOfRange("m=0");
    }
    if (m > limit || m > 62) {
        throw BudgetExceeded("m=" + std::to_string(m) + " limit=" + std::to_string(limit));
    }
    InductionTrace trace;
    trace.m = m;
    trace.verified_by_size.assign(m + 1, 0);

    // Bit i of a mask stands for the element 2(i + 1).
    auto max_element = [](std::uint64_t mask) { return 2u * static_cast<unsigned>(std::bit_width(mask)); };

    const std::uint64_t end = std::uint64_t{1} << m;
    for (std::uint64_t mask = 1; mask < end; ++mask) {
        ++trace.subsets;
        const unsigned size = static_cast<unsigned>(std::popcount(mask));
        const unsigned top = max_element(mask);
        // Elements 2(i + 1) > size are exactly the bits i >= size / 2.
        const unsigned above = static_cast<unsigned>(std::popcount(mask >> (size / 2)));
        const bool claim = top > size && above >= (size + 1) / 2;
        const bool engine = top >= 2 * size;

        bool ok = claim && engine;
        if (size == 1) {
            ++trace.base_cases;
        } else {
            ++trace.step_cases;
            const std::uint64_t rest = mask & ~(std::uint64_t{1} << (std::bit_width(mask) - 1));
            const unsigned rest_top = max_element(rest);
            const bool hypothesis = rest_top >= 2 * (size - 1);
            const bool step = top >= rest_top + 2;
            // engine(rest) and the step force engine(mask); engine forces the claim.
            ok = ok && hypothesis && step && (rest_top + 2 >= 2 * size) && (2 * size > size);
        }
        if (ok) {
            ++trace.verified_by_size[size];
        } else {
            ++trace.failures;
        }
    }
    return trace;
}

BigNat cantor_pair(const BigNat& i, const BigNat& j)
{
    if (i < 0 || j < 0) {
        throw OutOfRange("pair=" + i.get_str() + "," + j.get_str());
    }
    BigNat s = i + j;
    return s * (s + 1) / 2 + j;
}

std::pair<BigNat, BigNat> cantor_unpair(const BigNat& n)
{
    if (n < 0) {
        throw OutOfRange("n=" + n.get_str());
    }
    BigNat root;
    BigNat disc = 8 * n + 1;
    mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
    BigNat w = (root - 1) / 2;
    BigNat t = w * (w + 1) / 2;
    BigNat j = n - t;
    return {w - j, j};
}

CountableFamily<BinaryString> table3_columns()
{
    CountableFamily<BinaryString> family;
    family.element = [](const BigNat& sequence, const BigNat& position) -> std::optional<BinaryString> {
        if (!sequence.fits_ulong_p()) {
            return std::nullopt;
        }
        BigNat start = pow2(sequence.get_ui());
        if (position >= start) {
            return std::nullopt;
        }
        return index_to_string(start + position);
    };
    return family;
}

bool column_exceeds_predecessors_by_one(unsigned long k)
{
    if (k == 0) {
        throw OutOfRange("k=0");
    }
    BigNat predecessors = 0;
    for (unsigned long c = 1; c < k; ++c) {
        predecessors += pow2(c - 1);
    }
    return pow2(k - 1) == predecessors + 1;
}

std::vector<std::string> Table1Row::cells() const
{
    return {n.get_str(), doubled.get_str(), squared.get_str(), reciprocal.to_string()};
}

Table1Row table1_row(const BigNat& n)
{
    if (n <= 0) {
        throw ZeroIndex("n=" + n.get_str());
    }
    return {n, 2 * n, n * n, BigRational(BigInt(1), n)};
}

std::string UnitFraction::to_string(std::size_t display_digits) const
{
    if (denominator.is_exact() && denominator.value() == 1) {
        return "1";
    }
    return "1/" + denominator.to_string(display_digits);
}

std::vector<std::string> Table2Row::cells(std::size_t display_digits) const
{
    std::string log_cell = log2_n.is_point() ? log2_n.lo().to_string() : log2_n.to_string();
    return {inverse_pow2_factorial.to_string(display_digits),
            inverse_factorial.to_string(display_digits),
            log_cell,
            value.to_string(display_digits),
            pow2.to_string(display_digits),
            factorial.to_string(display_digits),
            pow2_factorial.to_string(display_digits),
            pow2_pow2_factorial.to_string(display_digits)};
}

std::vector<std::strong_ordering> Table2Row::growth(std::size_t digit_budget) const
{
    return {magnitude_cmp(value, pow2, digit_budget),
            magnitude_cmp(pow2, factorial, digit_budget),
            magnitude_cmp(factorial, pow2_factorial, digit_budget),
            magnitude_cmp(pow2_factorial, pow2_pow2_factorial, digit_budget)};
}

Table2Row table2_row(unsigned long n, std::size_t digit_budget)
{
    if (n == 0) {
        throw ZeroIndex("n=0");
    }
    Table2Row row;
    row.n = n;
    row.value = Magnitude::exact(BigNat(n));
    row.pow2 = Magnitude::power(2, row.value, digit_budget);
    row.factorial = Magnitude::exact(factorial(n));
    row.pow2_factorial = Magnitude::power(2, row.factorial, digit_budget);
    row.pow2_pow2_factorial = Magnitude::power(2, row.pow2_factorial, digit_budget);
    row.inverse_pow2_factorial = UnitFraction{row.pow2_factorial};
    row.inverse_factorial = UnitFraction{row.factorial};
    row.log2_n = log2_enclosure(BigRational(BigInt(n)), kLog2EnclosureBits);
    return row;
}

} // namespace finstage
