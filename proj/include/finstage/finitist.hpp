#ifndef FINSTAGE_FINITIST_HPP
#define FINSTAGE_FINITIST_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finstage/exactnum.hpp"
#include "finstage/magnitude.hpp"

namespace finstage {

// ---------------------------------------------------------------------------
// Even-set theorem

// Finite, nonempty, strictly increasing set of distinct positive even numbers.
class EvenSet {
public:
    // Sorts the input; throws EmptySet or NotEvenPositiveDistinct.
    static EvenSet from(std::vector<BigNat> elements);

    const std::vector<BigNat>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

private:
    explicit EvenSet(std::vector<BigNat> elements) : elements_(std::move(elements)) {}

    std::vector<BigNat> elements_;
};

struct TheoremReport {
    std::size_t cardinality = 0;
    std::vector<BigNat> witnesses; // elements greater than the cardinality
    std::size_t half_bound = 0;    // ceil(cardinality / 2)
    bool has_witness = false;
    bool half_bound_holds = false;  // |witnesses| >= half_bound
    bool sorted_bound_holds = false; // s_i >= 2i for every i (1-based)
};

TheoremReport check_even_set(const EvenSet& set);

inline constexpr unsigned kDefaultInductionLimit = 24;

// Exhaustive induction over every nonempty subset of {2, 4, ..., 2m}, by set
// size. Each subset S is checked for
//   claim:    max(S) > |S|, with at least ceil(|S|/2) elements above |S|
//   engine:   max(S) >= 2|S|
// Size 1 is the base case. For |S| >= 2 the step re-derives engine(S) from
// engine(S \ {max S}) and max(S) >= max(S \ {max S}) + 2.
struct InductionTrace {
    unsigned m = 0;
    std::uint64_t subsets = 0;
    std::uint64_t base_cases = 0;
    std::uint64_t step_cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::uint64_t> verified_by_size; // index = set size
    bool passed() const { return failures == 0 && subsets == base_cases + step_cases; }
};

// Throws BudgetExceeded when m > limit.
InductionTrace induction_trace(unsigned m, unsigned limit = kDefaultInductionLimit);

// ---------------------------------------------------------------------------
// Pairing and countable unions

// (i + j)(i + j + 1)/2 + j
BigNat cantor_pair(const BigNat& i, const BigNat& j);
std::pair<BigNat, BigNat> cantor_unpair(const BigNat& n);

// A countable family of countable (possibly finite) sequences, indexed from 0.
template <class T>
struct CountableFamily {
    // Element `position` of sequence `sequence`, or nullopt past its end.
    std::function<std::optional<T>(const BigNat& sequence, const BigNat& position)> element;
    // Total element count when the union is finite.
    std::optional<BigNat> total_size;
};

template <class T>
struct UnionEntry {
    BigNat pair_index;
    BigNat sequence;
    BigNat position;
    T value;
};

// First `count` elements of the union, visiting (sequence, position) pairs in
// cantor_unpair order and skipping pairs past the end of a finite sequence.
template <class T>
std::vector<UnionEntry<T>> union_enumerate(const CountableFamily<T>& family, const BigNat& count)
{
    BigNat wanted = count;
    if (family.total_size && *family.total_size < wanted) {
        wanted = *family.total_size;
    }
    std::vector<UnionEntry<T>> out;
    for (BigNat n = 0; BigNat(static_cast<unsigned long>(out.size())) < wanted; ++n) {
        auto [sequence, position] = cantor_unpair(n);
        if (auto value = family.element(sequence, position)) {
            out.push_back({n, std::move(sequence), std::move(position), std::move(*value)});
        }
    }
    return out;
}

// Sequence k holds the column-(k+1) entries in order.
CountableFamily<BinaryString> table3_columns();

// |column k| = 2^(k-1) = (entries in columns 1..k-1) + 1.
bool column_exceeds_predecessors_by_one(unsigned long k);

// ---------------------------------------------------------------------------
// Table rows

struct Table1Row {
    BigNat n;
    BigNat doubled;
    BigNat squared;
    BigRational reciprocal;

    std::vector<std::string> cells() const;
};

Table1Row table1_row(const BigNat& n);

// 1/denominator, with a possibly symbolic denominator.
struct UnitFraction {
    Magnitude denominator;

    std::string to_string(std::size_t display_digits = kDefaultDisplayDigits) const;
};

inline constexpr std::size_t kLog2EnclosureBits = 32;

struct Table2Row {
    unsigned long n = 0;
    UnitFraction inverse_pow2_factorial; // 1/2^(n!)
    UnitFraction inverse_factorial;      // 1/n!
    RationalInterval log2_n;             // width <= 2^-32, a point for powers of two
    Magnitude value;                     // n
    Magnitude pow2;                      // 2^n
    Magnitude factorial;                 // n!
    Magnitude pow2_factorial;            // 2^(n!)
    Magnitude pow2_pow2_factorial;       // 2^(2^(n!))

    // Left to right, as printed: 1/2^n!, 1/n!, log2 n, n, 2^n, n!, 2^n!, 2^2^n!.
    std::vector<std::string> cells(std::size_t display_digits = kDefaultDisplayDigits) const;

    // Orderings of adjacent columns from `n` onward (4 comparisons).
    std::vector<std::strong_ordering> growth(std::size_t digit_budget = kDefaultDigitBudget) const;
};

Table2Row table2_row(unsigned long n, std::size_t digit_budget = kDefaultDigitBudget);

} // namespace finstage

#endif
