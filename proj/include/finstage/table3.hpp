#ifndef FINSTAGE_TABLE3_HPP
#define FINSTAGE_TABLE3_HPP

// The indexed list of finite binary strings: column 1 holds "1", and column k
// is built from column k-1 by prefixing a 0 or a 1 in front of each entry.
// Entry n sits in column k = bitlen(n) at offset j = n - 2^(k-1), and its
// bits are the binary digits of n read least significant first. Every entry
// ends in 1, so the image is exactly the dyadic rationals in (0, 1) with
// their terminating expansions.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finstage/exactnum.hpp"
#include "finstage/reals.hpp"

namespace finstage {

struct ColumnPosition {
    BigNat column; // k >= 1
    BigNat offset; // 0 <= j < 2^(k-1)

    BigNat index() const;

    friend bool operator==(const ColumnPosition&, const ColumnPosition&) = default;
};

// n-th entry via bit reversal of n.
BinaryString index_to_string(const BigNat& n);

// n-th entry via the column recursion: entry (k, j) is bit (j mod 2) prefixed
// onto entry (k-1, j div 2), with entry (1, 0) = "1". Independent of the bit
// reversal above and kept as its oracle.
BinaryString index_to_string_recursive(const BigNat& n);

// Throws NotInImage when `bits` ends in 0.
BigNat string_to_index(const BinaryString& bits);

ColumnPosition column_of(const BigNat& n);

struct Table3Entry {
    BigNat index;
    BinaryString bits;
    DyadicRational value;
};

// Lazy generator over entries 1, 2, ..., optionally stopping after `limit`.
// Memory is proportional to the length of the current entry.
class Table3Enumerator {
public:
    Table3Enumerator() = default;
    explicit Table3Enumerator(BigNat limit) : limit_(std::move(limit)) {}

    std::optional<Table3Entry> next();
    // Same walk without building the dyadic value.
    std::optional<BinaryString> next_bits();

private:
    BigNat index_ = 0;
    BinaryString bits_;
    std::optional<BigNat> limit_;
};

Table3Enumerator enumerate_prefix(const BigNat& count);
std::vector<Table3Entry> collect_prefix(const BigNat& count);

// Index of the entry whose value is `value`, for 0 < value < 1.
BigNat locate_value(const DyadicRational& value);

enum class Membership { ExactMember, NoFiniteIndex };

struct ApproximationReport {
    BinaryString prefix;     // first `depth` bits of x
    BigNat best_index;       // entry nearest to x among the depth-bit dyadics
    DyadicRational best_value;
    BigRational error_bound; // |best_value - x| <= error_bound <= 2^-depth
    Membership verdict = Membership::NoFiniteIndex;
    std::optional<BigNat> member_index; // set for ExactMember
    bool nonterminating_certified = false;
    std::string reason;
};

ApproximationReport approximate(ComputableReal x, std::size_t depth);

} // namespace finstage

#endif
