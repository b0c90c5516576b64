#ifndef FINSTAGE_DIAGONAL_HPP
#define FINSTAGE_DIAGONAL_HPP

// Finite-stage diagonalization. Given any enumeration of bit strings and a
// stage N, the diagonal string differs from entry i at position i for every
// i <= N. The certificate records each of those N mismatches so a third party
// can re-check them against a fresh run of the enumeration.

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finstage/exactnum.hpp"

namespace finstage {

// A single-consumer stream of entries.
class Enumeration {
public:
    virtual ~Enumeration() = default;
    virtual std::optional<BinaryString> next() = 0;
};

// Produces a fresh, independent enumeration on every call.
using EnumerationHandle = std::function<std::unique_ptr<Enumeration>()>;

EnumerationHandle table3_enumeration();
EnumerationHandle constant_enumeration(BinaryString entry);
EnumerationHandle list_enumeration(std::vector<BinaryString> entries);

// Missing bits of entries shorter than the position read as 0.
enum class Padding { Zero };

std::string_view padding_tag(Padding padding);

struct MismatchRecord {
    std::size_t index = 0;
    std::size_t position = 0;
    int entry_bit = 0;
    int diagonal_bit = 0;

    friend bool operator==(const MismatchRecord&, const MismatchRecord&) = default;
};

struct DiagonalCertificate {
    std::size_t stage = 0;
    Padding padding = Padding::Zero;
    BinaryString diagonal;
    std::vector<MismatchRecord> mismatches;
    // Whether the diagonal occurs verbatim among the first `stage` entries;
    // unknown for certificates read back from text.
    std::optional<bool> diagonal_listed;

    bool diagonal_ends_in_one() const { return diagonal.ends_in_one(); }

    // Header "N=<n> pad=zero", then one "i pos entry_bit diag_bit" line per
    // record, each line newline-terminated.
    std::string to_text() const;
    // Throws InvalidInput on anything that is not exactly that format.
    static DiagonalCertificate parse(std::string_view text);
};

BinaryString diagonal_prefix(const EnumerationHandle& enumeration, std::size_t stage);

DiagonalCertificate certify_absence(const EnumerationHandle& enumeration, std::size_t stage);

// Independent re-check of every record against a fresh enumeration.
bool verify_certificate(const DiagonalCertificate& certificate, const EnumerationHandle& enumeration);

// True when `candidate` equals none of the first `stage` entries, by direct
// string comparison.
bool absent_from_prefix(const BinaryString& candidate, const EnumerationHandle& enumeration, std::size_t stage);

} // namespace finstage

#endif
