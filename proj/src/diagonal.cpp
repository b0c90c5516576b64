#include "finstage/diagonal.hpp"

#include <charconv>

#include "finstage/error.hpp"
#include "finstage/table3.hpp"

namespace finstage {

namespace {

class Table3Stream final : public Enumeration {
public:
    std::optional<BinaryString> next() override { return gen_.next_bits(); }

private:
    Table3Enumerator gen_;
};

class ConstantStream final : public Enumeration {
public:
    explicit ConstantStream(BinaryString entry) : entry_(std::move(entry)) {}
    std::optional<BinaryString> next() override { return entry_; }

private:
    BinaryString entry_;
};

class ListStream final : public Enumeration {
public:
    explicit ListStream(std::shared_ptr<const std::vector<BinaryString>> entries) : entries_(std::move(entries)) {}
    std::optional<BinaryString> next() override
    {
        if (pos_ >= entries_->size()) {
            return std::nullopt;
        }
        return (*entries_)[pos_++];
    }

private:
    std::shared_ptr<const std::vector<BinaryString>> entries_;
    std::size_t pos_ = 0;
};

void require_stage(std::size_t stage)
{
    if (stage == 0) {
        throw OutOfRange("N=0");
    }
}

} // namespace

EnumerationHandle table3_enumeration()
{
    return [] { return std::make_unique<Table3Stream>(); };
}

EnumerationHandle constant_enumeration(BinaryString entry)
{
    return [entry = std::move(entry)] { return std::make_unique<ConstantStream>(entry); };
}

EnumerationHandle list_enumeration(std::vector<BinaryString> entries)
{
    auto shared = std::make_shared<const std::vector<BinaryString>>(std::move(entries));
    return [shared] { return std::make_unique<ListStream>(shared); };
}

std::string_view padding_tag(Padding padding)
{
    switch (padding) {
    case Padding::Zero: return "zero";
    }
    return "unknown";
}

BinaryString diagonal_prefix(const EnumerationHandle& enumeration, std::size_t stage)
{
    return certify_absence(enumeration, stage).diagonal;
}

DiagonalCertificate certify_absence(const EnumerationHandle& enumeration, std::size_t stage)
{
    require_stage(stage);
    DiagonalCertificate cert;
    cert.stage = stage;
    cert.padding = Padding::Zero;
    cert.mismatches.reserve(stage);

    auto stream = enumeration();
    for (std::size_t i = 1; i <= stage; ++i) {
        auto entry = stream->next();
        if (!entry) {
            throw EnumerationExhausted("N=" + std::to_string(stage) + " available=" + std::to_string(i - 1));
        }
        const int entry_bit = entry->bit(i, 0);
        const int diagonal_bit = 1 - entry_bit;
        cert.diagonal.push_back(diagonal_bit);
        cert.mismatches.push_back({i, i, entry_bit, diagonal_bit});
    }
    cert.diagonal_listed = !absent_from_prefix(cert.diagonal, enumeration, stage);
    return cert;
}

bool absent_from_prefix(const BinaryString& candidate, const EnumerationHandle& enumeration, std::size_t stage)
{
    auto stream = enumeration();
    for (std::size_t i = 0; i < stage; ++i) {
        auto entry = stream->next();
        if (!entry) {
            break;
        }
        if (entry->str() == candidate.str()) {
            return false;
        }
    }
    return true;
}

bool verify_certificate(const DiagonalCertificate& certificate, const EnumerationHandle& enumeration)
{
    const std::size_t n = certificate.stage;
    if (n == 0 || certificate.padding != Padding::Zero || certificate.mismatches.size() != n
        || certificate.diagonal.str().size() != n) {
        return false;
    }
    const std::string& diagonal = certificate.diagonal.str();
    auto stream = enumeration();
    for (std::size_t i = 1; i <= n; ++i) {
        auto entry = stream->next();
        if (!entry) {
            return false;
        }
        const std::string& text = entry->str();
        const char expected_entry = i <= text.size() ? text[i - 1] : '0';
        const char expected_diag = expected_entry == '0' ? '1' : '0';
        const MismatchRecord& r = certificate.mismatches[i - 1];
        if (r.index != i || r.position != i || r.entry_bit != expected_entry - '0'
            || r.diagonal_bit != expected_diag - '0' || diagonal[i - 1] != expected_diag) {
            return false;
        }
    }
    return true;
}

std::string DiagonalCertificate::to_text() const
{
    std::string out = "N=" + std::to_string(stage) + " pad=" + std::string(padding_tag(padding)) + "\n";
    for (const auto& r : mismatches) {
        out += std::to_string(r.index) + ' ' + std::to_string(r.position) + ' '
            + std::to_string(r.entry_bit) + ' ' + std::to_string(r.diagonal_bit) + '\n';
    }
    return out;
}

namespace {

std::size_t parse_count(std::string_view field, std::string_view line)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()
        || (field.size() > 1 && field.front() == '0')) {
        throw InvalidInput("certificate_line=" + std::string(line));
    }
    return value;
}

int parse_bit(std::string_view field, std::string_view line)
{
    if (field != "0" && field != "1") {
        throw InvalidInput("certificate_line=" + std::string(line));
    }
    return field == "1" ? 1 : 0;
}

std::vector<std::string_view> split_spaces(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        auto space = line.find(' ', start);
        fields.push_back(line.substr(start, space - start));
        if (space == std::string_view::npos) {
            break;
        }
        start = space + 1;
    }
    return fields;
}

} // namespace

DiagonalCertificate DiagonalCertificate::parse(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto newline = text.find('\n', start);
        if (newline == std::string_view::npos) {
            throw InvalidInput("certificate missing final newline");
        }
        lines.push_back(text.substr(start, newline - start));
        start = newline + 1;
    }
    if (lines.empty()) {
        throw InvalidInput("empty certificate");
    }

    auto header = split_spaces(lines.front());
    if (header.size() != 2 || !header[0].starts_with("N=") || header[1] != "pad=zero") {
        throw InvalidInput("certificate_header=" + std::string(lines.front()));
    }
    DiagonalCertificate cert;
    cert.stage = parse_count(header[0].substr(2), lines.front());
    cert.padding = Padding::Zero;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto fields = split_spaces(lines[k]);
        if (fields.size() != 4) {
            throw InvalidInput("certificate_line=" + std::string(lines[k]));
        }
        MismatchRecord r{parse_count(fields[0], lines[k]), parse_count(fields[1], lines[k]),
                         parse_bit(fields[2], lines[k]), parse_bit(fields[3], lines[k])};
        cert.diagonal.push_back(r.diagonal_bit);
        cert.mismatches.push_back(r);
    }
    // Only the canonical spelling is accepted: no padding spaces, no
    // leading zeros.
    if (cert.to_text() != text) {
        throw InvalidInput("certificate not in canonical form");
    }
    return cert;
}

} // namespace finstage
