#include "finstage/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "finstage/diagonal.hpp"
#include "finstage/error.hpp"
#include "finstage/exactnum.hpp"
#include "finstage/finitist.hpp"
#include "finstage/reals.hpp"
#include "finstage/series.hpp"
#include "finstage/table3.hpp"

namespace finstage::cli {

namespace {

using Row = std::vector<std::string>;
using PlainFormatter = std::function<std::string(const Row&)>;

std::string join(const Row& fields, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += fields[i];
    }
    return out;
}

std::string csv_field(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + '"';
}

// Streams rows in the selected format: plain lines, CSV with a header, or one
// JSON object per line with every value string-encoded.
class RowWriter {
public:
    RowWriter(OutputFormat format, std::ostream& out, Row columns, PlainFormatter plain = {})
        : format_(format), out_(out), columns_(std::move(columns)), plain_(std::move(plain))
    {
        if (format_ == OutputFormat::Csv) {
            Row header;
            for (const auto& c : columns_) {
                header.push_back(csv_field(c));
            }
            out_ << join(header, ",") << '\n';
        }
    }

    void row(const Row& fields)
    {
        switch (format_) {
        case OutputFormat::Plain:
            out_ << (plain_ ? plain_(fields) : join(fields, " ")) << '\n';
            break;
        case OutputFormat::Csv: {
            Row quoted;
            for (const auto& f : fields) {
                quoted.push_back(csv_field(f));
            }
            out_ << join(quoted, ",") << '\n';
            break;
        }
        case OutputFormat::JsonLines: {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < columns_.size() && i < fields.size(); ++i) {
                obj[columns_[i]] = fields[i];
            }
            out_ << obj.dump() << '\n';
            break;
        }
        }
    }

private:
    OutputFormat format_;
    std::ostream& out_;
    Row columns_;
    PlainFormatter plain_;
};

// key=value lines for single-record reports.
PlainFormatter key_value_lines(const Row& columns)
{
    return [columns](const Row& fields) {
        std::string out;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                out += '\n';
            }
            out += columns[i] + "=" + fields[i];
        }
        return out;
    };
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

// Exact fraction, or its truncated decimal expansion when digits are requested.
std::string render(const BigRational& value, std::optional<std::size_t> digits)
{
    return digits ? to_decimal(value, *digits) : value.to_string();
}

std::string join_numbers(const std::vector<unsigned long>& values)
{
    Row parts;
    for (auto v : values) {
        parts.push_back(std::to_string(v));
    }
    return join(parts, ";");
}

void report_domain_error(const Error& e, OutputFormat format, std::ostream& out)
{
    if (format == OutputFormat::JsonLines) {
        nlohmann::ordered_json obj;
        obj["error"] = e.name();
        obj["payload"] = e.payload();
        out << obj.dump() << '\n';
    } else {
        out << e.what() << '\n';
    }
}

struct Options {
    std::string format = "plain";

    std::string count;

    std::string bits;
    std::string value;

    std::string real;
    std::size_t depth = 0;

    std::string verify_file;
    bool summary = false;

    unsigned long blocks = 0;
    std::string series_name;
    unsigned long terms = 0;
    std::optional<std::size_t> digits;

    std::string set;
    unsigned exhaustive_max = 0;

    std::string pair_i;
    std::string pair_j;
    std::string unpair;

    int table_id = 0;
    unsigned long rows = 0;
};

OutputFormat parse_format(const std::string& name)
{
    if (name == "plain") {
        return OutputFormat::Plain;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    return OutputFormat::JsonLines;
}

int cmd_enum(const Options& opt, OutputFormat format, std::ostream& out)
{
    RowWriter w(format, out, {"index", "bits", "value"},
                [](const Row& r) { return r[0] + ") 0." + r[1] + " " + r[2]; });
    auto gen = enumerate_prefix(parse_nat(opt.count));
    while (auto entry = gen.next()) {
        w.row({entry->index.get_str(), entry->bits.str(), entry->value.to_string()});
    }
    return kExitOk;
}

int cmd_locate(const Options& opt, OutputFormat format, std::ostream& out)
{
    RowWriter w(format, out, {"bits", "index", "value"},
                [](const Row& r) { return r[1]; });
    if (!opt.bits.empty()) {
        BinaryString bits = BinaryString::parse(opt.bits);
        BigNat index = string_to_index(bits);
        w.row({bits.str(), index.get_str(), dyadic_from_string(bits).to_string()});
        return kExitOk;
    }
    BigRational value = BigRational::parse(opt.value);
    auto dyadic = DyadicRational::from_rational(value);
    if (!dyadic) {
        throw OutOfRange("value=" + value.to_string() + " reason=not-dyadic");
    }
    BigNat index = locate_value(*dyadic);
    w.row({index_to_string(index).str(), index.get_str(), dyadic->to_string()});
    return kExitOk;
}

int cmd_approx(const Options& opt, OutputFormat format, std::ostream& out)
{
    Row columns{"real", "depth", "prefix", "best_index", "best_value", "error_bound", "verdict", "reason"};
    RowWriter w(format, out, columns, key_value_lines(columns));
    auto report = approximate(ComputableReal::from_name(opt.real), opt.depth);
    std::string verdict = report.verdict == Membership::ExactMember
        ? "ExactMember(" + report.member_index->get_str() + ")"
        : "NoFiniteIndex";
    w.row({opt.real, std::to_string(opt.depth), report.prefix.str(), report.best_index.get_str(),
           report.best_value.to_string(), report.error_bound.to_string(), verdict, report.reason});
    return kExitOk;
}

int cmd_diag(const Options& opt, OutputFormat format, std::ostream& out)
{
    auto table3 = table3_enumeration();
    if (!opt.verify_file.empty()) {
        std::ifstream in(opt.verify_file, std::ios::binary);
        if (!in) {
            throw InvalidInput("file=" + opt.verify_file);
        }
        std::ostringstream text;
        text << in.rdbuf();
        DiagonalCertificate cert = DiagonalCertificate::parse(text.str());
        bool valid = verify_certificate(cert, table3);
        if (!opt.count.empty() && parse_nat(opt.count) != BigNat(static_cast<unsigned long>(cert.stage))) {
            valid = false;
        }
        RowWriter w(format, out, {"N", "valid"},
                    [](const Row& r) { return std::string(r[1] == "true" ? "valid" : "invalid") + " N=" + r[0]; });
        w.row({std::to_string(cert.stage), yes_no(valid)});
        return valid ? kExitOk : kExitDomainError;
    }

    BigNat n = parse_nat(opt.count);
    if (!n.fits_ulong_p()) {
        throw OutOfRange("N=" + n.get_str());
    }
    DiagonalCertificate cert = certify_absence(table3, n.get_ui());
    if (opt.summary) {
        Row columns{"N", "diagonal", "ends_in_one", "listed_in_prefix", "absent_by_scan"};
        RowWriter w(format, out, columns, key_value_lines(columns));
        w.row({std::to_string(cert.stage), cert.diagonal.str(), yes_no(cert.diagonal_ends_in_one()),
               yes_no(cert.diagonal_listed.value_or(false)),
               yes_no(absent_from_prefix(cert.diagonal, table3, cert.stage))});
        return kExitOk;
    }
    if (format == OutputFormat::Plain) {
        out << cert.to_text();
        return kExitOk;
    }
    RowWriter w(format, out, {"i", "pos", "entry_bit", "diag_bit"});
    for (const auto& r : cert.mismatches) {
        w.row({std::to_string(r.index), std::to_string(r.position), std::to_string(r.entry_bit),
               std::to_string(r.diagonal_bit)});
    }
    return kExitOk;
}

int cmd_harmonic(const Options& opt, OutputFormat format, std::ostream& out)
{
    RowWriter w(format, out,
                {"k", "first_denominator", "last_denominator", "block_sum", "at_least_half", "denominators",
                 "harmonic", "lower_bound", "bound_holds"});
    BigRational harmonic(1);
    for (unsigned long k = 1; k <= opt.blocks; ++k) {
        OresmeBlock block = oresme_block(k);
        harmonic += block.sum;
        BigRational bound = BigRational(1) + BigRational(BigInt(k), BigInt(2));
        w.row({std::to_string(k), block.first_denominator.get_str(), block.last_denominator.get_str(),
               render(block.sum, opt.digits), yes_no(block.at_least_half), block.denominators_so_far.get_str(),
               render(harmonic, opt.digits), bound.to_string(), yes_no(harmonic >= bound)});
    }
    return kExitOk;
}

int cmd_series(const Options& opt, OutputFormat format, std::ostream& out)
{
    if (opt.series_name == "e") {
        Row columns{"n", "lo", "hi", "width", "certified_digits"};
        RowWriter w(format, out, columns, key_value_lines(columns));
        Enclosure enc = e_enclosure(opt.terms);
        w.row({std::to_string(enc.n), render(enc.interval.lo(), opt.digits), render(enc.interval.hi(), opt.digits),
               enc.interval.width().to_string(), certified_decimals(enc.interval, opt.digits.value_or(40))});
        return kExitOk;
    }
    if (opt.series_name == "tau") {
        Row columns{"m", "sum", "one_positions", "digits_match", "tail_bound"};
        RowWriter w(format, out, columns, key_value_lines(columns));
        LiouvillePartial p = liouville_partial(opt.terms);
        w.row({std::to_string(p.m), render(p.sum, opt.digits), join_numbers(p.one_positions),
               yes_no(p.digits_match), p.tail_bound.to_string()});
        return kExitOk;
    }
    Row columns{"n", "term_sum", "closed_form", "agree"};
    RowWriter w(format, out, columns, key_value_lines(columns));
    GeometricCheck g = geometric_partial(opt.terms);
    w.row({std::to_string(opt.terms), render(g.term_sum, opt.digits), render(g.closed_form, opt.digits),
           yes_no(g.agree)});
    return kExitOk;
}

int cmd_theorem(const Options& opt, OutputFormat format, std::ostream& out)
{
    if (!opt.set.empty()) {
        std::vector<BigNat> elements;
        std::string_view text = opt.set;
        std::size_t start = 0;
        for (;;) {
            auto comma = text.find(',', start);
            elements.push_back(parse_nat(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        TheoremReport r = check_even_set(EvenSet::from(std::move(elements)));
        Row witnesses;
        for (const auto& wv : r.witnesses) {
            witnesses.push_back(wv.get_str());
        }
        Row columns{"cardinality", "witnesses", "witness_count", "half_bound", "half_bound_holds",
                    "sorted_bound_holds"};
        RowWriter w(format, out, columns, key_value_lines(columns));
        w.row({std::to_string(r.cardinality), join(witnesses, ";"), std::to_string(r.witnesses.size()),
               std::to_string(r.half_bound), yes_no(r.half_bound_holds), yes_no(r.sorted_bound_holds)});
        return r.has_witness && r.half_bound_holds ? kExitOk : kExitDomainError;
    }
    InductionTrace t = induction_trace(opt.exhaustive_max);
    Row columns{"m", "subsets", "base_cases", "step_cases", "failures", "passed"};
    RowWriter w(format, out, columns, key_value_lines(columns));
    w.row({std::to_string(t.m), std::to_string(t.subsets), std::to_string(t.base_cases),
           std::to_string(t.step_cases), std::to_string(t.failures), yes_no(t.passed())});
    return t.passed() ? kExitOk : kExitDomainError;
}

int cmd_pair(const Options& opt, OutputFormat format, std::ostream& out)
{
    if (!opt.unpair.empty()) {
        auto [i, j] = cantor_unpair(parse_nat(opt.unpair));
        RowWriter w(format, out, {"i", "j"});
        w.row({i.get_str(), j.get_str()});
        return kExitOk;
    }
    if (opt.pair_i.empty() || opt.pair_j.empty()) {
        throw InvalidInput("pair needs --i and --j");
    }
    RowWriter w(format, out, {"n"});
    w.row({cantor_pair(parse_nat(opt.pair_i), parse_nat(opt.pair_j)).get_str()});
    return kExitOk;
}

int cmd_table(const Options& opt, OutputFormat format, std::ostream& out)
{
    auto tabbed = [](const Row& r) { return join(r, "\t"); };
    if (opt.table_id == 1) {
        RowWriter w(format, out, {"n", "2n", "n^2", "1/n"}, tabbed);
        for (unsigned long n = 1; n <= opt.rows; ++n) {
            w.row(table1_row(BigNat(n)).cells());
        }
        return kExitOk;
    }
    Row columns{"1/2^n!", "1/n!", "log2 n", "n", "2^n", "n!", "2^n!", "2^2^n!"};
    RowWriter w(format, out, columns, tabbed);
    for (unsigned long n = 1; n <= opt.rows; ++n) {
        w.row(table2_row(n).cells());
    }
    // Limit rows are not computed; see "Table 2 limit rows" in the README.
    Row marker(columns.size(), "?");
    if (format == OutputFormat::Plain) {
        out << join(marker, "\t") << "\t# limit rows: not computed (README: Table 2 limit rows)\n";
    } else {
        w.row(marker);
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Finite-stage enumerations, diagonal certificates and exact series", "finstage"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"plain", "csv", "json-lines"}));

    auto* enum_cmd = app.add_subcommand("enum", "List the first N entries of the enumeration");
    enum_cmd->add_option("--count", opt.count, "Number of entries")->required();

    auto* locate_cmd = app.add_subcommand("locate", "Index of a bit string or a dyadic value");
    auto* bits_opt = locate_cmd->add_option("--bits", opt.bits, "Bits after the radix point");
    auto* value_opt = locate_cmd->add_option("--value", opt.value, "Dyadic value p/q");
    bits_opt->excludes(value_opt);
    locate_cmd->require_option(1);

    auto* approx_cmd = app.add_subcommand("approx", "Approximate a computable real by an entry");
    approx_cmd->add_option("--real", opt.real, "sqrt2, e, tau or rat:p/q")->required();
    approx_cmd->add_option("--depth", opt.depth, "Number of bits")->required();

    auto* diag_cmd = app.add_subcommand("diag", "Diagonal certificate against the enumeration");
    diag_cmd->add_option("--count", opt.count, "Stage N");
    diag_cmd->add_option("--verify", opt.verify_file, "Certificate file to re-check");
    diag_cmd->add_flag("--summary", opt.summary, "Report the diagonal string and absence checks");

    auto* harmonic_cmd = app.add_subcommand("harmonic", "Grouped harmonic blocks");
    harmonic_cmd->add_option("--blocks", opt.blocks, "Number of blocks")->required();
    harmonic_cmd->add_option("--digits", opt.digits, "Print truncated decimals instead of fractions");

    auto* series_cmd = app.add_subcommand("series", "Exact partial sums");
    series_cmd->add_option("--name", opt.series_name, "e, tau or geometric")
        ->required()
        ->check(CLI::IsMember({"e", "tau", "geometric"}));
    series_cmd->add_option("--terms", opt.terms, "Number of terms")->required();
    series_cmd->add_option("--digits", opt.digits, "Print truncated decimals instead of fractions");

    auto* theorem_cmd = app.add_subcommand("theorem", "Even-set theorem checks");
    auto* set_opt = theorem_cmd->add_option("--set", opt.set, "Comma separated even numbers");
    auto* exhaustive_opt = theorem_cmd->add_option("--exhaustive-max", opt.exhaustive_max,
                                                   "Check every subset of {2, ..., 2M}");
    set_opt->excludes(exhaustive_opt);
    theorem_cmd->require_option(1);

    auto* pair_cmd = app.add_subcommand("pair", "Cantor pairing");
    auto* i_opt = pair_cmd->add_option("--i", opt.pair_i, "First component");
    auto* j_opt = pair_cmd->add_option("--j", opt.pair_j, "Second component");
    auto* unpair_opt = pair_cmd->add_option("--unpair", opt.unpair, "Pair index to split");
    unpair_opt->excludes(i_opt)->excludes(j_opt);

    auto* table_cmd = app.add_subcommand("table", "Rows of the bijection tables");
    table_cmd->add_option("--id", opt.table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    table_cmd->add_option("--rows", opt.rows, "Number of rows")->required();

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (diag_cmd->parsed() && opt.count.empty() && opt.verify_file.empty()) {
        err << "diag: --count or --verify is required\n";
        return kExitUsage;
    }

    const OutputFormat format = parse_format(opt.format);
    try {
        if (enum_cmd->parsed()) return cmd_enum(opt, format, out);
        if (locate_cmd->parsed()) return cmd_locate(opt, format, out);
        if (approx_cmd->parsed()) return cmd_approx(opt, format, out);
        if (diag_cmd->parsed()) return cmd_diag(opt, format, out);
        if (harmonic_cmd->parsed()) return cmd_harmonic(opt, format, out);
        if (series_cmd->parsed()) return cmd_series(opt, format, out);
        if (theorem_cmd->parsed()) return cmd_theorem(opt, format, out);
        if (pair_cmd->parsed()) return cmd_pair(opt, format, out);
        if (table_cmd->parsed()) return cmd_table(opt, format, out);
    } catch (const InvalidInput& e) {
        err << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        report_domain_error(e, format, out);
        return kExitDomainError;
    }
    return kExitUsage;
}

} // namespace finstage::cli
