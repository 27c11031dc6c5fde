#include "qparity/records.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

namespace qparity {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

FieldValue optional_int(const std::optional<std::uint64_t>& v)
{
    if (!v)
        return std::monostate{};
    return static_cast<std::int64_t>(*v);
}

FieldValue count(std::size_t v)
{
    return static_cast<std::int64_t>(v);
}

std::string as_json(const FieldValue& v)
{
    return std::visit(overloaded{
                          [](std::monostate) -> std::string { return "null"; },
                          [](bool b) -> std::string { return b ? "true" : "false"; },
                          [](std::int64_t i) { return std::to_string(i); },
                          [](const std::string& s) { return nlohmann::json(s).dump(); },
                          [](const Decimal& d) { return d.digits; },
                      },
                      v);
}

std::string as_text(const FieldValue& v, std::string_view null_text)
{
    return std::visit(overloaded{
                          [&](std::monostate) { return std::string(null_text); },
                          [](bool b) -> std::string { return b ? "true" : "false"; },
                          [](std::int64_t i) { return std::to_string(i); },
                          [](const std::string& s) { return s; },
                          [](const Decimal& d) { return d.digits; },
                      },
                      v);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "plain" || name == "table")
        return Format::Plain;
    if (name == "jsonl" || name == "json-lines" || name == "json")
        return Format::JsonLines;
    if (name == "csv")
        return Format::Csv;
    return std::nullopt;
}

Record coefficient_record(std::size_t t, std::size_t n, Domain domain, const BigInt& value)
{
    return {
        {"kind", std::string("coefficient")},
        {"t", count(t)},
        {"n", count(n)},
        {"domain", std::string(to_string(domain))},
        {"value", Decimal{value.get_str()}},
    };
}

Record to_record(const VerificationReport& report)
{
    return {
        {"kind", std::string("report")},
        {"theorem", report.theorem_id},
        {"range", report.range},
        {"passed", report.passed},
        {"counterexample", optional_int(report.counterexample)},
        {"detail", report.detail},
    };
}

Record to_record(const CongruenceClaim& claim)
{
    return {
        {"kind", std::string("claim")},
        {"t", count(claim.t)},
        {"modulus", count(claim.modulus)},
        {"residue", count(claim.residue)},
        {"checked_bound", count(claim.checked_bound)},
        {"status", std::string(to_string(claim.status))},
        {"witness_n", optional_int(claim.witness_n)},
        {"witness_index", optional_int(claim.witness_index())},
        {"origin", std::string(to_string(claim.origin))},
    };
}

RecordWriter::RecordWriter(std::ostream& out, Format format)
    : out_(out)
    , format_(format)
{}

RecordWriter::~RecordWriter()
{
    if (!finished_) {
        try {
            finish();
        } catch (...) {
        }
    }
}

void RecordWriter::write(const Record& record)
{
    switch (format_) {
    case Format::JsonLines: {
        out_ << '{';
        for (std::size_t i = 0; i < record.size(); ++i)
            out_ << (i ? "," : "") << nlohmann::json(record[i].key).dump() << ':'
                 << as_json(record[i].value);
        out_ << "}\n";
        break;
    }
    case Format::Csv: {
        if (!header_done_) {
            for (std::size_t i = 0; i < record.size(); ++i)
                out_ << (i ? "," : "") << csv_escape(record[i].key);
            out_ << '\n';
            header_done_ = true;
        }
        for (std::size_t i = 0; i < record.size(); ++i)
            out_ << (i ? "," : "") << csv_escape(as_text(record[i].value, ""));
        out_ << '\n';
        break;
    }
    case Format::Plain:
        pending_.push_back(record);
        break;
    }
}

void RecordWriter::finish()
{
    finished_ = true;
    if (format_ != Format::Plain || pending_.empty()) {
        out_.flush();
        return;
    }
    // "kind" is the same on every row, so the table leaves it out
    const auto& first = pending_.front();
    std::vector<std::size_t> width(first.size(), 0);
    std::vector<std::vector<std::string>> cells;
    for (const auto& rec : pending_) {
        auto& row = cells.emplace_back();
        for (std::size_t i = 1; i < rec.size(); ++i)
            row.push_back(as_text(rec[i].value, "-"));
    }
    for (std::size_t i = 1; i < first.size(); ++i) {
        width[i] = first[i].key.size();
        for (const auto& row : cells)
            width[i] = std::max(width[i], row[i - 1].size());
    }
    auto emit = [&](auto cell_at) {
        for (std::size_t i = 1; i < first.size(); ++i) {
            std::string cell = cell_at(i);
            out_ << cell;
            if (i + 1 < first.size())
                out_ << std::string(width[i] - cell.size() + 2, ' ');
        }
        out_ << '\n';
    };
    emit([&](std::size_t i) { return first[i].key; });
    for (const auto& row : cells)
        emit([&](std::size_t i) { return row[i - 1]; });
    pending_.clear();
    out_.flush();
}

}  // namespace qparity
