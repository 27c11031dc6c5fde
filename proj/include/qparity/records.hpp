#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qparity/series.hpp"
#include "qparity/verify.hpp"

namespace qparity {

/// Decimal digits printed as a bare number in every format (arbitrary size).
struct Decimal {
    std::string digits;
};

using FieldValue = std::variant<std::monostate, bool, std::int64_t, std::string, Decimal>;

struct Field {
    std::string key;
    FieldValue value;
};

/* One output row. Every record in a stream has the same keys in the same
 * order; the first key is always "kind". */
using Record = std::vector<Field>;

enum class Format { Plain, JsonLines, Csv };

std::optional<Format> parse_format(std::string_view name);

Record coefficient_record(std::size_t t, std::size_t n, Domain domain, const BigInt& value);
Record to_record(const VerificationReport& report);
Record to_record(const CongruenceClaim& claim);

/* json-lines and csv stream row by row; the plain table is buffered until
 * finish() so columns can be aligned. */
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format);
    RecordWriter(const RecordWriter&) = delete;
    RecordWriter& operator=(const RecordWriter&) = delete;
    ~RecordWriter();

    void write(const Record& record);
    void finish();

private:
    std::ostream& out_;
    Format format_;
    bool header_done_ = false;
    bool finished_ = false;
    std::vector<Record> pending_;
};

}  // namespace qparity
