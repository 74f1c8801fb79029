#pragma once

#include "paircollect/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace paircollect::report {

// Row values. Rationals render as "p/q" strings (never as floats), reals as
// 17-significant-digit decimals.
using Value = std::variant<bool, std::int64_t, std::uint64_t, double, std::string, BigRational>;

struct ReportRow {
    std::vector<std::pair<std::string, Value>> fields;

    void set(std::string key, Value v) {
        fields.emplace_back(std::move(key), std::move(v));
    }
};

enum class Format { JsonLines, Csv };

// Accepts "jsonl" and "csv".
Format parse_format(const std::string& name);

// json-lines: one object per row, keys sorted; csv: sorted header row then
// data rows with RFC-style quoting. All rows must share one key set. The
// schema argument supplies the csv header when the row set is empty.
void emit_report(const std::vector<ReportRow>& rows, Format format, std::ostream& out,
                 const std::vector<std::string>& schema = {});

std::string format_real(double v);

}  // namespace paircollect::report
