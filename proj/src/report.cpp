#include "paircollect/report.hpp"

#include "paircollect/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace paircollect::report {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_json(const Value& v) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(std::uint64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_real(d); }
        std::string operator()(const std::string& s) const { return '"' + json_escape(s) + '"'; }
        std::string operator()(const BigRational& q) const {
            return '"' + to_fraction_string(q) + '"';
        }
    };
    return std::visit(Visitor{}, v);
}

std::string to_csv(const Value& v) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(std::uint64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_real(d); }
        std::string operator()(const std::string& s) const { return csv_escape(s); }
        std::string operator()(const BigRational& q) const {
            return csv_escape(to_fraction_string(q));
        }
    };
    return std::visit(Visitor{}, v);
}

// Sorted key order defines the frozen schema for both formats.
std::vector<const std::pair<std::string, Value>*> sorted_fields(const ReportRow& row) {
    std::vector<const std::pair<std::string, Value>*> out;
    out.reserve(row.fields.size());
    for (const auto& field : row.fields) out.push_back(&field);
    std::sort(out.begin(), out.end(),
              [](const auto* a, const auto* b) { return a->first < b->first; });
    return out;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "jsonl") return Format::JsonLines;
    if (name == "csv") return Format::Csv;
    throw parameter_error("unknown output format '" + name + "' (expected jsonl or csv)");
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_report(const std::vector<ReportRow>& rows, Format format, std::ostream& out,
                 const std::vector<std::string>& schema) {
    if (format == Format::JsonLines) {
        for (const ReportRow& row : rows) {
            out << '{';
            bool first = true;
            for (const auto* field : sorted_fields(row)) {
                if (!first) out << ',';
                first = false;
                out << '"' << json_escape(field->first) << "\":" << to_json(field->second);
            }
            out << "}\n";
        }
        return;
    }

    if (rows.empty()) {
        std::vector<std::string> keys = schema;
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(keys[i]);
        }
        out << '\n';
        return;
    }
    auto header = sorted_fields(rows.front());
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << csv_escape(header[i]->first);
    }
    out << '\n';
    for (const ReportRow& row : rows) {
        auto fields = sorted_fields(row);
        if (fields.size() != header.size()) {
            throw parameter_error("emit_report: rows do not share a schema");
        }
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (fields[i]->first != header[i]->first) {
                throw parameter_error("emit_report: rows do not share a schema");
            }
            if (i) out << ',';
            out << to_csv(fields[i]->second);
        }
        out << '\n';
    }
}

}  // namespace paircollect::report
