#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hyperdyn/element.hpp"

namespace hyperdyn {

using Record = nlohmann::ordered_json;

enum class ReportFormat { Records, Csv };

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// A number rounded to 12 significant digits; non-finite values become the
/// strings "inf", "-inf" and "nan".
Record number(double v);
Record labels(const ElementSet& s);

/// UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Line-delimited report: one header record (the only place a timestamp
/// appears), one record per row and a closing summary. Rows carry the
/// command, scenario id, scenario hash, convention and horizon.
class Report {
public:
    Report(std::string command, std::vector<std::string> args, std::string scenario_id,
           const std::string& scenario_text, std::string convention, std::int64_t horizon, std::uint64_t seed);

    /// A new row pre-filled with the run metadata.
    Record& add_row(const std::string& kind);
    void finish(const std::string& verdict, int exit_code, Record extra = Record::object());

    const std::vector<Record>& rows() const { return rows_; }
    const Record& summary() const { return summary_; }
    const std::string& scenario_hash() const { return hash_; }

    /// Everything after the header line; deterministic for a given scenario.
    std::string body(ReportFormat format) const;
    void write(std::ostream& out, ReportFormat format, const std::string& timestamp) const;

private:
    Record metadata(const std::string& kind) const;

    std::string command_;
    std::vector<std::string> args_;
    std::string scenario_id_;
    std::string scenario_text_;
    std::string hash_;
    std::string convention_;
    std::int64_t horizon_;
    std::uint64_t seed_;
    std::vector<Record> rows_;
    Record summary_;
};

}  // namespace hyperdyn
