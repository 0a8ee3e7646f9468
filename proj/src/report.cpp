#include "hyperdyn/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace hyperdyn {

namespace {

constexpr const char* kTool = "hyperdyn";
constexpr const char* kVersion = "1.0.0";

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// Compact JSON with every floating-point value printed as %.12g.
void serialize(const Record& v, std::string& out) {
    switch (v.type()) {
        case Record::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : v.items()) {
                if (!first) out += ',';
                first = false;
                out += Record(key).dump();
                out += ':';
                serialize(value, out);
            }
            out += '}';
            break;
        }
        case Record::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ',';
                serialize(v[i], out);
            }
            out += ']';
            break;
        }
        case Record::value_t::number_float: out += format_double(v.get<double>()); break;
        default: out += v.dump();
    }
}

std::string line(const Record& v) {
    std::string out;
    serialize(v, out);
    return out;
}

std::string csv_cell(const Record& v) {
    std::string s;
    if (v.is_null()) return "";
    if (v.is_string()) {
        s = v.get<std::string>();
    } else {
        s = line(v);
    }
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

Record number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return std::strtod(format_double(v).c_str(), nullptr);
}

Record labels(const ElementSet& s) {
    Record out = Record::array();
    for (const Element& x : s) out.push_back(x.label);
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Report::Report(std::string command, std::vector<std::string> args, std::string scenario_id,
               const std::string& scenario_text, std::string convention, std::int64_t horizon, std::uint64_t seed)
    : command_(std::move(command)),
      args_(std::move(args)),
      scenario_id_(std::move(scenario_id)),
      scenario_text_(scenario_text),
      hash_(sha256_hex(scenario_text)),
      convention_(std::move(convention)),
      horizon_(horizon),
      seed_(seed) {}

Record Report::metadata(const std::string& kind) const {
    Record r;
    r["record"] = kind;
    r["command"] = command_;
    r["scenario"] = scenario_id_;
    r["scenario_sha256"] = hash_;
    r["convention"] = convention_;
    r["horizon"] = horizon_;
    return r;
}

Record& Report::add_row(const std::string& kind) {
    rows_.push_back(metadata("row"));
    rows_.back()["kind"] = kind;
    return rows_.back();
}

void Report::finish(const std::string& verdict, int exit_code, Record extra) {
    summary_ = metadata("summary");
    summary_["args"] = args_;
    summary_["seed"] = seed_;
    for (auto& [key, value] : extra.items()) summary_[key] = value;
    summary_["verdict"] = verdict;
    summary_["exit_code"] = exit_code;
}

std::string Report::body(ReportFormat format) const {
    std::ostringstream out;
    if (format == ReportFormat::Records) {
        for (const auto& r : rows_) out << line(r) << '\n';
        if (!summary_.is_null()) out << line(summary_) << '\n';
        return out.str();
    }
    std::vector<std::string> columns;
    auto collect = [&](const Record& r) {
        for (const auto& [key, value] : r.items()) {
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
        }
    };
    for (const auto& r : rows_) collect(r);
    if (!summary_.is_null()) collect(summary_);
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_cell(columns[i]);
    out << '\n';
    auto emit = [&](const Record& r) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out << ',';
            if (r.contains(columns[i])) out << csv_cell(r.at(columns[i]));
        }
        out << '\n';
    };
    for (const auto& r : rows_) emit(r);
    if (!summary_.is_null()) emit(summary_);
    return out.str();
}

void Report::write(std::ostream& out, ReportFormat format, const std::string& timestamp) const {
    if (format == ReportFormat::Records) {
        Record header;
        header["record"] = "header";
        header["tool"] = kTool;
        header["version"] = kVersion;
        header["timestamp"] = timestamp;
        header["command"] = command_;
        header["args"] = args_;
        header["seed"] = seed_;
        header["scenario"] = scenario_id_;
        header["scenario_sha256"] = hash_;
        header["scenario_text"] = scenario_text_;
        out << line(header) << '\n';
    } else {
        out << "# " << kTool << ' ' << kVersion << " timestamp=" << timestamp << " scenario=" << scenario_id_
            << " scenario_sha256=" << hash_ << '\n';
    }
    out << body(format);
}

}  // namespace hyperdyn
