#include "mbergman/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace mbergman {

CheckReport& CheckReport::param(const std::string& key, const std::string& value) {
    params.emplace_back(key, value);
    return *this;
}

CheckReport& CheckReport::param(const std::string& key, double value) {
    return param(key, format_real(value));
}

CheckReport& CheckReport::param(const std::string& key, int value) {
    return param(key, std::to_string(value));
}

CheckReport& CheckReport::finalize(double tol_abs) {
    margin = rhs - lhs;
    outcome = margin >= -tol_abs ? Outcome::Pass : Outcome::Fail;
    param("tol", tol_abs);
    return *this;
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const std::string& csv_header() {
    static const std::string header =
        "check_id,params,lhs,rhs,margin,pass,provenance,runtime_ms";
    return header;
}

namespace {

std::string outcome_str(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "true";
        case Outcome::Fail: return "false";
        case Outcome::Info: return "informational";
    }
    return "false";
}

Outcome outcome_from(const std::string& s) {
    if (s == "true") return Outcome::Pass;
    if (s == "false") return Outcome::Fail;
    if (s == "informational") return Outcome::Info;
    throw std::invalid_argument("report_from_csv_row: bad pass field '" + s + "'");
}

std::string serialize_params(const CheckReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.params.size(); ++i) {
        if (i) out += ';';
        out += report.params[i].first;
        out += '=';
        out += report.params[i].second;
    }
    return out;
}

}  // namespace

std::string to_csv_row(const CheckReport& report) {
    std::ostringstream row;
    row << report.check_id << ',' << serialize_params(report) << ',' << format_real(report.lhs)
        << ',' << format_real(report.rhs) << ',' << format_real(report.margin) << ','
        << outcome_str(report.outcome) << ',' << report.provenance << ','
        << report.runtime_ms;
    return row.str();
}

CheckReport report_from_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    if (fields.size() != 8)
        throw std::invalid_argument("report_from_csv_row: expected 8 fields, got " +
                                    std::to_string(fields.size()));
    CheckReport report;
    report.check_id = fields[0];
    if (!fields[1].empty()) {
        std::stringstream ps(fields[1]);
        std::string item;
        while (std::getline(ps, item, ';')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("report_from_csv_row: bad param '" + item + "'");
            report.params.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        }
    }
    report.lhs = std::strtod(fields[2].c_str(), nullptr);
    report.rhs = std::strtod(fields[3].c_str(), nullptr);
    report.margin = std::strtod(fields[4].c_str(), nullptr);
    report.outcome = outcome_from(fields[5]);
    report.provenance = fields[6];
    report.runtime_ms = std::strtoll(fields[7].c_str(), nullptr, 10);
    return report;
}

void sort_reports(std::vector<CheckReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         if (a.check_id != b.check_id) return a.check_id < b.check_id;
                         return serialize_params(a) < serialize_params(b);
                     });
}

}  // namespace mbergman
