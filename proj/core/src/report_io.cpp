// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace csgeom {

std::string format_double17(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
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

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string join_witnesses(const std::vector<std::string>& ws) {
    std::string out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (i) out += "|";
        out += ws[i];
    }
    return out;
}

}  // namespace

std::string to_json(const verify::CheckReport& r) {
    std::ostringstream os;
    os << "{\"check\":\"" << json_escape(r.check) << "\""
       << ",\"model\":\"" << json_escape(r.model) << "\""
       << ",\"trials\":" << r.trials
       << ",\"seed\":" << r.seed
       << ",\"tolerance\":" << format_double17(r.tolerance)
       << ",\"max_abs_error\":" << format_double17(r.max_abs_error)
       << ",\"pass\":" << (r.pass ? "true" : "false")
       << ",\"witnesses\":[";
    for (std::size_t i = 0; i < r.witnesses.size(); ++i)
        os << (i ? "," : "") << "\"" << json_escape(r.witnesses[i]) << "\"";
    os << "]}";
    return os.str();
}

std::string check_report_csv_header() {
    return "check,model,trials,seed,tolerance,max_abs_error,pass,witnesses";
}

std::string to_csv_row(const verify::CheckReport& r) {
    std::ostringstream os;
    os << r.check << "," << r.model << "," << r.trials << "," << r.seed << ","
       << format_double17(r.tolerance) << "," << format_double17(r.max_abs_error) << ","
       << (r.pass ? "true" : "false") << "," << csv_quote(join_witnesses(r.witnesses));
    return os.str();
}

std::string to_json(const verify::SevenNumbersReport& r) {
    std::ostringstream os;
    os << "{\"check\":\"seven\""
       << ",\"model\":\"" << json_escape(r.model) << "\""
       << ",\"flag\":\"" << json_escape(r.flag) << "\""
       << ",\"seed\":" << r.seed
       << ",\"n1_max_orthogonal\":" << r.n1_max_orthogonal
       << ",\"n2_sections\":" << r.n2_sections
       << ",\"n3_bwb_dim\":" << r.n3_bwb_dim
       << ",\"n4_minimal_n\":" << r.n4_minimal_n
       << ",\"n5_morse_count\":" << r.n5_morse_count
       << ",\"n6_euler_char\":" << r.n6_euler_char
       << ",\"n7_cell_count\":" << r.n7_cell_count
       << ",\"all_equal\":" << (r.all_equal ? "true" : "false")
       << ",\"method\":[";
    for (std::size_t i = 0; i < r.method.size(); ++i)
        os << (i ? "," : "") << "\"" << json_escape(r.method[i]) << "\"";
    os << "]}";
    return os.str();
}

std::string seven_report_csv_header() {
    return "check,model,flag,seed,n1_max_orthogonal,n2_sections,n3_bwb_dim,n4_minimal_n,"
           "n5_morse_count,n6_euler_char,n7_cell_count,all_equal";
}

std::string to_csv_row(const verify::SevenNumbersReport& r) {
    std::ostringstream os;
    os << "seven," << r.model << "," << csv_quote(r.flag) << "," << r.seed << ","
       << r.n1_max_orthogonal << "," << r.n2_sections << "," << r.n3_bwb_dim << ","
       << r.n4_minimal_n << "," << r.n5_morse_count << "," << r.n6_euler_char << ","
       << r.n7_cell_count << "," << (r.all_equal ? "true" : "false");
    return os.str();
}

}  // namespace csgeom
