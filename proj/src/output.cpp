#include "e6/output.hpp"

#include "e6/numeric.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace e6 {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "markdown" || s == "md") return Format::markdown;
    throw input_error("unknown format: " + s);
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string OutputDoc::render(Format f) const {
    if (f == Format::json) {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : meta) j[k] = v;
        if (!headers.empty()) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json obj;
                for (size_t i = 0; i < headers.size(); ++i) obj[headers[i]] = row[i];
                arr.push_back(obj);
            }
            j["rows"] = arr;
        }
        return j.dump(2) + "\n";
    }

    std::ostringstream out;
    if (f == Format::csv) {
        for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
        if (!headers.empty()) {
            for (size_t i = 0; i < headers.size(); ++i)
                out << (i ? "," : "") << csv_escape(headers[i]);
            out << "\n";
            for (const auto& row : rows) {
                for (size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_escape(row[i]);
                out << "\n";
            }
        }
        return out.str();
    }

    for (const auto& [k, v] : meta) out << "- **" << k << "**: " << v << "\n";
    if (!headers.empty()) {
        if (!meta.empty()) out << "\n";
        out << "|";
        for (const auto& h : headers) out << " " << h << " |";
        out << "\n|";
        for (size_t i = 0; i < headers.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : rows) {
            out << "|";
            for (const auto& cell : row) out << " " << cell << " |";
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace e6
