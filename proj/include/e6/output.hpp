#pragma once

#include <string>
#include <utility>
#include <vector>

namespace e6 {

enum class Format { json, csv, markdown };

Format parse_format(const std::string& s);  // throws input_error

// A report with scalar fields plus one table; renders byte-deterministically
// in all three formats.
struct OutputDoc {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void kv(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }
    std::string render(Format f) const;
};

}  // namespace e6
