#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace vlab {

// Minimal RFC-4180-style writer: UTF-8, LF line endings, quoting only when
// a field needs it.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void row(std::span<const std::string> fields);
    void row(std::initializer_list<std::string> fields) {
        row(std::span<const std::string>(fields.begin(), fields.size()));
    }

private:
    std::ostream& out_;
};

std::string csvEscape(const std::string& field);

}  // namespace vlab
