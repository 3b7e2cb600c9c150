#include "variantlab/csv.hpp"

#include "variantlab/errors.hpp"

namespace vlab {

std::string csvEscape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void CsvWriter::row(std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << csvEscape(fields[i]);
    }
    out_ << '\n';
    if (!out_) throw Error(Errc::Io, "csv: write failed");
}

}  // namespace vlab
