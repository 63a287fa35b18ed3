#include "dimwall/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "dimwall/errors.hpp"

namespace dimwall::csv {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_int(long long v) { return std::to_string(v); }

std::string format_uint(std::uint64_t v) { return std::to_string(v); }

std::string render(const std::vector<std::string>& header, const std::vector<Row>& rows) {
    std::string out;
    auto emit = [&out](const Row& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out.push_back(',');
            out += cells[i];
        }
        out.push_back('\n');
    };
    emit(header);
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw DomainError("csv: row width does not match the header");
        emit(row);
    }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("csv: cannot open " + path.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("csv: short write to " + path.string());
}

std::vector<Row> parse(const std::string& bytes) {
    std::vector<Row> rows;
    Row current;
    std::string cell;
    for (char c : bytes) {
        if (c == ',') {
            current.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            current.push_back(std::move(cell));
            cell.clear();
            rows.push_back(std::move(current));
            current.clear();
        } else {
            cell.push_back(c);
        }
    }
    if (!cell.empty() || !current.empty()) {
        current.push_back(std::move(cell));
        rows.push_back(std::move(current));
    }
    return rows;
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace dimwall::csv
