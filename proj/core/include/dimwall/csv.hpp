#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dimwall::csv {

/// Serialize with 17 significant digits so every double round-trips.
std::string format_double(double v);

std::string format_int(long long v);
std::string format_uint(std::uint64_t v);

/// One row, already cell-formatted. Empty strings are legal (N/A cells).
using Row = std::vector<std::string>;

/// UTF-8, LF line endings, comma separated, header first. Cells must not
/// contain commas, quotes or newlines; experiment tables never need them.
std::string render(const std::vector<std::string>& header, const std::vector<Row>& rows);

void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Minimal reader for the files render() produces (no quoting).
std::vector<Row> parse(const std::string& bytes);

/// FNV-1a 64-bit content hash, as fixed-width hex. Used to label outputs in
/// the run manifest; not a cryptographic digest.
std::string fnv1a64_hex(const std::string& bytes);

} // namespace dimwall::csv
