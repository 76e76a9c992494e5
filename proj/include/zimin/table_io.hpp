#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "zimin/table.hpp"

namespace zimin {

/// Malformed table file; `offset` is the byte position of the defect.
struct TableParseError : std::runtime_error {
  TableParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + what),
        offset(offset) {}
  std::size_t offset;
};

/// Binary table format (.ztbl), little-endian throughout:
///   0  magic "ZTBL"
///   4  version (1)
///   5  kind (0 truth, 1 density)
///   6  q
///   7  n
///   8  word length m (2 bytes)
///  10  entry count, must equal q^m (8 bytes)
///  18  entries, 4 bytes each
void write_table(const CountTable& t, std::ostream& out);

/// Inverse of write_table; rejects bad magic/version/shape with the byte
/// offset of the problem. read_table(write_table(t)) == t.
CountTable read_table(std::istream& in);

void write_table_file(const CountTable& t, const std::filesystem::path& path);
CountTable read_table_file(const std::filesystem::path& path);

/// One line per entry after a fixed header row: index, word digits, count.
void export_csv(const CountTable& t, std::ostream& out);
void export_csv_file(const CountTable& t, const std::filesystem::path& path);

/// Near-square reshaping of a table: the high digits of the lex index pick
/// the row, the low digits the column, row-major.
struct RasterLayout {
  std::uint64_t width;   // q^ceil(m/2)
  std::uint64_t height;  // q^floor(m/2)
};
RasterLayout raster_layout(const TableSpec& spec);

/// Binary greyscale PGM (P5, maxval 255). Each table cell becomes a
/// scale x scale block with value floor(255 * entry / max(1, max entry)).
void render_raster(const CountTable& t, std::ostream& out, unsigned scale = 1);
void render_raster_file(const CountTable& t, const std::filesystem::path& path,
                        unsigned scale = 1);

}  // namespace zimin
