#include "zimin/table_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "zimin/pattern.hpp"

namespace zimin {
namespace {

constexpr std::array<char, 4> kMagic = {'Z', 'T', 'B', 'L'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 18;

void put_le(std::vector<unsigned char>& out, std::uint64_t value,
            unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) {
    out.push_back(static_cast<unsigned char>(value >> (8 * i)));
  }
}

std::uint64_t get_le(const unsigned char* p, unsigned bytes) {
  std::uint64_t value = 0;
  for (unsigned i = 0; i < bytes; ++i) {
    value |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  }
  return value;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_table(const CountTable& t, std::ostream& out) {
  std::vector<unsigned char> buf;
  buf.reserve(kHeaderSize + 4 * t.entries.size());
  for (char c : kMagic) buf.push_back(static_cast<unsigned char>(c));
  buf.push_back(kVersion);
  buf.push_back(static_cast<unsigned char>(t.spec.kind));
  buf.push_back(static_cast<unsigned char>(t.spec.alphabet.size()));
  buf.push_back(static_cast<unsigned char>(t.spec.zimin_index));
  put_le(buf, t.spec.word_length, 2);
  put_le(buf, t.entries.size(), 8);
  for (std::uint32_t e : t.entries) put_le(buf, e, 4);
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
}

CountTable read_table(std::istream& in) {
  std::array<unsigned char, kHeaderSize> header;
  in.read(reinterpret_cast<char*>(header.data()), kHeaderSize);
  if (static_cast<std::size_t>(in.gcount()) != kHeaderSize) {
    throw TableParseError(static_cast<std::size_t>(std::max<std::streamsize>(in.gcount(), 0)),
                          "truncated header");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), header.begin(),
                  [](char c, unsigned char b) {
                    return static_cast<unsigned char>(c) == b;
                  })) {
    throw TableParseError(0, "bad magic, expected ZTBL");
  }
  if (header[4] != kVersion) {
    throw TableParseError(4, "unsupported version " + std::to_string(header[4]));
  }
  if (header[5] > 1) {
    throw TableParseError(5, "unknown table kind " + std::to_string(header[5]));
  }
  const TableKind kind = static_cast<TableKind>(header[5]);
  const unsigned q = header[6];
  if (q < kMinAlphabetSize || q > kMaxAlphabetSize) {
    throw TableParseError(6, "alphabet size " + std::to_string(q) +
                                 " out of range");
  }
  const unsigned n = header[7];
  if (n < 1 || n > kMaxZiminIndex) {
    throw TableParseError(7, "zimin index " + std::to_string(n) +
                                 " out of range");
  }
  const unsigned m = static_cast<unsigned>(get_le(header.data() + 8, 2));
  if (m > kMaxWordLength) {
    throw TableParseError(8, "word length " + std::to_string(m) +
                                 " out of range");
  }
  const Alphabet a(q);
  const std::uint64_t declared = get_le(header.data() + 10, 8);
  std::uint64_t expected;
  try {
    expected = index_space(a, m);
  } catch (const std::out_of_range&) {
    throw TableParseError(10, "entry count exceeds the index space");
  }
  if (declared != expected) {
    throw TableParseError(10, "entry count " + std::to_string(declared) +
                                  " does not match " + std::to_string(q) + "^" +
                                  std::to_string(m) + " = " +
                                  std::to_string(expected));
  }

  CountTable t{TableSpec{n, a, m, kind}, {}};
  t.entries.reserve(declared);
  const std::uint64_t bound = max_density_bound(n, m);
  for (std::uint64_t i = 0; i < declared; ++i) {
    std::array<unsigned char, 4> raw;
    const std::size_t offset = kHeaderSize + 4 * i;
    in.read(reinterpret_cast<char*>(raw.data()), 4);
    if (in.gcount() != 4) {
      throw TableParseError(offset, "truncated entries, expected " +
                                        std::to_string(declared));
    }
    const std::uint32_t e = static_cast<std::uint32_t>(get_le(raw.data(), 4));
    if (kind == TableKind::truth && e > 1) {
      throw TableParseError(offset, "truth entry " + std::to_string(e) +
                                        " is not 0 or 1");
    }
    if (kind == TableKind::density && e > bound) {
      throw TableParseError(offset, "density entry " + std::to_string(e) +
                                        " exceeds the bound " +
                                        std::to_string(bound));
    }
    t.entries.push_back(e);
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw TableParseError(kHeaderSize + 4 * declared, "trailing data");
  }
  return t;
}

void write_table_file(const CountTable& t, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_table(t, out);
}

CountTable read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_table(in);
}

void export_csv(const CountTable& t, std::ostream& out) {
  out << "index,word,count\n";
  LexCursor cursor(t.spec.alphabet, t.spec.word_length);
  for (std::uint64_t i = 0; i < t.entries.size(); ++i) {
    out << i << ',' << cursor.next().str() << ',' << t.entries[i] << '\n';
  }
}

void export_csv_file(const CountTable& t, const std::filesystem::path& path) {
  auto out = open_out(path);
  export_csv(t, out);
}

RasterLayout raster_layout(const TableSpec& spec) {
  const unsigned m = spec.word_length;
  RasterLayout layout{index_space(spec.alphabet, (m + 1) / 2),
                      index_space(spec.alphabet, m / 2)};
  return layout;
}

void render_raster(const CountTable& t, std::ostream& out, unsigned scale) {
  if (scale < 1) throw std::out_of_range("raster scale must be at least 1");
  const RasterLayout layout = raster_layout(t.spec);
  const std::uint32_t max_entry =
      std::max<std::uint32_t>(1, t.entries.empty()
                                     ? 0
                                     : *std::max_element(t.entries.begin(),
                                                         t.entries.end()));
  out << "P5\n" << layout.width * scale << ' ' << layout.height * scale
      << "\n255\n";
  std::vector<unsigned char> row(layout.width * scale);
  for (std::uint64_t r = 0; r < layout.height; ++r) {
    for (std::uint64_t c = 0; c < layout.width; ++c) {
      const std::uint32_t entry = t.entries[r * layout.width + c];
      const unsigned char value =
          static_cast<unsigned char>(std::uint64_t{255} * entry / max_entry);
      std::fill_n(row.begin() + static_cast<std::ptrdiff_t>(c * scale), scale,
                  value);
    }
    for (unsigned rep = 0; rep < scale; ++rep) {
      out.write(reinterpret_cast<const char*>(row.data()),
                static_cast<std::streamsize>(row.size()));
    }
  }
}

void render_raster_file(const CountTable& t, const std::filesystem::path& path,
                        unsigned scale) {
  auto out = open_out(path);
  render_raster(t, out, scale);
}

}  // namespace zimin
