#include "zimin/selfref.hpp"

#include <sstream>

#include <json.hpp>

#include "zimin/instances.hpp"
#include "zimin/match.hpp"

namespace zimin {
namespace {

void require_self_ref_index(unsigned n) {
  if (n < 2) {
    throw std::out_of_range(
        "self-reference verification requires 1 < n: the n = 1 truth table "
        "is the all-ones word of length q (for q = 2 that is 11, shorter "
        "than any instance of the 2-variable pattern)");
  }
}

std::string symbols_str(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out.push_back(symbol_to_digit(s));
  return out;
}

std::string abbreviated(const std::string& digits, std::size_t keep = 96) {
  if (digits.size() <= keep) return digits;
  return digits.substr(0, keep) + "... (" + std::to_string(digits.size()) +
         " symbols)";
}

// Witness for the table word, as an instance of zimin_pattern(proved).
Witness table_witness(const CountTable& table, unsigned proved,
                      const char* claim) {
  const std::vector<Symbol> word = truth_symbols(table);
  auto wit = zimin_instance_witness(word, proved);
  if (!wit) {
    std::ostringstream msg;
    msg << claim << " failed: the truth table "
        << abbreviated(table_digits(table)) << " (n=" << table.spec.zimin_index
        << " q=" << table.spec.alphabet.size() << " m=" << table.spec.word_length
        << ") is not an instance of the " << proved
        << "-variable zimin pattern";
    throw VerificationError(msg.str());
  }
  if (!wit->reproduces(zimin_pattern(proved), word)) {
    throw VerificationError(std::string(claim) +
                            " failed: extracted witness does not reproduce "
                            "the table");
  }
  return std::move(*wit);
}

}  // namespace

SelfRefWitness verify_self_reference(unsigned n, Alphabet a, unsigned workers) {
  require_self_ref_index(n);
  const unsigned m = (1u << n) - 1;
  CountTable table = truth_table(n, a, m, workers);
  std::vector<std::uint64_t> ones = one_positions(table);

  // (a) ones sit exactly at the minimal instances.
  const InstanceSet set = instances(n, a);
  if (ones.size() != set.words.size()) {
    std::ostringstream msg;
    msg << "ones count " << ones.size() << " differs from the instance count "
        << set.words.size() << " = " << a.size() << "^" << n << " (n=" << n
        << " q=" << a.size() << ")";
    throw VerificationError(msg.str());
  }
  for (std::size_t i = 0; i < ones.size(); ++i) {
    const std::uint64_t expected = lex_index(set.words[i]);
    if (ones[i] != expected) {
      std::ostringstream msg;
      msg << "one #" << i << " sits at index " << ones[i] << " (word "
          << word_from_index(ones[i], a, m).str() << ") but instance "
          << set.words[i].str() << " has index " << expected;
      throw VerificationError(msg.str());
    }
  }

  // (b) the table itself is an instance one level up.
  Witness wit = table_witness(table, n + 1, "self-reference");

  // (c) block structure: each generator contributes q ones spaced by the
  // family gap, and neighboring generators sit cross_gap apart.
  if (table.entries[0] != 1) {
    throw VerificationError("truth table does not begin with 1");
  }
  const InstanceSet parents = instances(n - 1, a);
  const unsigned q = a.size();
  std::uint64_t family_gap_value = 0;
  std::vector<std::uint64_t> cross_gaps;
  for (std::size_t k = 0; k < parents.words.size(); ++k) {
    const std::uint64_t gap = family_gap(parents.words[k]);
    if (family_gap_value == 0) family_gap_value = gap;
    for (unsigned s = 0; s + 1 < q; ++s) {
      const std::uint64_t lo = ones[k * q + s];
      const std::uint64_t hi = ones[k * q + s + 1];
      if (hi - lo != gap) {
        std::ostringstream msg;
        msg << "within the family of " << parents.words[k].str()
            << " the ones at " << lo << " and " << hi << " are " << (hi - lo)
            << " apart, expected the family gap " << gap;
        throw VerificationError(msg.str());
      }
    }
    if (k + 1 < parents.words.size()) {
      const std::uint64_t expected =
          cross_gap(parents.words[k], parents.words[k + 1]);
      const std::uint64_t lo = ones[k * q + q - 1];
      const std::uint64_t hi = ones[(k + 1) * q];
      if (hi - lo != expected) {
        std::ostringstream msg;
        msg << "between the families of " << parents.words[k].str() << " and "
            << parents.words[k + 1].str() << " the ones at " << lo << " and "
            << hi << " are " << (hi - lo) << " apart, expected the cross gap "
            << expected;
        throw VerificationError(msg.str());
      }
      cross_gaps.push_back(expected);
    }
  }

  return SelfRefWitness{SelfRefKind::minimal_length,
                        n,
                        a,
                        m,
                        n + 1,
                        std::move(table),
                        std::move(wit),
                        std::move(ones),
                        family_gap_value,
                        std::move(cross_gaps)};
}

SelfRefWitness verify_extension(unsigned n, Alphabet a, unsigned workers) {
  require_self_ref_index(n);
  const unsigned m = 1u << n;
  CountTable table = truth_table(n, a, m, workers);
  Witness wit = table_witness(table, n + 2, "extension");
  std::vector<std::uint64_t> ones = one_positions(table);
  return SelfRefWitness{SelfRefKind::extended,
                        n,
                        a,
                        m,
                        n + 2,
                        std::move(table),
                        std::move(wit),
                        std::move(ones),
                        0,
                        {}};
}

std::string render_report(const SelfRefWitness& w) {
  std::ostringstream out;
  const bool minimal = w.kind == SelfRefKind::minimal_length;
  out << (minimal ? "self-reference check" : "extension check")
      << ": n=" << w.zimin_index << " q=" << w.alphabet.size()
      << " m=" << w.word_length << "\n";
  out << "truth table (" << w.table.entries.size()
      << " entries): " << abbreviated(table_digits(w.table)) << "\n";
  out << "ones: " << w.ones_positions.size();
  if (w.ones_positions.size() <= 64) {
    out << " at positions";
    for (auto p : w.ones_positions) out << ' ' << p;
  }
  out << "\n";
  if (minimal) {
    out << "ones positions equal the lex indices of the minimal instances\n";
  }
  out << "the table is an instance of the " << w.proved_index
      << "-variable zimin pattern; witness:\n";
  for (std::size_t v = 0; v < w.witness.images.size(); ++v) {
    out << "  x" << v << " = " << abbreviated(symbols_str(w.witness.images[v]), 64)
        << "\n";
  }
  out << "witness reproduces the table: yes\n";
  if (minimal) {
    out << "within-family gap: " << w.family_gap_value << "\n";
    out << "cross-family gaps:";
    for (auto g : w.cross_gaps) out << ' ' << g;
    out << "\n";
  }
  return out.str();
}

std::string render_record(const SelfRefWitness& w) {
  nlohmann::json record;
  record["kind"] =
      w.kind == SelfRefKind::minimal_length ? "self_reference" : "extension";
  record["n"] = w.zimin_index;
  record["q"] = w.alphabet.size();
  record["m"] = w.word_length;
  record["proved_zimin_index"] = w.proved_index;
  record["table_length"] = w.table.entries.size();
  record["table"] = table_digits(w.table);
  record["ones_positions"] = w.ones_positions;
  std::vector<std::string> images;
  images.reserve(w.witness.images.size());
  for (const auto& img : w.witness.images) images.push_back(symbols_str(img));
  record["witness_images"] = images;
  if (w.kind == SelfRefKind::minimal_length) {
    record["family_gap"] = w.family_gap_value;
    record["cross_gaps"] = w.cross_gaps;
  }
  return record.dump(2);
}

}  // namespace zimin
