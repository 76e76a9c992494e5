#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zimin/pattern.hpp"
#include "zimin/table.hpp"

namespace zimin {

/// A theorem assertion failed during verification. At the scales the checks
/// run, this indicates an implementation bug; the message carries the
/// counterexample.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SelfRefKind {
  minimal_length,  // word length 2^n - 1, table shown to be a Z_{n+1} instance
  extended,        // word length 2^n, table shown to be a Z_{n+2} instance
};

/// Successful verification outcome: the truth table, the morphism proving
/// it is a Zimin instance, and the positions of its ones. For the
/// minimal-length check the ones positions equal the lex indices of the
/// minimal instances, and the block structure (family gap, cross gaps) is
/// recorded as well.
struct SelfRefWitness {
  SelfRefKind kind;
  unsigned zimin_index;   // n of the table
  Alphabet alphabet;
  unsigned word_length;   // m
  unsigned proved_index;  // the table is an instance of zimin_pattern(proved_index)
  CountTable table;
  Witness witness;
  std::vector<std::uint64_t> ones_positions;
  std::uint64_t family_gap_value = 0;     // minimal_length only
  std::vector<std::uint64_t> cross_gaps;  // minimal_length only
};

/// Verifies that the truth table of zimin_pattern(n) over words of length
/// 2^n - 1 (a) has its ones exactly at the minimal instances, (b) read as a
/// binary word is an instance of zimin_pattern(n+1), witness extracted and
/// reapplied, and (c) decomposes into per-generator blocks separated by the
/// predicted gaps. Requires 1 < n: the n = 1 table over two letters is 11,
/// which is too short to be an instance of the next pattern.
SelfRefWitness verify_self_reference(unsigned n, Alphabet a,
                                     unsigned workers = 1);

/// Verifies that the truth table over words of length 2^n is an instance of
/// zimin_pattern(n+2), returning the extracted witness. Requires 1 < n.
SelfRefWitness verify_extension(unsigned n, Alphabet a, unsigned workers = 1);

/// Human-readable verification report.
std::string render_report(const SelfRefWitness& w);

/// Machine-readable record (JSON) with the full table, witness images and
/// ones positions.
std::string render_record(const SelfRefWitness& w);

}  // namespace zimin
