#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "zimin/pattern.hpp"

// Brute-force reference implementations, deliberately free of the search
// structure used by the library: every division of the word into |pattern|
// nonempty segments is enumerated in full and only then checked for variable
// consistency. The library paths are tested against these.
namespace zimin::oracle {

std::optional<Witness> find_witness(std::span<const Symbol> word,
                                    const Pattern& p);
bool is_instance(std::span<const Symbol> word, const Pattern& p);
bool encounters(std::span<const Symbol> word, const Pattern& p);
std::uint64_t density(std::span<const Symbol> word, const Pattern& p);

}  // namespace zimin::oracle
