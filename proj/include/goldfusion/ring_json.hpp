#pragma once

#include <iosfwd>
#include <string>

#include "goldfusion/fusion_ring.hpp"
#include "goldfusion/word_engine.hpp"

namespace goldfusion {

/// Ring format:
///   {"basis": [labels], "unit": idx, "dual": [perm],
///    "fusion": [[a,b,c,mult], ...]}
/// with omitted triples meaning multiplicity 0. Serialization is
/// deterministic: triples sorted lexicographically, no whitespace variation.
void write_ring_json(std::ostream& os, const FusionRing& ring);
std::string ring_to_json(const FusionRing& ring);

/// Parses and validates the ring format; throws std::invalid_argument on
/// malformed input.
FusionRing ring_from_json(const std::string& text);
FusionRing load_ring_file(const std::string& path);

/// Presentation format:
///   {"generators": N, "relations": [["aba","bab"], ...]}
/// with words as lowercase letter strings, a..z meaning generators 1..N.
Presentation presentation_from_json(const std::string& text);
Presentation load_presentation_file(const std::string& path);

/// Derivations exported as JSON step lists for audit.
std::string derivation_to_json(const Derivation& d);

std::string read_text_file(const std::string& path);

}  // namespace goldfusion
