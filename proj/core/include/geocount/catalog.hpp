#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocount/geodesics.hpp"
#include "geocount/root_datum.hpp"

namespace geocount {

// Unvalidated description of a space, as read from a file or a preset.
// lattice holds the unit lattice generators as columns; when absent, the
// coroot lattice is used.
struct SpaceDescription {
    std::string name;
    std::size_t rank = 0;
    RationalMatrix gram;
    std::vector<Root> roots;
    std::optional<RationalMatrix> lattice;
    std::string notes;
};

// Names of the built-in spaces.  "Gr2Rn:<n>" stands for the family of real
// two-plane grassmannians with n >= 5.
std::vector<std::string> preset_names();

// Built-in description by name; understands "T<k>" for flat tori of rank
// 1..8 and "Gr2Rn:<n>" for n >= 5.  Throws NotFound for anything else.
SpaceDescription preset(const std::string& name);

// Parses the JSON interchange format:
//   {"name": str, "rank": int,
//    "gram": [[rational]],                      rows
//    "roots": [{"covector": [rational], "multiplicity": int}],
//    "lattice": [[rational]],                   generators, optional
//    "notes": str}                              optional
// Rationals are strings like "1/2" or plain integers.  Malformed input
// throws InvalidInput naming the offending field.
SpaceDescription space_from_json_text(const std::string& text);
SpaceDescription space_from_file(const std::string& path);

std::string space_to_json_text(const SpaceDescription& description);

// Validates the description and assembles the working space.
Space build_space(const SpaceDescription& description, std::uint64_t weyl_cap = 1000000);

}  // namespace geocount
