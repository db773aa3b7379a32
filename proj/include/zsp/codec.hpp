#pragma once
// Text and JSON codecs for partition families.
//
// Text block grammar (canonical emit is byte-exact for the shipped tables):
//   one set per line, elements as tuples "(r1, r2, ...)" joined by ", ";
//   a block ends with the trailer line
//   "A partition for sets of sizes:  a*3  b*4  c*5";
//   blocks are separated by blank lines. Parsing is whitespace-tolerant.

#include <string>
#include <vector>

#include "zsp/partition.hpp"

namespace zsp {

struct TextBlock {
    SizeTriple header;
    SubsetFamily family;
};

std::vector<TextBlock> parse_partition_text(const GroupSpec& g, const std::string& text);
std::string format_partition_text(const std::vector<TextBlock>& blocks);
std::string format_partition_block(const TextBlock& block);  // no trailing blank line

// JSON family format: {"group": "...", "ground": "...", "sets": [[[ints]...]...]}
std::string family_to_json(const SubsetFamily& family, const std::string& ground_descriptor);
// Returns the family plus the ground descriptor string found in the document.
std::pair<SubsetFamily, std::string> family_from_json(const std::string& json_text);

}  // namespace zsp
