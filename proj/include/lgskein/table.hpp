#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lgskein/braid.hpp"
#include "lgskein/expr_parser.hpp"
#include "lgskein/scalar.hpp"

namespace lgs {

// One line of a knot table:  name ; strands ; word [; kind = polynomial ...]
struct KnotTableEntry {
    std::string name;
    int strands = 0;
    BraidWord word;
    std::map<std::string, Scalar> expected;  // golden values by invariant name
    int line = 0;
};

// Blank lines and lines starting with '#' are skipped. Errors are ParseError with the line number.
std::vector<KnotTableEntry> parse_table(std::string_view text);
std::vector<KnotTableEntry> load_table(const std::string& path);
std::string format_entry(const KnotTableEntry& e);

}  // namespace lgs
