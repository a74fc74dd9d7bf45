#pragma once

// JSON file formats read and written by the k0 command line tool.
//
// Presentation file (format 1):
//   {
//     "format": 1,
//     "generators": ["0", "1", ...],
//     "heap_relations": [["x","y","z","w"], ...],    // [x,y,z] = w
//     "cofibration_legs": ["right", ...],            // one per heap relation
//     "group_relations": [["x","y","z"], ...],       // cofiber x >-> y -> z
//     "zero": "0"
//   }
// Only "generators" is required. Unknown fields are rejected.
//
// Heap table file: {"elements": [...], "bracket": [[x,y,z,result], ...]},
// with every triple given exactly once.
//
// Mapping file: {"format": 1, "map": {"source label": "target label", ...}}.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k0/grothendieck.hpp"
#include "k0/heap_core.hpp"
#include "k0/toycats.hpp"

namespace k0::io {

constexpr int kFormatVersion = 1;

struct PresentationFile {
  std::vector<std::string> generators;
  /// Annotated from "cofibration_legs"; SquareKind::None when absent.
  std::vector<grothendieck::PushoutSquare> heap_relations;
  std::vector<grothendieck::CofiberSequence> group_relations;
  std::optional<std::string> zero;
};

/// Throws InputError naming the line (syntax errors) or field (schema errors).
PresentationFile parse_presentation(std::string_view text);
/// Serialized with sorted keys and a trailing newline; byte-stable.
std::string serialize(const PresentationFile& file);
PresentationFile from_category(const toycats::CategoryData& data);

heap::FiniteHeapTable parse_heap_table(std::string_view text);
std::string serialize(const heap::FiniteHeapTable& table);

std::map<std::string, std::string> parse_mapping(std::string_view text);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace k0::io
