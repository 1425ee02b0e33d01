#pragma once

// Line-based group file format:
//
//   name  <label>
//   p     <prime>
//   n     <generator count>
//   pow   <i> = <word>          f_i^p = word; omitted means f_i^p = 1
//   comm  <i> <j> = <word>      [f_i, f_j] with i > j; omitted means trivial
//   def   <i> = pow <j>         or: def <i> = comm <j> <k>
//
// Words are "1" or space-separated g<k>^<e> tokens with strictly increasing
// k and 1 <= e < p. '#' starts a comment; blank lines are ignored.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "pgw/pc.hpp"

namespace pgw {

struct GroupFile {
  PcGroup group;
  std::string source;
};

/// Syntax only; throws SyntaxError.
PcPresentation parse_presentation(std::string_view text);
/// Parses and validates.
GroupFile parse(std::string_view text, std::string source = "<string>");
GroupFile parse_file(const std::filesystem::path& path);

/// Canonical text; parse_presentation(serialize(P)) == P.
std::string serialize(const PcPresentation& P);

/// Element in file word syntax, e.g. "g2^1 g6^1"; "1" for the identity.
std::string format_word(const Element& x);
/// Parses a word in file syntax and collects it in G.
Element parse_element(const PcGroup& G, std::string_view word);

struct CorpusEntry {
  std::string_view key;
  std::string_view text;
};

/// Key of the order-3^7 example group shipped with the tool.
inline constexpr std::string_view kExampleGroupKey = "sg2187_194";

std::span<const CorpusEntry> builtin_corpus();
/// Throws InputError for an unknown key.
GroupFile builtin(std::string_view key);

}  // namespace pgw
