#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "symdyn/automata.hpp"
#include "symdyn/checker.hpp"
#include "symdyn/gallery.hpp"
#include "symdyn/language.hpp"
#include "symdyn/system.hpp"

namespace symdyn::io {

using json = nlohmann::json;

/// Reads a JSON file; SpecError naming the file on failure.
json read_file(const std::filesystem::path& p);
/// A JSON value, or a path to a JSON file when given a plain string that
/// names an existing file.
json resolve(const json& j, const std::filesystem::path& base);

/// Symbols by longest match (blanks ignored); '.' is a wildcard unless it is
/// a symbol. Arrays of symbol names are accepted too.
Word parse_word(const Alphabet& a, const std::string& text, bool wildcards = false);
Word load_word(const Alphabet& a, const json& j, const std::string& path);
json dump_word(const Alphabet& a, const Word& w);

/// Expressions in the to_string syntax: {[01], [1]@2}, x:[0] y:[1], X, {},
/// combined with | & ~ and parentheses.
ClopenSet parse_clopen(SpacePtr space, const std::string& text);
ClopenSet load_clopen(SpacePtr space, const json& j, const std::string& path);
/// {"intervals": [[lo, hi], ...], "words": [...], "text": ...}; multi-track
/// words are arrays of per-track parts.
json dump_clopen(const ClopenSet& c);

MachineSpec load_machine(const json& j, const std::string& path);
json dump_machine(const MachineSpec& m);

HaltTimeTable load_table(const json& j, const std::string& path);
json dump_table(const HaltTimeTable& t);

/// System specs by "kind"; gallery entries resolve their table relative to base.
SystemPtr load_system(const json& j, const std::filesystem::path& base, const std::string& path = "");

/// "depthN", or {"cells": [{"name", "set"}], "rest": name}.
Partition load_partition(SpacePtr space, const json& j, const std::string& path);
json dump_partition(const Partition& p);

/// "figure1" | "figure2" | "figure3", or {"type": "dfa"|"muller"|"buchi", ...}.
Dfa load_dfa(const json& j, const std::string& path);
MullerAutomaton load_muller(const json& j, const std::string& path);
json dump_dfa(const Dfa& d);
json dump_muller(const MullerAutomaton& m);

json dump_graph(const LabeledGraph& g);
json dump_verdict(const Verdict& v, const std::vector<std::string>& letters);

}  // namespace symdyn::io
