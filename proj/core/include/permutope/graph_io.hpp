#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "permutope/multigraph.hpp"

namespace permutope {

/// {"vertices": [names], "edges": [{"st": i, "ar": j, "label": s}, ...]}
/// Export is byte-stable: export(import(export(g))) == export(g).
std::string graph_to_json(const Multigraph& g);
Multigraph graph_from_json(std::string_view text);

/// Graphviz digraph with one labeled arrow per edge (parallel edges are
/// drawn separately).
std::string graph_to_dot(const Multigraph& g, std::string_view name = "G");

/// File helpers; failures raise IoError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace permutope
