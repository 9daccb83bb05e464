#pragma once

// JSON instance format:
//   {"vertices": [...], "edges": [[u, v], ...], "mu": {"v": "p/q"}, "nu": {...}}
// Vertex ids may be strings or integers; masses are "p/q" strings or integers.

#include <filesystem>
#include <string>
#include <string_view>

#include "treeot/tree_core.hpp"

namespace treeot {

struct Instance {
  Tree tree;
  Measure mu;
  Measure nu;
};

/// Errors: ParseError (syntax errors report line and column), plus the tree
/// and measure validation errors.
Instance parse_instance(std::string_view text, std::string_view source = "<input>");
Instance load_instance(const std::filesystem::path& path);

std::string write_instance(const Tree& tree, const Measure& mu, const Measure& nu);

}  // namespace treeot
