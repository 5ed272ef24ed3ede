#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "engelgraph/group.hpp"

namespace engelgraph {

enum class Tier { Fast, Slow, Targeted };

std::string to_string(Tier tier);
/// Throws std::invalid_argument on anything but fast|slow|targeted.
Tier parse_tier(std::string_view text);

enum class Construction { Cyclic, Dihedral, Symmetric, Alternating, AGL1, PSL2, DirectProduct, File };

struct GroupSpec {
  std::string name;
  Construction construction = Construction::Cyclic;
  /// n for Cyclic/Symmetric/Alternating, the group order for Dihedral, p for AGL1/PSL2.
  unsigned parameter = 0;
  std::vector<GroupSpec> factors;  // DirectProduct
  std::string path;                // File; relative paths resolve against data_dir()
  std::optional<std::uint64_t> expected_order;
  Tier tier = Tier::Fast;
};

GroupSpec cyclic_spec(unsigned n);
GroupSpec dihedral_spec(unsigned order);
GroupSpec symmetric_spec(unsigned n);
GroupSpec alternating_spec(unsigned n);
GroupSpec agl1_spec(unsigned p);
GroupSpec psl2_spec(unsigned p);
GroupSpec direct_product_spec(GroupSpec a, GroupSpec b);
GroupSpec file_spec(std::string name, std::string path, std::uint64_t expected_order, Tier tier = Tier::Fast);

/// Enumerates the group and enforces expected_order. Throws std::invalid_argument
/// on bad parameters or an order mismatch, LimitExceeded past the closure cap.
Group build(const GroupSpec& spec, const EnumerationOptions& options = {});

/// Reads the JSON group format:
///   {"name": str, "degree": int, "generators": [[0-based images], ...],
///    "expected_order": int, "simple": bool}
/// Degree and image ranges must match exactly. Entries marked simple are
/// re-verified as nonabelian simple. Errors carry the file name and, for
/// syntax errors, the line number.
Group load_group_file(const std::string& path, const EnumerationOptions& options = {});

/// Directory holding the shipped group files: $ENGELGRAPH_DATA_DIR if set,
/// otherwise the path compiled into the library.
std::string data_dir();

std::vector<GroupSpec> standard_catalog();
std::vector<GroupSpec> catalog_tier(Tier tier);

/// Catalog entry by exact name, or a parametric name such as "S7", "A9",
/// "C15", "D14", "AGL1(11)", "PSL2(17)", "Alt(8)", "Sym(5)".
std::optional<GroupSpec> find_spec(std::string_view name);

/// A catalog or parametric name, otherwise a path to a group file.
Group resolve_group(const std::string& name_or_path, const EnumerationOptions& options = {});

}  // namespace engelgraph
