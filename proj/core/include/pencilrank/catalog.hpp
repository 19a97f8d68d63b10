#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "pencilrank/minimal_ranks.hpp"

namespace pencilrank {

/// One canonical block of a family recipe: L<k>, R<l>, J<m>(sym) or Q<2k>(sym,sym).
struct BlockSpec {
  enum class Kind { column, row, jordan, quadratic };
  Kind kind = Kind::jordan;
  int size = 0;  // k, l, m, or 2k
  std::string symbol;
  std::string symbol2;

  static BlockSpec parse(std::string_view text);
  std::string to_string() const;
  int rows() const;
  int cols() const;
};

struct FamilyRecord {
  std::string name;  // e.g. "R'3,2"
  int m = 0;
  int n = 0;
  int tensor_rank = 0;
  std::array<int, 3> multilinear_rank{0, 0, 0};
  MinimalRanks rho;
  std::vector<BlockSpec> blocks;
  /// Equivalent pencil with simpler entries, when listed; entries are integers or parameter names.
  std::vector<std::vector<std::string>> equivalent_a;
  std::vector<std::vector<std::string>> equivalent_b;

  int prime_count() const;
  bool regular() const { return name.rfind('R', 0) == 0; }
  /// Parameter symbols in order of first appearance.
  std::vector<std::string> symbols() const;
  bool has_equivalent() const { return !equivalent_a.empty(); }
};

class Catalog {
 public:
  /// Parses the versioned JSON catalog; throws InputError on schema violations.
  static Catalog from_json(const std::string& text);
  /// The catalog compiled into the library.
  static const Catalog& builtin();

  int version() const { return version_; }
  const std::vector<FamilyRecord>& families() const { return families_; }
  /// nullptr when absent.
  const FamilyRecord* find(std::string_view name) const;
  const FamilyRecord& at(std::string_view name) const;

 private:
  int version_ = 0;
  std::vector<FamilyRecord> families_;
};

/// Accepts the ASCII names used in the catalog ("R'3,2") and a few spellings such as "R'_{3,2}" or "R'3.2".
std::string normalize_family_name(std::string_view text);

}  // namespace pencilrank
