#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wlplab/graph.hpp"

namespace wlplab {

enum class FamilyKind { Path, Cycle, Pan, Ce, Tadpole3, Complete, Empty, Bk, Union, File };

/// A parsed graph spec such as `path:5` or `union(complete:3,empty:2)`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<long> params;
  std::vector<FamilySpec> children;  // two entries for Union
  std::string file;                  // File only

  bool operator==(const FamilySpec&) const = default;
};

/// Syntax error in a spec string; offset() is the byte offset of the fault.
class SpecSyntaxError : public std::runtime_error {
 public:
  SpecSyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

FamilySpec parse_family_spec(std::string_view text);
/// Canonical text form; parse_family_spec(to_string(s)) == s.
std::string to_string(const FamilySpec& spec);

Graph make_family(const FamilySpec& spec);
/// parse_family_spec followed by make_family.
Graph parse_spec(std::string_view text);

FamilySpec family(FamilyKind kind, std::vector<long> params);
FamilySpec union_of(FamilySpec a, FamilySpec b);

}  // namespace wlplab
