#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace asr {

// The finite groups appearing in the exceptional-type family tables.
// S2p/S3p are second copies of S2/S3; D8 is the dihedral group of order 8.
enum class Group { S1, S2, S2p, S3, S3p, S4, S5, S2S2, S3S2, D8 };

int group_order(Group g);
std::string group_name(Group g);
Group group_from_name(const std::string& name);

// Tabulated data for one exceptional-type family, keyed by the subgroup
// labels. Labels of pairs (x, sigma) are opaque strings.
struct FamilyRecord {
  int family_size = 0;
  Group gamma = Group::S1;
  std::vector<Group> keys;  // key order fixed by the tables
  std::map<Group, std::vector<Group>> lists;           // L(key)
  std::map<Group, std::vector<std::string>> m_labels;  // L'(key)
  std::vector<std::string> almost_special;
  // Dimension lists, present only for family size 17; nullopt encodes the
  // "?" placeholder.
  std::map<Group, std::vector<std::optional<long>>> e8_dims;
};

// The seven tabulated records, keyed by family size in {1,2,3,4,5,11,17}.
const FamilyRecord& family(int size);
const std::vector<FamilyRecord>& all_families();

// Per key: the group-order maximum over L(key) is attained exactly once,
// and at the first entry.
std::map<Group, bool> check_unique_max(const FamilyRecord& record);

// First entries of the label lists in key order; must reproduce the stored
// almost_special list.
std::vector<std::string> almost_special_labels(const FamilyRecord& record);

// The eight dimension lists of the size-17 family.
const std::map<Group, std::vector<std::optional<long>>>& e8_lists(const FamilyRecord& record);

// The embedded data document (versioned JSON, for external diffing).
const std::string& exceptional_data_json();

}  // namespace asr
