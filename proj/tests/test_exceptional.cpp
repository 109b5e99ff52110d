#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include <json.hpp>

#include "asr/error.hpp"
#include "asr/exceptional.hpp"

using namespace asr;

TEST_CASE("group orders and names") {
  CHECK(group_order(Group::S1) == 1);
  CHECK(group_order(Group::S2) == 2);
  CHECK(group_order(Group::S2p) == 2);
  CHECK(group_order(Group::S3) == 6);
  CHECK(group_order(Group::S3p) == 6);
  CHECK(group_order(Group::S4) == 24);
  CHECK(group_order(Group::S5) == 120);
  CHECK(group_order(Group::S2S2) == 4);
  CHECK(group_order(Group::S3S2) == 12);
  CHECK(group_order(Group::D8) == 8);
  CHECK(group_from_name("S2'") == Group::S2p);
  CHECK(group_from_name(group_name(Group::S3S2)) == Group::S3S2);
  CHECK_THROWS_AS(group_from_name("S6"), InvalidInput);
}

TEST_CASE("family lookup") {
  CHECK(family(11).lists.at(Group::S2S2) ==
        std::vector<Group>{Group::D8, Group::S2S2});
  const FamilyRecord& e8 = family(17);
  REQUIRE(e8.almost_special.size() == 8);
  CHECK(e8.almost_special[6] == "(g4,1)");
  CHECK(e8.almost_special[7] == "(g5,1)");
  const FamilyRecord& trivial = family(1);
  CHECK(trivial.lists.at(Group::S1) == std::vector<Group>{Group::S1});
  CHECK(trivial.almost_special == std::vector<std::string>{"(1,1)"});
  CHECK_THROWS_AS(family(6), InvalidInput);
}

TEST_CASE("gamma tags") {
  CHECK(family(1).gamma == Group::S1);
  CHECK(family(2).gamma == Group::S2p);
  CHECK(family(3).gamma == Group::S2);
  CHECK(family(4).gamma == Group::S3p);
  CHECK(family(5).gamma == Group::S3);
  CHECK(family(11).gamma == Group::S4);
  CHECK(family(17).gamma == Group::S5);
}

TEST_CASE("key counts per family") {
  const std::map<int, std::size_t> expected{{1, 1}, {2, 2},  {3, 2}, {4, 3},
                                            {5, 3}, {11, 6}, {17, 8}};
  REQUIRE(all_families().size() == expected.size());
  for (const FamilyRecord& rec : all_families()) {
    CHECK(rec.keys.size() == expected.at(rec.family_size));
    CHECK(rec.almost_special.size() == rec.keys.size());
  }
}

TEST_CASE("lists and labels are parallel") {
  for (const FamilyRecord& rec : all_families()) {
    REQUIRE(rec.lists.size() == rec.keys.size());
    REQUIRE(rec.m_labels.size() == rec.keys.size());
    for (Group key : rec.keys)
      CHECK(rec.lists.at(key).size() == rec.m_labels.at(key).size());
  }
}

TEST_CASE("check_unique_max") {
  {
    const auto verdict = check_unique_max(family(17));
    CHECK(verdict.at(Group::S2));  // orders 12,4,2
    for (const auto& [key, ok] : verdict) CHECK(ok);
  }
  CHECK(check_unique_max(family(11)).at(Group::S2S2));  // 8 > 4
  CHECK(check_unique_max(family(5)).at(Group::S1));     // 6,2,1
  for (const FamilyRecord& rec : all_families())
    for (const auto& [key, ok] : check_unique_max(rec)) CHECK(ok);
}

TEST_CASE("almost_special_labels") {
  CHECK(almost_special_labels(family(4)) ==
        std::vector<std::string>{"(1,1)", "(g2,1)", "(g3,1)"});
  CHECK(almost_special_labels(family(11)) ==
        std::vector<std::string>{"(1,1)", "(g2,1)", "(g2',1)", "(g3,1)",
                                 "(g2',eps')", "(g4,1)"});
  CHECK(almost_special_labels(family(2)) ==
        std::vector<std::string>{"(1,1)", "(g2,1)"});
  for (const FamilyRecord& rec : all_families())
    CHECK(almost_special_labels(rec) == rec.almost_special);
}

TEST_CASE("e8 dimension lists") {
  const auto& dims = e8_lists(family(17));
  CHECK(dims.at(Group::S2) ==
        std::vector<std::optional<long>>{7168, 5600, 448});
  CHECK(dims.at(Group::D8) == std::vector<std::optional<long>>{168});
  CHECK(dims.at(Group::S5) == std::vector<std::optional<long>>{420});
  CHECK_THROWS_AS(e8_lists(family(11)), InvalidInput);

  // exactly one unknown entry, at the tail of the S1 list; known values
  // are pairwise distinct
  std::set<long> known;
  int unknown = 0;
  for (const auto& [key, list] : dims) {
    for (const auto& entry : list) {
      if (entry)
        CHECK(known.insert(*entry).second);
      else
        ++unknown;
    }
  }
  CHECK(unknown == 1);
  CHECK_FALSE(dims.at(Group::S1).back().has_value());
}

TEST_CASE("embedded document parses and round-trips the records") {
  const nlohmann::json doc = nlohmann::json::parse(exceptional_data_json());
  REQUIRE(doc.contains("version"));
  REQUIRE(doc.at("families").size() == all_families().size());
  std::set<int> sizes;
  for (const auto& fam : doc.at("families"))
    sizes.insert(fam.at("family_size").get<int>());
  CHECK(sizes == std::set<int>{1, 2, 3, 4, 5, 11, 17});
}
