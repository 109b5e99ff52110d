#include "asr/exceptional.hpp"

#include <algorithm>

#include <json.hpp>

#include "asr/error.hpp"

namespace asr {

int group_order(Group g) {
  switch (g) {
    case Group::S1: return 1;
    case Group::S2: return 2;
    case Group::S2p: return 2;
    case Group::S3: return 6;
    case Group::S3p: return 6;
    case Group::S4: return 24;
    case Group::S5: return 120;
    case Group::S2S2: return 4;
    case Group::S3S2: return 12;
    case Group::D8: return 8;
  }
  throw InvalidInput("unknown group tag");
}

std::string group_name(Group g) {
  switch (g) {
    case Group::S1: return "S1";
    case Group::S2: return "S2";
    case Group::S2p: return "S2'";
    case Group::S3: return "S3";
    case Group::S3p: return "S3'";
    case Group::S4: return "S4";
    case Group::S5: return "S5";
    case Group::S2S2: return "S2S2";
    case Group::S3S2: return "S3S2";
    case Group::D8: return "D8";
  }
  throw InvalidInput("unknown group tag");
}

Group group_from_name(const std::string& name) {
  for (Group g : {Group::S1, Group::S2, Group::S2p, Group::S3, Group::S3p, Group::S4,
                  Group::S5, Group::S2S2, Group::S3S2, Group::D8}) {
    if (group_name(g) == name) return g;
  }
  throw InvalidInput("unknown group name: " + name);
}

// Family data for the exceptional types, shipped as one versioned document.
// Sizes 2 and 3 (resp. 4 and 5) share their lists but carry distinct group
// tags; "?" marks the one label with no dimension.
static const std::string kDataJson = R"JSON({
  "version": 1,
  "families": [
    {
      "family_size": 1,
      "gamma": "S1",
      "keys": ["S1"],
      "lists": {"S1": ["S1"]},
      "m_labels": {"S1": ["(1,1)"]},
      "almost_special": ["(1,1)"]
    },
    {
      "family_size": 2,
      "gamma": "S2'",
      "keys": ["S1", "S2"],
      "lists": {"S1": ["S2", "S1"], "S2": ["S2"]},
      "m_labels": {"S1": ["(1,1)", "(1,eps)"], "S2": ["(g2,1)"]},
      "almost_special": ["(1,1)", "(g2,1)"]
    },
    {
      "family_size": 3,
      "gamma": "S2",
      "keys": ["S1", "S2"],
      "lists": {"S1": ["S2", "S1"], "S2": ["S2"]},
      "m_labels": {"S1": ["(1,1)", "(1,eps)"], "S2": ["(g2,1)"]},
      "almost_special": ["(1,1)", "(g2,1)"]
    },
    {
      "family_size": 4,
      "gamma": "S3'",
      "keys": ["S1", "S2", "S3"],
      "lists": {"S1": ["S3", "S2", "S1"], "S2": ["S2"], "S3": ["S3"]},
      "m_labels": {
        "S1": ["(1,1)", "(1,r)", "(1,eps)"],
        "S2": ["(g2,1)"],
        "S3": ["(g3,1)"]
      },
      "almost_special": ["(1,1)", "(g2,1)", "(g3,1)"]
    },
    {
      "family_size": 5,
      "gamma": "S3",
      "keys": ["S1", "S2", "S3"],
      "lists": {"S1": ["S3", "S2", "S1"], "S2": ["S2"], "S3": ["S3"]},
      "m_labels": {
        "S1": ["(1,1)", "(1,r)", "(1,eps)"],
        "S2": ["(g2,1)"],
        "S3": ["(g3,1)"]
      },
      "almost_special": ["(1,1)", "(g2,1)", "(g3,1)"]
    },
    {
      "family_size": 11,
      "gamma": "S4",
      "keys": ["S1", "S2", "S2S2", "S3", "D8", "S4"],
      "lists": {
        "S1": ["S4", "S3", "S2S2", "S2", "S1"],
        "S2": ["S2S2", "S2"],
        "S2S2": ["D8", "S2S2"],
        "S3": ["S3"],
        "D8": ["D8"],
        "S4": ["S4"]
      },
      "m_labels": {
        "S1": ["(1,1)", "(1,lam1)", "(1,sigma)", "(1,lam2)", "(1,lam3)"],
        "S2": ["(g2,1)", "(g2,eps'')"],
        "S2S2": ["(g2',1)", "(g2',eps'')"],
        "S3": ["(g3,1)"],
        "D8": ["(g2',eps')"],
        "S4": ["(g4,1)"]
      },
      "almost_special": ["(1,1)", "(g2,1)", "(g2',1)", "(g3,1)", "(g2',eps')", "(g4,1)"]
    },
    {
      "family_size": 17,
      "gamma": "S5",
      "keys": ["S1", "S2", "S2S2", "S3", "D8", "S3S2", "S4", "S5"],
      "lists": {
        "S1": ["S5", "S4", "S3S2", "S3", "S2S2", "S2", "S1"],
        "S2": ["S3S2", "S2S2", "S2"],
        "S2S2": ["D8", "S2S2"],
        "S3": ["S3S2", "S3"],
        "D8": ["D8"],
        "S3S2": ["S3S2"],
        "S4": ["S4"],
        "S5": ["S5"]
      },
      "m_labels": {
        "S1": ["(1,1)", "(1,lam1)", "(1,nu)", "(1,lam2)", "(1,nu')", "(1,lam3)", "(1,lam4)"],
        "S2": ["(g2,1)", "(g2,r)", "(g2,eps)"],
        "S2S2": ["(g2',1)", "(g2',eps'')"],
        "S3": ["(g3,1)", "(g3,eps)"],
        "D8": ["(g2',eps')"],
        "S3S2": ["(g6,1)"],
        "S4": ["(g4,1)"],
        "S5": ["(g5,1)"]
      },
      "almost_special": ["(1,1)", "(g2,1)", "(g2',1)", "(g3,1)", "(g2',eps')", "(g6,1)", "(g4,1)", "(g5,1)"],
      "e8_dims": {
        "S1": [4480, 5670, 4536, 1680, 1400, 70, "?"],
        "S2": [7168, 5600, 448],
        "S2S2": [4200, 2688],
        "S3": [3150, 1134],
        "D8": [168],
        "S3S2": [2016],
        "S4": [1344],
        "S5": [420]
      }
    }
  ]
}
)JSON";

const std::string& exceptional_data_json() { return kDataJson; }

namespace {

std::vector<FamilyRecord> parse_families() {
  const nlohmann::json doc = nlohmann::json::parse(kDataJson);
  std::vector<FamilyRecord> out;
  for (const auto& f : doc.at("families")) {
    FamilyRecord rec;
    rec.family_size = f.at("family_size").get<int>();
    rec.gamma = group_from_name(f.at("gamma").get<std::string>());
    for (const auto& key : f.at("keys")) {
      rec.keys.push_back(group_from_name(key.get<std::string>()));
    }
    for (Group key : rec.keys) {
      const std::string name = group_name(key);
      for (const auto& g : f.at("lists").at(name)) {
        rec.lists[key].push_back(group_from_name(g.get<std::string>()));
      }
      for (const auto& label : f.at("m_labels").at(name)) {
        rec.m_labels[key].push_back(label.get<std::string>());
      }
    }
    for (const auto& label : f.at("almost_special")) {
      rec.almost_special.push_back(label.get<std::string>());
    }
    if (f.contains("e8_dims")) {
      for (Group key : rec.keys) {
        for (const auto& entry : f.at("e8_dims").at(group_name(key))) {
          if (entry.is_string()) {
            rec.e8_dims[key].push_back(std::nullopt);
          } else {
            rec.e8_dims[key].push_back(entry.get<long>());
          }
        }
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

const std::vector<FamilyRecord>& all_families() {
  static const std::vector<FamilyRecord> families = parse_families();
  return families;
}

const FamilyRecord& family(int size) {
  for (const FamilyRecord& rec : all_families()) {
    if (rec.family_size == size) return rec;
  }
  throw InvalidInput("no exceptional family of size " + std::to_string(size));
}

std::map<Group, bool> check_unique_max(const FamilyRecord& record) {
  std::map<Group, bool> verdicts;
  for (Group key : record.keys) {
    const std::vector<Group>& list = record.lists.at(key);
    int max_order = 0;
    for (Group g : list) max_order = std::max(max_order, group_order(g));
    int hits = 0;
    for (Group g : list) {
      if (group_order(g) == max_order) ++hits;
    }
    verdicts[key] = (hits == 1 && group_order(list.front()) == max_order);
  }
  return verdicts;
}

std::vector<std::string> almost_special_labels(const FamilyRecord& record) {
  std::vector<std::string> out;
  for (Group key : record.keys) out.push_back(record.m_labels.at(key).front());
  if (out != record.almost_special) {
    throw InternalError("almost_special: first entries disagree with the stored list");
  }
  return out;
}

const std::map<Group, std::vector<std::optional<long>>>& e8_lists(const FamilyRecord& record) {
  if (record.family_size != 17) {
    throw InvalidInput("dimension lists exist only for the size-17 family");
  }
  return record.e8_dims;
}

}  // namespace asr
