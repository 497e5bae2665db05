#pragma once

#include <string>
#include <utility>
#include <vector>

namespace veerlab {

enum class Answer { Yes, No, Unknown };

inline std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    default: return "Unknown";
  }
}

// Three-valued decision plus the data needed to re-check it. `rule` names the
// criterion that decided; `facts` holds the numbers it used.
struct Verdict {
  Answer answer = Answer::Unknown;
  std::string rule;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> also_fired;

  Verdict& fact(std::string key, std::string value) {
    facts.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  const std::string* find(const std::string& key) const {
    for (const auto& [k, v] : facts)
      if (k == key) return &v;
    return nullptr;
  }
};

}  // namespace veerlab
