#include "tsat/lasso.hpp"

#include <json.hpp>

#include "tsat/errors.hpp"

namespace tsat {

const Assignment& Lasso::at(size_t i) const {
  if (i < prefix.size()) return prefix[i];
  if (loop.empty()) throw InvariantError("lasso: empty loop");
  return loop[(i - prefix.size()) % loop.size()];
}

Lasso Lasso::unrolled_once() const {
  Lasso out = *this;
  out.prefix.insert(out.prefix.end(), loop.begin(), loop.end());
  return out;
}

bool operator==(const Lasso& a, const Lasso& b) {
  return a.prefix == b.prefix && a.loop == b.loop;
}

Lasso all_true_lasso(const std::set<std::string>& vars) {
  return Lasso{{}, {Assignment(vars.begin(), vars.end())}};
}

Lasso all_false_lasso() { return Lasso{{}, {Assignment{}}}; }

static std::vector<Assignment> assignments_from_json(const nlohmann::json& arr,
                                                     const char* what) {
  if (!arr.is_array()) throw ArgumentError(std::string("lasso: '") + what + "' must be an array");
  std::vector<Assignment> out;
  for (const auto& state : arr) {
    if (!state.is_array())
      throw ArgumentError(std::string("lasso: each '") + what + "' state must be an array");
    Assignment a;
    for (const auto& v : state) {
      if (!v.is_string()) throw ArgumentError("lasso: variable names must be strings");
      a.insert(v.get<std::string>());
    }
    out.push_back(std::move(a));
  }
  return out;
}

Lasso Lasso::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("lasso: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("prefix") || !j.contains("loop"))
    throw ArgumentError("lasso: expected an object with 'prefix' and 'loop'");
  Lasso out;
  out.prefix = assignments_from_json(j["prefix"], "prefix");
  out.loop = assignments_from_json(j["loop"], "loop");
  if (out.loop.empty()) throw ArgumentError("lasso: loop must be nonempty");
  return out;
}

std::string Lasso::to_json_text() const {
  nlohmann::json j;
  auto dump = [](const std::vector<Assignment>& states) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : states) arr.push_back(std::vector<std::string>(s.begin(), s.end()));
    return arr;
  };
  j["prefix"] = dump(prefix);
  j["loop"] = dump(loop);
  return j.dump();
}

}  // namespace tsat
