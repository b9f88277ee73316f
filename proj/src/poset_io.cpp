#include "narayana/poset_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "narayana/errors.hpp"

namespace narayana {

namespace {

std::vector<int> identity_labeling(int size) {
  std::vector<int> labeling;
  for (int x = 1; x <= size; ++x) labeling.push_back(x);
  return labeling;
}

LabeledPoset parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("poset JSON: ") + e.what());
  }
  try {
    const int size = doc.at("size").get<int>();
    std::vector<std::pair<int, int>> covers;
    if (doc.contains("covers")) {
      for (const auto& pair : doc.at("covers")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw ValidationError("poset JSON: each cover must be a [lower, upper] pair");
        }
        covers.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      }
    }
    std::vector<int> labeling = doc.contains("labeling") ? doc.at("labeling").get<std::vector<int>>()
                                                         : identity_labeling(size);
    return LabeledPoset::from_relations(size, std::move(covers), std::move(labeling));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("poset JSON: ") + e.what());
  }
}

LabeledPoset parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int size = -1;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> labeling;
  bool have_labeling = false;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string directive;
    if (!(fields >> directive)) continue;
    if (directive == "size") {
      if (!(fields >> size)) throw ValidationError("poset text: bad size line", line_number);
    } else if (directive == "cover") {
      int a = 0;
      int b = 0;
      if (!(fields >> a >> b)) throw ValidationError("poset text: bad cover line", line_number);
      covers.emplace_back(a, b);
    } else if (directive == "labeling") {
      have_labeling = true;
      int l = 0;
      while (fields >> l) labeling.push_back(l);
    } else {
      throw ValidationError("poset text: unknown directive '" + directive + "'", line_number);
    }
    fields.clear();
    std::string rest;
    if (fields >> rest) {
      throw ValidationError("poset text: trailing input '" + rest + "'", line_number);
    }
  }
  if (size < 0) throw ValidationError("poset text: missing size line");
  if (!have_labeling) labeling = identity_labeling(size);
  return LabeledPoset::from_relations(size, std::move(covers), std::move(labeling));
}

}  // namespace

LabeledPoset parse_poset(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

LabeledPoset load_poset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read poset file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

std::string poset_to_json(const LabeledPoset& poset) {
  nlohmann::ordered_json doc;
  doc["size"] = poset.size();
  doc["covers"] = nlohmann::json::array();
  for (const auto& [a, b] : poset.relations()) doc["covers"].push_back({a, b});
  doc["labeling"] = std::vector<int>(poset.labeling().begin(), poset.labeling().end());
  return doc.dump();
}

}  // namespace narayana
