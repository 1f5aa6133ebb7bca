#include "monomatch/law_report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace monomatch {

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(const std::string& law) const {
  auto it =
      std::find_if(laws.begin(), laws.end(), [&](const LawResult& r) { return r.law == law; });
  return it == laws.end() ? nullptr : &*it;
}

std::string LawReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : laws) {
    out << "law=" << r.law << " trials=" << r.trials << " result=" << (r.passed ? "pass" : "fail");
    if (r.counterexample) out << " counterexample=" << *r.counterexample;
    out << '\n';
  }
  return out.str();
}

std::string LawReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["laws"] = nlohmann::ordered_json::array();
  for (const auto& r : laws) {
    nlohmann::ordered_json entry = {{"law", r.law}, {"trials", r.trials}, {"passed", r.passed}};
    entry["counterexample"] =
        r.counterexample ? nlohmann::ordered_json(*r.counterexample) : nlohmann::ordered_json();
    doc["laws"].push_back(std::move(entry));
  }
  doc["passed"] = all_passed();
  return doc.dump();
}

}  // namespace monomatch
