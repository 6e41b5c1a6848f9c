#include <json.hpp>

#include "srcolor/error.hpp"
#include "srcolor/verifier.hpp"

namespace srcolor {

std::string certificate_to_json(const Certificate& certificate, int indent) {
  nlohmann::ordered_json j;
  j["complex"] = certificate.complex_id;
  j["s"] = certificate.s;
  j["coloring"] = certificate.coloring;
  j["verdict"] = certificate.verdict;
  j["lhs"] = certificate.lhs;
  j["rhs"] = certificate.rhs;
  auto factors = nlohmann::ordered_json::array();
  for (const auto& f : certificate.factors) {
    nlohmann::ordered_json entry;
    entry["color"] = f.color;
    entry["poly"] = f.poly;
    factors.push_back(std::move(entry));
  }
  j["factors"] = std::move(factors);
  return j.dump(indent);
}

Certificate certificate_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    Certificate c;
    c.complex_id = j.at("complex").get<std::string>();
    c.s = j.at("s").get<int>();
    c.coloring = j.at("coloring").get<std::vector<std::uint32_t>>();
    c.verdict = j.at("verdict").get<bool>();
    c.lhs = j.at("lhs").get<std::string>();
    c.rhs = j.at("rhs").get<std::string>();
    for (const auto& f : j.at("factors"))
      c.factors.push_back({f.at("color").get<std::uint32_t>(), f.at("poly").get<std::string>()});
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInputError(std::string("certificate does not match the schema: ") + e.what());
  }
}

}  // namespace srcolor
