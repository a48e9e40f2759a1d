#include <json.hpp>

#include "polydiv/error.hpp"
#include "polydiv/membership.hpp"

namespace polydiv {

using nlohmann::json;

std::string certificate_to_json(const GeneratorSystem& g, const Polynomial& target,
                                const DivisionCertificate& cert, int indent) {
  json j;
  j["n"] = g.n();
  j["generators"] = json::array();
  for (const auto& p : g.polys()) j["generators"].push_back(to_string(p));
  j["declared_degrees"] = g.degrees();
  j["target"] = to_string(target);
  j["nu"] = cert.nu;
  j["r"] = cert.r;
  j["cofactors"] = json::array();
  for (const auto& q : cert.cofactors) j["cofactors"].push_back(to_string(q));
  j["verified"] = cert.verified;
  j["max_deg_fq"] = cert.max_deg_fq(g);
  return j.dump(indent);
}

ParsedCertificate certificate_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    const auto n = j.at("n").get<std::size_t>();
    if (n == 0) throw Error("certificate field n must be positive");
    std::vector<Polynomial> gens;
    for (const auto& s : j.at("generators")) gens.push_back(parse(s.get<std::string>(), n));
    auto degrees = j.at("declared_degrees").get<std::vector<unsigned>>();
    GeneratorSystem g(n, std::move(gens), std::move(degrees));
    Polynomial target = parse(j.at("target").get<std::string>(), n);
    DivisionCertificate cert;
    cert.nu = j.at("nu").get<unsigned>();
    cert.r = j.at("r").get<int>();
    for (const auto& s : j.at("cofactors")) cert.cofactors.push_back(parse(s.get<std::string>(), n));
    if (cert.cofactors.size() != g.m()) throw Error("cofactor count differs from generator count");
    if (cert.nu < 1) throw Error("certificate field nu must be positive");
    const bool claimed = j.at("verified").get<bool>();
    (void)j.at("max_deg_fq").get<int>();
    return ParsedCertificate{std::move(g), std::move(target), std::move(cert), claimed};
  } catch (const json::exception& e) {
    throw Error(std::string("certificate does not match the schema: ") + e.what());
  }
}

}  // namespace polydiv
