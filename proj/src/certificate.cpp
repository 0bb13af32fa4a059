#include "a2i/certificate.hpp"

namespace a2i {

using nlohmann::json;

json certificate_to_json(const Certificate& cert) {
  json paths = json::array();
  for (const auto& [pair, path] : cert.immersion.paths)
    paths.push_back({{"u", pair.first}, {"v", pair.second}, {"vertices", path}});
  json out = {{"n", cert.immersion.n}, {"branch", cert.immersion.branch}, {"paths", paths},
              {"method", cert.method}};
  out["trace"] = cert.trace ? json(*cert.trace) : json(nullptr);
  return out;
}

// One path per line keeps certificate diffs readable.
std::string serialize_certificate(const Certificate& cert) {
  const json j = certificate_to_json(cert);
  std::string out = "{\n";
  out += "  \"n\": " + j["n"].dump() + ",\n";
  out += "  \"branch\": " + j["branch"].dump() + ",\n";
  out += "  \"paths\": [";
  const json& paths = j["paths"];
  for (std::size_t i = 0; i < paths.size(); ++i)
    out += (i ? ",\n    " : "\n    ") + paths[i].dump();
  out += paths.empty() ? "],\n" : "\n  ],\n";
  out += "  \"method\": " + j["method"].dump() + ",\n";
  out += "  \"trace\": " + j["trace"].dump() + "\n}\n";
  return out;
}

namespace {

bool is_int(const json& j) { return j.is_number_integer(); }

bool int_array(const json& j) {
  if (!j.is_array()) return false;
  for (const json& x : j)
    if (!is_int(x)) return false;
  return true;
}

}  // namespace

CertificateParse parse_certificate(std::string_view text) {
  CertificateParse out;
  auto& f = out.findings;
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) {
    f.push_back("not valid JSON");
    return out;
  }
  if (!doc.is_object()) {
    f.push_back("top level is not an object");
    return out;
  }
  Immersion& im = out.cert.immersion;

  if (!doc.contains("n") || !is_int(doc["n"]) || doc["n"].get<long long>() < 0)
    f.push_back("\"n\" must be a non-negative integer");
  else
    im.n = doc["n"].get<int>();

  if (!doc.contains("branch") || !int_array(doc["branch"])) {
    f.push_back("\"branch\" must be an array of integers");
  } else {
    im.branch = doc["branch"].get<std::vector<Vertex>>();
    for (std::size_t i = 1; i < im.branch.size(); ++i)
      if (im.branch[i - 1] >= im.branch[i]) {
        f.push_back("\"branch\" is not strictly ascending");
        break;
      }
  }

  if (!doc.contains("paths") || !doc["paths"].is_array()) {
    f.push_back("\"paths\" must be an array");
  } else {
    std::optional<VertexPair> last;
    for (std::size_t i = 0; i < doc["paths"].size(); ++i) {
      const json& p = doc["paths"][i];
      const std::string at = "paths[" + std::to_string(i) + "]";
      if (!p.is_object() || !p.contains("u") || !p.contains("v") || !p.contains("vertices") ||
          !is_int(p["u"]) || !is_int(p["v"]) || !int_array(p["vertices"])) {
        f.push_back(at + " needs integer \"u\", \"v\" and an integer array \"vertices\"");
        continue;
      }
      VertexPair key{p["u"].get<Vertex>(), p["v"].get<Vertex>()};
      if (key.first >= key.second) f.push_back(at + " has u >= v");
      if (last && key <= *last) f.push_back(at + " is out of order or repeated");
      last = key;
      if (!im.paths.emplace(make_pair_key(key.first, key.second),
                            p["vertices"].get<std::vector<Vertex>>()).second)
        f.push_back(at + " repeats pair " + std::to_string(key.first) + "-" +
                    std::to_string(key.second));
    }
  }

  if (doc.contains("method")) {
    if (doc["method"].is_string())
      out.cert.method = doc["method"].get<std::string>();
    else
      f.push_back("\"method\" must be a string");
  }
  if (doc.contains("trace") && !doc["trace"].is_null()) {
    if (doc["trace"].is_string())
      out.cert.trace = doc["trace"].get<std::string>();
    else
      f.push_back("\"trace\" must be a string or null");
  }
  return out;
}

}  // namespace a2i
