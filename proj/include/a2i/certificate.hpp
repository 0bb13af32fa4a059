#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "a2i/immersion.hpp"

namespace a2i {

/// On-disk form of an immersion:
///   {"n": int, "branch": [int], "paths": [{"u": int, "v": int, "vertices": [int]}],
///    "method": string, "trace": string|null}
/// Pairs have u < v and are sorted; vertices run from u to v.
struct Certificate {
  Immersion immersion;
  std::string method;
  std::optional<std::string> trace;
};

nlohmann::json certificate_to_json(const Certificate& cert);
std::string serialize_certificate(const Certificate& cert);

/// Lenient reader: structural problems become findings instead of exceptions, and whatever
/// could be read is kept so the verifier can report on it too.
struct CertificateParse {
  Certificate cert;
  std::vector<std::string> findings;

  bool ok() const { return findings.empty(); }
};

CertificateParse parse_certificate(std::string_view text);

}  // namespace a2i
