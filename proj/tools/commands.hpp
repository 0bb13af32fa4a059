#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace a2i::cli {

// Process exit codes.
enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,          // bad arguments, unreadable or unparseable files
  kAlphaTooLarge = 3,
  kGammaNotFound = 4,
  kPrecondition = 5,   // any other precondition the construction rejects
  kInternal = 6,
};

struct ConstructOptions {
  std::string method = "vergara";  // vergara | gauthier | coloring
  std::optional<int> d_max;
  std::string cert_path;   // empty: certificate on stdout
  std::string trace_path;  // empty: no trace written
  std::vector<int> d1, d2, d3;  // coloring method only
};

int cmd_analyze(const std::string& graph_path, std::ostream& out, std::ostream& err);
int cmd_construct(const std::string& graph_path, const ConstructOptions& opt, std::ostream& out,
                  std::ostream& err);
int cmd_verify(const std::string& graph_path, const std::string& cert_path, bool strong,
               bool totally_odd, std::ostream& out, std::ostream& err);
int cmd_generate_blowup(int d, const std::vector<int>& sizes, std::uint64_t seed, std::ostream& out,
                        std::ostream& err);
int cmd_generate_random(int n, double p, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_gamma(int d, std::ostream& out, std::ostream& err);
int cmd_hom(const std::string& graph_path, std::optional<int> d_max, std::ostream& out,
            std::ostream& err);

// Full command line, as main() sees it.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace a2i::cli
