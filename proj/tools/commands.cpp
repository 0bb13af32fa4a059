#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "a2i/certificate.hpp"
#include "a2i/gauthier.hpp"
#include "a2i/generators.hpp"
#include "a2i/vergara.hpp"

namespace a2i::cli {

namespace {

struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  out << text;
}

int exit_for(Errc c) {
  switch (c) {
    case Errc::AlphaTooLarge: return kAlphaTooLarge;
    case Errc::GammaTargetNotFound: return kGammaNotFound;
    case Errc::InternalAssertion: return kInternal;
    default: return kPrecondition;
  }
}

// Runs body and turns the library's exceptions into exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what();
    if (!e.witness().empty()) {
      err << " (witness:";
      for (Vertex v : e.witness()) err << ' ' << v;
      err << ')';
    }
    err << "\n";
    return exit_for(e.code());
  }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

VertexSet to_set(int n, const std::vector<int>& vs) {
  VertexSet s(n);
  for (int v : vs) s.insert(v);
  return s;
}

}  // namespace

int cmd_analyze(const std::string& graph_path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g = parse_graph(read_file(graph_path));
    GateReport gate = gate_check(g);
    out << "n: " << g.order() << "\n";
    out << "m: " << g.edge_count() << "\n";
    out << "max_degree: " << (g.order() ? g.max_degree() : 0) << "\n";
    out << "min_degree: " << (g.order() ? g.min_degree() : 0) << "\n";
    out << "alpha: " << independence_number(g) << "\n";
    out << "alpha_le_2: " << yes_no(gate.alpha_le_2) << "\n";
    if (gate.alpha_le_2)
      out << "chi: " << chromatic_number_alpha2(g) << "\n";
    else
      out << "chi: n/a (independence number above 2)\n";
    if (gate.clique_cover)
      out << "clique_cover: " << *gate.clique_cover << "\n";
    else
      out << "clique_cover: >3\n";
    out << "thm4_gate: " << yes_no(gate.thm4) << "\n";
    out << "thm5_gate: " << yes_no(gate.thm5) << "\n";
    out << "chi_immersion_guaranteed: " << yes_no(gate.applies()) << "\n";
    return kOk;
  });
}

int cmd_construct(const std::string& graph_path, const ConstructOptions& opt, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    Graph g = parse_graph(read_file(graph_path));
    Certificate cert;
    cert.method = opt.method;
    std::optional<nlohmann::json> trace;
    if (opt.method == "vergara") {
      ChiImmersion r = construct_chi_immersion(g, opt.d_max);
      cert.immersion = std::move(r.immersion);
      trace = std::move(r.trace.steps);
    } else if (opt.method == "gauthier") {
      TwoFifthsImmersion r = construct_2n5_immersion(g);
      cert.immersion = std::move(r.immersion);
      trace = std::move(r.trace);
    } else if (opt.method == "coloring") {
      TriColoring c{{to_set(g.order(), opt.d1), to_set(g.order(), opt.d2), to_set(g.order(), opt.d3)}};
      cert.immersion = construct_from_clique_coloring(g, c);
    } else {
      err << "unknown method " << opt.method << "\n";
      return static_cast<int>(kUsage);
    }
    if (trace && !opt.trace_path.empty()) {
      write_file(opt.trace_path, trace->dump(2) + "\n");
      cert.trace = opt.trace_path;
    }
    const std::string text = serialize_certificate(cert);
    if (opt.cert_path.empty())
      out << text;
    else
      write_file(opt.cert_path, text);
    err << "K" << cert.immersion.branch.size() << " immersion on " << g.order() << " vertices\n";
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, bool strong,
               bool totally_odd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Graph g = parse_graph(read_file(graph_path));
    CertificateParse parsed = parse_certificate(read_file(cert_path));
    for (const std::string& f : parsed.findings) out << "schema: " << f << "\n";
    VerificationReport report = verify_immersion(g, parsed.cert.immersion, strong, totally_odd);
    out << report.to_text();
    const bool ok = parsed.ok() && report.valid;
    out << (ok ? "ACCEPT" : "REJECT") << "\n";
    return static_cast<int>(ok ? kOk : kVerifyFailed);
  });
}

int cmd_generate_blowup(int d, const std::vector<int>& sizes, std::uint64_t seed, std::ostream& out,
                        std::ostream& err) {
  return guarded(err, [&] {
    out << serialize_graph(gen_blowup_complement(d, sizes, seed)) << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_generate_random(int n, double p, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << serialize_graph(gen_random_alpha2(n, p, seed)) << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_gamma(int d, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << serialize_graph(build_gamma(d).graph) << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_hom(const std::string& graph_path, std::optional<int> d_max, std::ostream& out,
            std::ostream& err) {
  return guarded(err, [&] {
    Graph f = parse_graph(read_file(graph_path));
    auto h = search_gamma_target(f, d_max);
    if (!h) {
      err << "no homomorphism into Gamma_d for d <= " << d_max.value_or(default_d_max(f.order()))
          << "\n";
      return static_cast<int>(kGammaNotFound);
    }
    out << nlohmann::json{{"d", h->d}, {"map", h->map}}.dump() << "\n";
    return static_cast<int>(kOk);
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clique immersions in graphs with independence number two"};
  app.require_subcommand(1);

  std::string graph_path, cert_path;
  auto* analyze = app.add_subcommand("analyze", "Report oracles and applicability gates");
  analyze->add_option("graph", graph_path, "edge-list file")->required();

  ConstructOptions copt;
  auto* construct = app.add_subcommand("construct", "Build an immersion certificate");
  construct->add_option("graph", graph_path, "edge-list file")->required();
  construct->add_option("--method", copt.method, "vergara, gauthier or coloring")
      ->check(CLI::IsMember({"vergara", "gauthier", "coloring"}));
  construct->add_option("--d-max", copt.d_max, "largest Andrasfai index to search")
      ->check(CLI::PositiveNumber);
  construct->add_option("--cert", copt.cert_path, "certificate output path");
  construct->add_option("--trace", copt.trace_path, "trace output path");
  construct->add_option("--d1", copt.d1, "first clique (coloring method)")->delimiter(',');
  construct->add_option("--d2", copt.d2, "second clique")->delimiter(',');
  construct->add_option("--d3", copt.d3, "third clique")->delimiter(',');

  bool strong = false, odd = false;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", graph_path, "edge-list file")->required();
  verify->add_option("certificate", cert_path, "certificate JSON")->required();
  verify->add_flag("--strong", strong, "require a strong immersion");
  verify->add_flag("--totally-odd", odd, "require every path to have odd length");

  std::uint64_t seed = 0;
  int d = 0, n = 0;
  double p = 0.5;
  std::vector<int> sizes;
  auto* generate = app.add_subcommand("generate", "Emit a seeded alpha-2 instance");
  generate->require_subcommand(1);
  auto* gen_blowup = generate->add_subcommand("blowup", "complement of a Gamma_d blow-up");
  gen_blowup->add_option("--d", d)->required();
  gen_blowup->add_option("--sizes", sizes, "3d-1 class sizes")->delimiter(',')->required();
  gen_blowup->add_option("--seed", seed);
  auto* gen_random = generate->add_subcommand("random", "complement of a random triangle-free graph");
  gen_random->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  gen_random->add_option("--p", p)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", seed);

  auto* gamma = app.add_subcommand("gamma", "Emit the Andrasfai graph Gamma_d");
  gamma->add_option("--d", d)->required();

  std::optional<int> hom_dmax;
  auto* hom = app.add_subcommand("hom", "Search a homomorphism of a triangle-free graph into Gamma_d");
  hom->add_option("graph", graph_path, "edge-list file")->required();
  hom->add_option("--d-max", hom_dmax)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kUsage);
  }

  if (analyze->parsed()) return cmd_analyze(graph_path, out, err);
  if (construct->parsed()) return cmd_construct(graph_path, copt, out, err);
  if (verify->parsed()) return cmd_verify(graph_path, cert_path, strong, odd, out, err);
  if (gen_blowup->parsed()) return cmd_generate_blowup(d, sizes, seed, out, err);
  if (gen_random->parsed()) return cmd_generate_random(n, p, seed, out, err);
  if (gamma->parsed()) return cmd_gamma(d, out, err);
  if (hom->parsed()) return cmd_hom(graph_path, hom_dmax, out, err);
  return kUsage;
}

}  // namespace a2i::cli
