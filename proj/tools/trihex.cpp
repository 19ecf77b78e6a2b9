#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "trihex/analysis.hpp"
#include "trihex/census.hpp"
#include "trihex/formats.hpp"
#include "trihex/svg.hpp"

namespace {

using namespace trihex;

// Exit codes: 0 success, 2 usage/parse/IO error, 3 internal-consistency
// error.  Data goes to stdout (or --out), diagnostics to stderr.
constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << data;
  if (!out) throw std::runtime_error("cannot write output path: " + path);
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input path: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string paren(const Signature& sig) { return "(" + to_string(sig) + ")"; }

std::string member_list(const SignatureClass& cls) {
  std::string out;
  for (const Signature& member : cls.members) {
    if (!out.empty()) out += " ";
    out += paren(member);
  }
  return out;
}

CombinatorialMap build_with(const Signature& sig, const std::string& method) {
  if (method == "quotient") return build_by_quotient(sig);
  if (method == "spines") return build_by_spines(sig);
  throw std::runtime_error("unknown method: " + method);
}

int cmd_equiv(const std::string& sig_text, bool verbose) {
  EquivalenceDerivation derivation;
  const SignatureClass cls =
      equivalent_signatures(parse_signature(sig_text), derivation);
  std::cout << member_list(cls) << "\n";
  if (verbose) {
    std::cout << "h=" << derivation.h << " v=" << counts(cls.canonical).vertices
              << "\n";
    std::cout << "sw_ne: j2=" << derivation.j2 << " p2=" << derivation.p2
              << " -> " << paren(derivation.sig2) << "\n";
    std::cout << "nw_se: j3=" << derivation.j3 << " p3=" << derivation.p3
              << " -> " << paren(derivation.sig3) << "\n";
  }
  return 0;
}

int cmd_mirror(const std::string& sig_text) {
  std::cout << paren(mirror_signature(parse_signature(sig_text))) << "\n";
  return 0;
}

int cmd_tight(const std::string& sig_text) {
  std::cout << (is_tight(parse_signature(sig_text)) ? "tight" : "not tight")
            << "\n";
  return 0;
}

int cmd_classes(Int v) {
  std::map<Signature, SignatureClass> classes;
  for (const Signature& sig : signatures_for_vertices(v)) {
    SignatureClass cls = equivalent_signatures(sig);
    classes.emplace(cls.canonical, std::move(cls));
  }
  for (const auto& [canonical, cls] : classes) {
    std::cout << member_list(cls) << "  h=" << counts(canonical).hexagons
              << " v=" << counts(canonical).vertices << "  "
              << (cls.chiral ? "chiral" : "achiral") << "\n";
  }
  std::cerr << classes.size() << " classes at v=" << v << "\n";
  return 0;
}

int cmd_census(Int v_max, const std::string& out_path) {
  if (v_max < 4) {
    throw std::runtime_error("census bound below minimum (need v_max >= 4)");
  }
  const std::vector<CensusRow> rows = census(4, v_max);
  write_output(out_path, census_csv(rows));
  std::cerr << rows.size() << " rows for v=4.." << v_max << "\n";
  return 0;
}

int cmd_stats(Int from, Int to, const std::string& format) {
  const ConjectureStats st = conjecture_stats(from, to);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["v_min"] = st.v_min;
    j["v_max"] = st.v_max;
    j["count"] = st.count;
    j["alpha_gap_max"] = st.alpha_gap_max;
    j["alpha_gap_gt1_count"] = st.alpha_gap_gt1_count;
    j["alpha_gap_gt1_fraction"] = st.alpha_gap_gt1_fraction.decimal(6);
    j["beta_gap_max"] = st.beta_gap_max;
    j["beta_gap_gt1_count"] = st.beta_gap_gt1_count;
    j["beta_gap_gt1_fraction"] = st.beta_gap_gt1_fraction.decimal(6);
    j["max_alpha_ratio"] = st.max_alpha_ratio.decimal(6);
    j["max_beta_ratio"] = st.max_beta_ratio.decimal(6);
    std::cout << j.dump(2) << "\n";
  } else if (format == "text") {
    std::cout << "window: " << st.v_min << ".." << st.v_max << " (" << st.count
              << " values)\n";
    std::cout << "alpha_gap_max: " << st.alpha_gap_max << "\n";
    std::cout << "alpha_gap_gt1: " << st.alpha_gap_gt1_count << " ("
              << st.alpha_gap_gt1_fraction.decimal(6) << ")\n";
    std::cout << "beta_gap_max: " << st.beta_gap_max << "\n";
    std::cout << "beta_gap_gt1: " << st.beta_gap_gt1_count << " ("
              << st.beta_gap_gt1_fraction.decimal(6) << ")\n";
    std::cout << "max_alpha_ratio: " << st.max_alpha_ratio.decimal(6)
              << "  (3*alpha/sigma)\n";
    std::cout << "max_beta_ratio: " << st.max_beta_ratio.decimal(6)
              << "  (6*beta/sigma)\n";
  } else {
    throw std::runtime_error("unknown stats format: " + format);
  }
  return 0;
}

int cmd_build(const std::string& sig_text, const std::string& format,
              const std::string& method, const std::string& out_path) {
  const Signature sig = parse_signature(sig_text);
  const CombinatorialMap m = build_with(sig, method);
  std::string data;
  if (format == "json") {
    data = to_json(m, sig, method);
  } else if (format == "dot") {
    data = to_dot(m, sig);
  } else if (format == "graph6") {
    data = to_graph6(m);
  } else if (format == "svg") {
    data = map_svg(m);
  } else {
    throw std::runtime_error("unknown format: " + format);
  }
  write_output(out_path, data);
  return 0;
}

int cmd_identify(const std::string& in_path) {
  const GraphDocument doc = from_json(read_input(in_path));
  const Identification id = identify_signature(doc.map);
  std::cout << member_list(id.cls) << "  "
            << (id.chirality == Chirality::as_built ? "as_built" : "mirrored")
            << "\n";
  return 0;
}

int cmd_verify(const std::string& sig_text) {
  const Signature sig = parse_signature(sig_text);
  bool ok = true;
  CombinatorialMap maps[2];
  const char* names[2] = {"quotient", "spines"};
  for (int i = 0; i < 2; ++i) {
    maps[i] = build_with(sig, names[i]);
    const ValidationReport report = validate(maps[i]);
    std::cout << names[i] << ": "
              << (report.pass ? "pass" : "fail (" + report.first_failure + ")")
              << "\n";
    ok = ok && report.pass;
  }
  const IsoRelation rel = is_isomorphic(maps[0], maps[1]);
  const char* rel_name = rel == IsoRelation::orientation_preserving
                             ? "orientation_preserving"
                             : rel == IsoRelation::mirror_only ? "mirror_only"
                                                               : "none";
  std::cout << "agreement: " << rel_name << "\n";
  ok = ok && rel == IsoRelation::orientation_preserving;
  std::cout << "verdict: " << (ok ? "ok" : "inconsistent") << "\n";
  if (!ok) throw internal_error("constructions disagree for " + sig_text);
  return 0;
}

int cmd_tiling(const std::string& sig_text, int columns, int rows,
               const std::string& out_path) {
  write_output(out_path, tiling_svg(parse_signature(sig_text), columns, rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classify, count, build, and analyze trihexes"};
  app.require_subcommand(1);

  std::string sig_text;
  std::string out_path;
  std::string stats_format;
  std::string build_format;
  std::string method = "quotient";
  std::string in_path;
  bool verbose = false;
  Int v = 0;
  Int from = 0;
  Int to = 0;
  int columns = 0;
  int rows = 0;

  CLI::App* equiv = app.add_subcommand("equiv", "list a signature's class");
  equiv->add_option("signature", sig_text, "signature as s,b,f")->required();
  equiv->add_flag("--verbose", verbose, "show derivation intermediates");

  CLI::App* mirror = app.add_subcommand("mirror", "mirror a signature");
  mirror->add_option("signature", sig_text)->required();

  CLI::App* tight = app.add_subcommand("tight", "tightness of a signature");
  tight->add_option("signature", sig_text)->required();

  CLI::App* classes =
      app.add_subcommand("classes", "list classes at a vertex count");
  classes->add_option("vertices", v)->required();

  CLI::App* census_cmd =
      app.add_subcommand("census", "write the class-count table as CSV");
  census_cmd->add_option("v_max", v)->required();
  census_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* stats =
      app.add_subcommand("stats", "class-count statistics over a window");
  stats->add_option("from", from)->required();
  stats->add_option("to", to)->required();
  stats->add_option("--format", stats_format, "text|json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* build = app.add_subcommand("build", "construct a trihex");
  build->add_option("signature", sig_text)->required();
  build->add_option("--format", build_format, "json|dot|graph6|svg")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "dot", "graph6", "svg"}));
  build->add_option("--method", method, "quotient|spines")
      ->check(CLI::IsMember({"quotient", "spines"}));
  build->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* identify =
      app.add_subcommand("identify", "recover the class of a json document");
  identify->add_option("input", in_path, "trihex-graph json file")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "build a signature both ways and cross-check");
  verify->add_option("signature", sig_text)->required();

  CLI::App* tiling =
      app.add_subcommand("tiling", "render a tiling window as SVG");
  tiling->add_option("signature", sig_text)->required();
  tiling->add_option("columns", columns)->required();
  tiling->add_option("rows", rows)->required();
  tiling->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*equiv) return cmd_equiv(sig_text, verbose);
    if (*mirror) return cmd_mirror(sig_text);
    if (*tight) return cmd_tight(sig_text);
    if (*classes) return cmd_classes(v);
    if (*census_cmd) return cmd_census(v, out_path);
    if (*stats) return cmd_stats(from, to, stats_format);
    if (*build) return cmd_build(sig_text, build_format, method, out_path);
    if (*identify) return cmd_identify(in_path);
    if (*verify) return cmd_verify(sig_text);
    if (*tiling) return cmd_tiling(sig_text, columns, rows, out_path);
    std::cerr << "error: no command selected\n";
    return kUsageError;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
