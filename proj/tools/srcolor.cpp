// srcolor: command-line driver for relaxed colorings of simplicial complexes.
//
// Exit codes: 0 ok, 1 usage, 2 malformed input, 3 budget or resource limit,
// 4 internal invariant violation.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srcolor/srcolor.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace srcolor;

enum ExitCode { kOk = 0, kUsage = 1, kMalformed = 2, kBudget = 3, kInternal = 4 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput:
    case ErrorKind::kUnknownVertex:
    case ErrorKind::kContextMismatch:
    case ErrorKind::kInvalidWitness:
      return kMalformed;
    case ErrorKind::kInvalidArgument:
      return kUsage;
    case ErrorKind::kOverflow:
    case ErrorKind::kResourceLimit:
    case ErrorKind::kBudgetExhausted:
      return kBudget;
    case ErrorKind::kInvariantViolation:
      return kInternal;
  }
  return kInternal;
}

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json complex_summary(const SimplicialComplex& k) {
  json j;
  j["m"] = k.num_vertices();
  j["n"] = k.max_facet_size();
  j["dim"] = k.dim();
  j["f_vector"] = k.f_vector().counts;
  j["vertices"] = k.vertices().labels();
  return j;
}

void emit_report(const std::string& command, const SimplicialComplex* k, json result,
                 const Timer& timer) {
  json report;
  report["command"] = command;
  if (k) report["complex"] = complex_summary(*k);
  report["result"] = std::move(result);
  report["wall_time_ms"] = timer.elapsed_ms();
  std::cout << report.dump(2) << '\n';
}

std::vector<std::int64_t> parse_coloring_arg(const std::string& arg) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  for (auto& c : text)
    if (c == ',' || c == ';') c = ' ';
  std::istringstream in(text);
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw MalformedInputError("coloring entry '" + token + "' is not an integer");
    }
  }
  return out;
}

void write_output(const SimplicialComplex& k, const std::string& path) {
  write_facet_file(k, path.empty() ? "-" : path);
}

// --- subcommands -----------------------------------------------------------

struct Options {
  std::string file;
  std::string file2;
  std::string output;
  int s = 1;
  std::int64_t j = 0;
  std::uint32_t colors = 1;
  std::string coloring;
  std::string id;
  std::uint64_t budget = 0;
  unsigned workers = 1;
  std::string order = "degree";
  bool json = false;
  bool algebraic = false;
  bool surjective = false;
  bool corpus_only = false;
  std::uint64_t seed = 20240101;
  std::uint32_t samples = 200;
  std::vector<std::string> gen_args;
};

int cmd_info(const Options& o) {
  Timer timer;
  const auto k = read_facet_file(o.file);
  const auto fv = k.f_vector();
  const auto missing = missing_faces(k);
  std::vector<std::pair<int, bool>> flags;
  for (int s = 1; s <= k.dim() + 1; ++s) flags.emplace_back(s, is_s_flag(k, s));

  if (o.json) {
    json r;
    r["codim"] = k.codim();
    r["f_vector"] = fv.counts;
    r["f_vector_without_empty"] = fv.without_empty();
    r["euler_characteristic"] = fv.euler_characteristic();
    r["pure"] = is_pure(k);
    r["pseudomanifold"] = is_pseudomanifold(k);
    auto mf = json::array();
    for (const auto& f : missing) mf.push_back(k.to_labels(f));
    r["missing_faces"] = std::move(mf);
    auto fl = json::array();
    for (auto [s, flag] : flags) fl.push_back({{"s", s}, {"flag", flag}});
    r["s_flag"] = std::move(fl);
    emit_report("info", &k, std::move(r), timer);
    return kOk;
  }
  std::cout << "vertices: ";
  for (std::size_t i = 0; i < k.num_vertices(); ++i)
    std::cout << (i ? " " : "") << k.vertices().label(static_cast<VertexIndex>(i));
  std::cout << "\nm = " << k.num_vertices() << ", n = " << k.max_facet_size()
            << ", dim = " << k.dim() << ", codim = " << k.codim() << '\n';
  std::cout << "f-vector: (" << join_ints(fv.counts, ", ") << ")\n";
  std::cout << "f-vector without empty face: (" << join_ints(fv.without_empty(), ", ") << ")\n";
  std::cout << "euler characteristic: " << fv.euler_characteristic() << '\n';
  std::cout << "pure: " << (is_pure(k) ? "yes" : "no")
            << ", pseudomanifold: " << (is_pseudomanifold(k) ? "yes" : "no") << '\n';
  std::cout << "missing faces (" << missing.size() << "):\n";
  for (const auto& f : missing) std::cout << "  " << format_face(k, f) << '\n';
  std::cout << "s-flag:";
  for (auto [s, flag] : flags) std::cout << " s=" << s << (flag ? " yes" : " no") << ';';
  std::cout << '\n';
  return kOk;
}

int cmd_chromatic(const Options& o) {
  Timer timer;
  const auto k = read_facet_file(o.file);
  SearchConfig cfg;
  if (o.budget > 0) cfg.node_budget = o.budget;
  cfg.workers = o.workers;
  cfg.vertex_order = o.order == "canonical" ? VertexOrder::kCanonical : VertexOrder::kFacetDegree;
  try {
    const auto r = chromatic_number(k, o.s, cfg);
    if (o.json) {
      json j;
      j["s"] = o.s;
      j["chromatic_number"] = r.colors;
      std::vector<std::uint32_t> witness;
      for (auto c : r.witness.assignment()) witness.push_back(c + 1);
      j["witness"] = witness;
      j["nodes"] = r.nodes;
      emit_report("chromatic", &k, std::move(j), timer);
    } else {
      std::cout << r.colors << '\n';
      std::cout << "witness: " << r.witness.to_string() << '\n';
    }
    return kOk;
  } catch (const BudgetExhaustedError& e) {
    if (o.json) {
      json j;
      j["s"] = o.s;
      j["error"] = e.what();
      j["lower_bound"] = e.lower_bound();
      j["upper_bound"] = e.upper_bound();
      emit_report("chromatic", &k, std::move(j), timer);
    } else {
      std::cerr << "budget exhausted: " << e.lower_bound() << " <= chi_" << o.s
                << " <= " << e.upper_bound() << '\n';
    }
    return kBudget;
  }
}

int cmd_check(const Options& o) {
  Timer timer;
  const auto k = read_facet_file(o.file);
  const auto labels = parse_coloring_arg(o.coloring);
  if (labels.size() != k.num_vertices())
    throw MalformedInputError("coloring has " + std::to_string(labels.size()) +
                              " entries but the complex has " +
                              std::to_string(k.num_vertices()) + " vertices");
  const auto f = Coloring::from_labels(labels);
  const bool combinatorial = is_coloring(k, f, o.s);

  std::optional<Certificate> cert;
  if (o.algebraic) {
    cert = verify_coloring_algebraically(k, f, o.s, o.id.empty() ? o.file : o.id);
    if (cert->verdict != combinatorial) {
      std::cerr << "internal invariant violation: combinatorial verdict "
                << (combinatorial ? "true" : "false") << " but algebraic verdict "
                << (cert->verdict ? "true" : "false") << '\n';
      return kInternal;
    }
  }

  if (o.json) {
    json j;
    j["s"] = o.s;
    j["verdict"] = combinatorial;
    if (cert) j["certificate"] = json::parse(certificate_to_json(*cert));
    emit_report("check", &k, std::move(j), timer);
    return kOk;
  }
  std::cout << "verdict: " << (combinatorial ? "true" : "false") << '\n';
  if (cert) {
    std::cout << "algebraic: " << (cert->verdict ? "true" : "false") << '\n';
    std::cout << "lhs: " << cert->lhs << '\n';
    std::cout << "rhs: " << cert->rhs << '\n';
    for (const auto& factor : cert->factors)
      std::cout << "factor " << factor.color << ": " << factor.poly << '\n';
  }
  return kOk;
}

int cmd_count(const Options& o) {
  Timer timer;
  const auto k = read_facet_file(o.file);
  CountConfig cfg;
  if (o.budget > 0) cfg.node_budget = o.budget;
  const auto n = count_colorings(k, o.colors, o.s, o.surjective, cfg);
  if (o.json) {
    json j;
    j["colors"] = o.colors;
    j["s"] = o.s;
    j["surjective"] = o.surjective;
    j["count"] = n.str();
    emit_report("count", &k, std::move(j), timer);
  } else {
    std::cout << n.str() << '\n';
  }
  return kOk;
}

std::uint32_t parse_u32(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used == s.size() && v <= 0xffffffffUL) return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
  }
  throw InvalidArgumentError(std::string("invalid ") + what + " '" + s + "'");
}

int cmd_gen(const Options& o) {
  const auto& a = o.gen_args;
  auto need = [&](std::size_t n) {
    if (a.size() != n) throw InvalidArgumentError("gen " + a[0] + " expects " +
                                                  std::to_string(n - 1) + " argument(s)");
  };
  if (a.empty()) throw InvalidArgumentError("gen needs a family: cyclic, simplex, boundary, corpus, random");
  const auto& kind = a[0];
  if (kind == "cyclic") {
    need(3);
    write_output(cyclic_polytope(parse_u32(a[1], "M"), parse_u32(a[2], "N")), o.output);
  } else if (kind == "simplex") {
    need(2);
    write_output(full_simplex(parse_u32(a[1], "M")), o.output);
  } else if (kind == "boundary") {
    need(2);
    write_output(boundary_simplex(parse_u32(a[1], "M")), o.output);
  } else if (kind == "corpus") {
    need(2);
    write_output(corpus_entry(a[1]).complex, o.output);
  } else if (kind == "random") {
    need(3);
    double density = 0;
    try {
      density = std::stod(a[2]);
    } catch (const std::exception&) {
      throw InvalidArgumentError("invalid density '" + a[2] + "'");
    }
    write_output(random_complex(parse_u32(a[1], "M"), density, o.seed), o.output);
  } else {
    throw InvalidArgumentError("unknown family '" + kind + "'");
  }
  return kOk;
}

int cmd_selftest(const Options& o) {
  Timer timer;
  bool ok = true;
  json results = json::array();

  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    ok = ok && pass;
    results.push_back({{"suite", name}, {"pass", pass}, {"detail", detail}});
    if (!o.json) std::cout << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
  };

  try {
    const auto& entries = corpus();
    std::string names;
    for (const auto& e : entries) names += (names.empty() ? "" : ", ") + e.name;
    record("corpus", true, names);
  } catch (const InvariantViolationError& e) {
    record("corpus", false, e.what());
  }

  if (!o.corpus_only) {
    std::uint64_t maps = 0;
    std::uint64_t complexes = 0;
    std::string failure;
    std::mt19937_64 rng(o.seed);
    try {
      for (std::uint32_t i = 0; i < o.samples; ++i) {
        const auto m = static_cast<std::uint32_t>(1 + rng() % 8);
        const double density = 0.2 + 0.1 * static_cast<double>(rng() % 7);
        const auto k = random_complex(m, density, rng());
        for (int s = 1; s <= 3; ++s) maps += cross_check_exhaustive(k, s, 3).trials;
        ++complexes;
      }
      for (const auto& e : corpus())
        for (int s = 1; s <= 3; ++s) maps += cross_check(e.complex, s, 500, o.seed).trials;
    } catch (const InvariantViolationError& e) {
      failure = e.what();
    }
    record("oracle-equivalence", failure.empty(),
           failure.empty() ? std::to_string(complexes) + " random complexes + corpus, " +
                                 std::to_string(maps) + " maps, 0 disagreements"
                           : failure);
  }

  if (o.json) emit_report("selftest", nullptr, std::move(results), timer);
  return ok ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxed vertex colorings of finite simplicial complexes"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "Summarize a complex");
  info->add_option("file", o.file, "Facet file ('-' for stdin)")->required();
  info->add_flag("--json", o.json, "Machine-readable output");

  auto* chromatic = app.add_subcommand("chromatic", "Exact s-chromatic number with witness");
  chromatic->add_option("file", o.file, "Facet file ('-' for stdin)")->required();
  chromatic->add_option("--s", o.s, "Allowed vertices per color in each face")->required()
      ->check(CLI::PositiveNumber);
  chromatic->add_option("--budget", o.budget, "Search node budget (0 = unlimited)");
  chromatic->add_option("--workers", o.workers, "Parallel workers")->check(CLI::PositiveNumber);
  chromatic->add_option("--order", o.order, "Vertex order: degree or canonical")
      ->check(CLI::IsMember({"degree", "canonical"}));
  chromatic->add_flag("--json", o.json, "Machine-readable output");

  auto* check = app.add_subcommand("check", "Check a coloring");
  check->add_option("file", o.file, "Facet file ('-' for stdin)")->required();
  check->add_option("--s", o.s, "Allowed vertices per color in each face")->required()
      ->check(CLI::PositiveNumber);
  check->add_option("--coloring", o.coloring,
                    "Comma-separated colors in vertex order, or a file holding them")
      ->required();
  check->add_option("--id", o.id, "Complex identifier recorded in the certificate");
  check->add_flag("--algebraic", o.algebraic, "Also verify in the Stanley-Reisner ring");
  check->add_flag("--json", o.json, "Machine-readable output");

  auto* count = app.add_subcommand("count", "Count colorings into a labeled palette");
  count->add_option("file", o.file, "Facet file ('-' for stdin)")->required();
  count->add_option("--colors", o.colors, "Palette size")->required()->check(CLI::PositiveNumber);
  count->add_option("--s", o.s, "Allowed vertices per color in each face")->required()
      ->check(CLI::PositiveNumber);
  count->add_flag("--surjective", o.surjective, "Count only maps onto the palette");
  count->add_option("--budget", o.budget, "Search node budget (0 = default)");
  count->add_flag("--json", o.json, "Machine-readable output");

  auto* gen = app.add_subcommand(
      "gen", "Emit a facet file: cyclic M N | simplex M | boundary M | corpus NAME | random M DENSITY");
  gen->add_option("args", o.gen_args, "Family and parameters")->required();
  gen->add_option("-o,--output", o.output, "Output file (default stdout)");
  gen->add_option("--seed", o.seed, "Seed for the random family");

  auto* flagify = app.add_subcommand("flagify", "s-flagification of a complex");
  flagify->add_option("file", o.file, "Facet file ('-' for stdin)")->required();
  flagify->add_option("--s", o.s, "Skeleton dimension to preserve")->required()
      ->check(CLI::PositiveNumber);
  flagify->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* skel = app.add_subcommand("skeleton", "j-skeleton of a complex");
  skel->add_option("file", o.file, "Facet file ('-' for stdin)")->required();
  skel->add_option("--j", o.j, "Maximal face dimension")->required();
  skel->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* join_cmd = app.add_subcommand("join", "Join of two complexes");
  join_cmd->add_option("file1", o.file, "First facet file")->required();
  join_cmd->add_option("file2", o.file2, "Second facet file")->required();
  join_cmd->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* selftest = app.add_subcommand("selftest", "Corpus validation and verifier equivalence");
  selftest->add_option("--seed", o.seed, "Seed for the random sample");
  selftest->add_option("--samples", o.samples, "Number of random complexes");
  selftest->add_flag("--corpus-only", o.corpus_only, "Only validate the bundled corpus");
  selftest->add_flag("--json", o.json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*chromatic) return cmd_chromatic(o);
    if (*check) return cmd_check(o);
    if (*count) return cmd_count(o);
    if (*gen) return cmd_gen(o);
    if (*flagify) {
      write_output(flagification(read_facet_file(o.file), o.s), o.output);
      return kOk;
    }
    if (*skel) {
      write_output(skeleton(read_facet_file(o.file), o.j), o.output);
      return kOk;
    }
    if (*join_cmd) {
      write_output(join(read_facet_file(o.file), read_facet_file(o.file2)), o.output);
      return kOk;
    }
    if (*selftest) return cmd_selftest(o);
  } catch (const BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}
