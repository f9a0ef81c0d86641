#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jpm/cli.hpp"
#include "jpm/tree_index.hpp"

namespace jpm::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::size_t ceil_sqrt(std::size_t n) {
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  return std::max<std::size_t>(s, 1);
}

constexpr std::size_t kWord = sizeof(Cost);
constexpr std::size_t kTreeNodeBytes = sizeof(BinarizedTree::Node);

const BinaryString& as_string(const Input& in) { return std::get<BinaryString>(in.data); }
const LabeledTree& as_tree(const Input& in) { return std::get<LabeledTree>(in.data); }
const Weights& as_weights(const Input& in) { return std::get<Weights>(in.data); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes to `path`, or to `out` when path is "-".
void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path == "-") {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << data;
}

std::string result_to_csv(const BuildResult& result) {
  std::ostringstream out;
  write_result_csv(out, result);
  return out.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

// First size at which two results disagree, described for the report.
std::optional<std::string> first_difference(const BuildResult& expected, const BuildResult& got) {
  if (expected.index() != got.index()) return "result types differ";
  if (const auto* e = std::get_if<Profile>(&expected)) {
    const auto& g = std::get<Profile>(got);
    if (e->size() != g.size()) {
      return "profile lengths differ: expected " + std::to_string(e->size()) + ", got " +
             std::to_string(g.size());
    }
    for (std::size_t i = 1; i <= e->size(); ++i) {
      if (e->min_ones(i) != g.min_ones(i) || e->max_ones(i) != g.max_ones(i)) {
        return "size " + std::to_string(i) + ": expected (" + std::to_string(e->min_ones(i)) + "," +
               std::to_string(e->max_ones(i)) + "), got (" + std::to_string(g.min_ones(i)) + "," +
               std::to_string(g.max_ones(i)) + ")";
      }
    }
    return std::nullopt;
  }
  const auto& e = std::get<CostVector>(expected);
  const auto& g = std::get<CostVector>(got);
  if (e.size() != g.size()) return "result lengths differ";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != g[i]) {
      return "size " + std::to_string(i + 1) + ": expected " + std::to_string(e[i]) + ", got " +
             std::to_string(g[i]);
    }
  }
  return std::nullopt;
}

const Backend& require_backend(const BackendRegistry& registry, const std::string& name,
                               InputKind kind) {
  const Backend* backend = registry.find(name);
  if (!backend) {
    throw std::invalid_argument("unknown algorithm '" + name + "' (known: " + join(registry.names()) + ")");
  }
  if (!backend->accepts(kind)) {
    throw std::invalid_argument("algorithm '" + name + "' does not apply to " +
                                std::string(to_string(kind)) + " inputs");
  }
  return *backend;
}

InputKind require_kind(const std::string& name) {
  const auto kind = parse_kind(name);
  if (!kind) throw std::invalid_argument("unknown input kind '" + name + "'");
  return *kind;
}

void check_positive(const std::optional<std::size_t>& v, const char* what) {
  if (v && *v == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

struct BuildOptions {
  std::string input;
  std::string kind = "string";
  std::string algo;
  std::optional<std::size_t> block;
  std::optional<std::size_t> micro;
  std::string out = "-";
};

struct QueryOptions {
  std::string profile;
  std::int64_t i = 0;
  std::int64_t j = 0;
};

struct VerifyOptions {
  std::string algo;
  std::string oracle;
  std::string kind = "string";
  std::size_t max_n = 400;
  std::size_t seeds = 100;
  double density = 0.5;
  std::optional<std::size_t> block;
  std::optional<std::size_t> micro;
};

struct GenOptions {
  std::string kind = "string";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double density = 0.5;
  std::string out = "-";
};

struct BenchOptions {
  std::vector<std::string> kinds{"string"};
  std::vector<std::string> algos{"naive", "blocked"};
  std::vector<std::size_t> sizes{1024, 2048, 4096};
  std::uint64_t seed = 1;
  std::optional<std::size_t> block;
  std::optional<std::size_t> micro;
  std::size_t repeat = 1;
  std::string out = "-";
};

int cmd_build(const BuildOptions& o, std::ostream& out, const BackendRegistry& registry) {
  const InputKind kind = require_kind(o.kind);
  check_positive(o.block, "--block");
  check_positive(o.micro, "--micro");
  const std::string algo = o.algo.empty() ? default_backend(kind) : o.algo;
  const Backend& backend = require_backend(registry, algo, kind);
  const Input input = parse_input(read_file(o.input), kind);
  write_output(o.out, result_to_csv(backend.build(input, {o.block, o.micro})), out);
  return kExitOk;
}

int cmd_query(const QueryOptions& o, std::ostream& out) {
  std::ifstream in(o.profile);
  if (!in) throw std::runtime_error("cannot open '" + o.profile + "'");
  const Profile profile = read_profile_csv(in);
  out << (occurs(profile, o.i, o.j) ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err,
               const BackendRegistry& registry) {
  const InputKind kind = require_kind(o.kind);
  check_positive(o.block, "--block");
  check_positive(o.micro, "--micro");
  if (o.max_n == 0) throw std::invalid_argument("--max-n must be at least 1");
  const Backend& algo = require_backend(registry, o.algo, kind);
  const Backend& oracle = require_backend(registry, o.oracle, kind);
  if ((o.oracle == "enumerate" || o.algo == "enumerate") && o.max_n > kEnumerationLimit) {
    throw std::invalid_argument("enumerate handles at most " + std::to_string(kEnumerationLimit) +
                                " nodes; lower --max-n");
  }
  for (std::size_t seed = 0; seed < o.seeds; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % o.max_n);
    // Unset parameters are drawn per case so the sweep covers many shapes.
    BuildParams params;
    params.block = o.block ? o.block : std::optional<std::size_t>(1 + rng() % (n + 1));
    params.micro = o.micro ? o.micro : std::optional<std::size_t>(1 + rng() % n);
    const Input input = generate_input(kind, n, rng(), o.density);
    const BuildResult expected = oracle.build(input, {});
    const BuildResult got = algo.build(input, params);
    if (const auto diff = first_difference(expected, got)) {
      out << "mismatch: " << o.algo << " vs " << o.oracle << ", seed " << seed << ", n " << n
          << ", block " << *params.block << ", micro " << *params.micro << '\n'
          << "input:\n"
          << format_input(input) << *diff << '\n';
      err << "verify failed after " << seed + 1 << " case(s)\n";
      return kExitMismatch;
    }
  }
  out << "verify: " << o.algo << " vs " << o.oracle << " on " << o.kind << ": " << o.seeds
      << " cases, 0 mismatches\n";
  return kExitOk;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  const InputKind kind = require_kind(o.kind);
  write_output(o.out, format_input(generate_input(kind, o.n, o.seed, o.density)), out);
  return kExitOk;
}

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err,
              const BackendRegistry& registry) {
  check_positive(o.block, "--block");
  check_positive(o.micro, "--micro");
  if (o.repeat == 0) throw std::invalid_argument("--repeat must be at least 1");
  std::ostringstream csv;
  csv << "kind,backend,n,param,build_ms,peak_memory_bytes\n";
  for (const auto& kind_name : o.kinds) {
    const InputKind kind = require_kind(kind_name);
    for (const auto& algo : o.algos) {
      const Backend* backend = registry.find(algo);
      if (!backend) throw std::invalid_argument("unknown algorithm '" + algo + "'");
      if (!backend->accepts(kind)) {
        err << "bench: skipping " << algo << " for " << kind_name << '\n';
        continue;
      }
      for (std::size_t n : o.sizes) {
        if (n == 0) throw std::invalid_argument("bench sizes must be positive");
        const Input input = generate_input(kind, n, o.seed);
        std::size_t param = 0;
        if (algo == "blocked") param = o.block.value_or(ceil_sqrt(n));
        if (algo == "micro-macro") param = o.micro.value_or(ceil_sqrt(n));
        BuildParams params{o.block, o.micro};
        double best_ms = 0;
        for (std::size_t rep = 0; rep < o.repeat; ++rep) {
          const auto start = std::chrono::steady_clock::now();
          const BuildResult result = backend->build(input, params);
          const auto stop = std::chrono::steady_clock::now();
          const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
          best_ms = rep == 0 ? ms : std::min(best_ms, ms);
        }
        const std::size_t memory = backend->memory_estimate ? backend->memory_estimate(n, param) : 0;
        csv << kind_name << ',' << algo << ',' << n << ',' << param << ',' << best_ms << ','
            << memory << '\n';
      }
    }
  }
  write_output(o.out, csv.str(), out);
  return kExitOk;
}

}  // namespace

bool Backend::accepts(InputKind kind) const {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

void BackendRegistry::add(const std::string& name, Backend backend) {
  backends_[name] = std::move(backend);
}

const Backend* BackendRegistry::find(std::string_view name) const {
  const auto it = backends_.find(name);
  return it == backends_.end() ? nullptr : &it->second;
}

std::vector<std::string> BackendRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, backend] : backends_) out.push_back(name);
  return out;
}

BackendRegistry BackendRegistry::defaults() {
  BackendRegistry registry;
  registry.add("naive", {{InputKind::string, InputKind::weighted_string},
                         [](const Input& in, const BuildParams&) -> BuildResult {
                           if (in.kind == InputKind::string) return naive_profile(as_string(in));
                           return naive_weighted_max_sums(as_weights(in));
                         },
                         [](std::size_t n, std::size_t) { return kWord * (3 * n + 1); }});
  registry.add("blocked", {{InputKind::string},
                           [](const Input& in, const BuildParams& p) -> BuildResult {
                             return blocked_profile(as_string(in), p.block);
                           },
                           [](std::size_t n, std::size_t b) {
                             const std::size_t m = (n + b - 1) / b;
                             // Both semirings' A, B, C and C_l for the widest l.
                             return kWord * (3 * n + 1 + 2 * (2 * m * (b + 1) + 2 * m * m));
                           }});
  registry.add("recursive", {{InputKind::string, InputKind::weighted_string},
                             [](const Input& in, const BuildParams&) -> BuildResult {
                               if (in.kind == InputKind::string) return recursive_profile(as_string(in));
                               return weighted_max_sums(as_weights(in));
                             },
                             [](std::size_t n, std::size_t) {
                               // Top-level operands, result, and the blocked operand matrices.
                               return kWord * (3 * n + 1 + 2 * (n + 2) + 2 * (n + 1) + 3 * n);
                             }});
  registry.add("simple-tree", {{InputKind::tree, InputKind::weighted_tree},
                               [](const Input& in, const BuildParams&) -> BuildResult {
                                 if (in.kind == InputKind::tree) {
                                   return simple_tree_profile(binarize(as_tree(in)));
                                 }
                                 return weighted_tree_max_sums(as_tree(in));
                               },
                               [](std::size_t n, std::size_t) {
                                 return 2 * n * kTreeNodeBytes + kWord * (2 * n + 2 * 2 * n);
                               }});
  registry.add("micro-macro", {{InputKind::tree},
                               [](const Input& in, const BuildParams& p) -> BuildResult {
                                 return tree_profile(as_tree(in), p.micro);
                               },
                               [](std::size_t n, std::size_t r) {
                                 // Nodes, decomposition, and live arrays bounded by r
                                 // per micro tree plus retained top arrays.
                                 return 2 * n * (kTreeNodeBytes + 4 * sizeof(std::size_t)) +
                                        kWord * (2 * n + 4 * r * (r + 1) + 4 * n);
                               }});
  registry.add("enumerate", {{InputKind::tree, InputKind::weighted_tree},
                             [](const Input& in, const BuildParams&) -> BuildResult {
                               if (in.kind == InputKind::tree) return enumerate_connected_oracle(as_tree(in));
                               return enumerate_weighted_max_sums(as_tree(in));
                             },
                             [](std::size_t n, std::size_t) { return kWord * (2 * n + 64); }});
  return registry;
}

std::string default_backend(InputKind kind) {
  switch (kind) {
    case InputKind::string:
      return "blocked";
    case InputKind::tree:
      return "micro-macro";
    case InputKind::weighted_string:
      return "recursive";
    case InputKind::weighted_tree:
      return "simple-tree";
  }
  return "";
}

void write_result_csv(std::ostream& out, const BuildResult& result) {
  if (const auto* p = std::get_if<Profile>(&result)) {
    write_profile_csv(out, *p);
    return;
  }
  const auto& sums = std::get<CostVector>(result);
  out << "size,max_sum\n";
  for (std::size_t i = 0; i < sums.size(); ++i) out << i + 1 << ',' << sums[i] << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const BackendRegistry& registry) {
  CLI::App app{"Binary jumbled pattern matching indexes for strings and trees"};
  app.name("jpm");
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build a profile index and write it as CSV");
  build_cmd->add_option("--input", build.input, "Input file")->required();
  build_cmd->add_option("--kind", build.kind, "string | tree | weighted-string | weighted-tree");
  build_cmd->add_option("--algo", build.algo, "Backend (default depends on --kind)");
  build_cmd->add_option("--block", build.block, "Block length for the blocked backend");
  build_cmd->add_option("--micro", build.micro, "Micro tree size bound for micro-macro");
  build_cmd->add_option("--out", build.out, "Output file, '-' for standard output");

  QueryOptions query;
  auto* query_cmd = app.add_subcommand("query", "Does a pattern of size i with j ones occur?");
  query_cmd->add_option("--profile", query.profile, "Profile CSV")->required();
  query_cmd->add_option("-i", query.i, "Pattern size")->required();
  query_cmd->add_option("-j", query.j, "Number of ones")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare a backend against an oracle on random inputs");
  verify_cmd->add_option("--algo", verify.algo, "Backend under test")->required();
  verify_cmd->add_option("--oracle", verify.oracle, "Reference backend")->required();
  verify_cmd->add_option("--kind", verify.kind, "Input kind");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest input size");
  verify_cmd->add_option("--seeds", verify.seeds, "Number of random cases");
  verify_cmd->add_option("--density", verify.density, "Probability of a 1 label");
  verify_cmd->add_option("--block", verify.block, "Fixed block length (random if unset)");
  verify_cmd->add_option("--micro", verify.micro, "Fixed micro bound (random if unset)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random input file");
  gen_cmd->add_option("--kind", gen.kind, "Input kind");
  gen_cmd->add_option("--n", gen.n, "Input size")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--density", gen.density, "Probability of a 1 label");
  gen_cmd->add_option("--out", gen.out, "Output file, '-' for standard output");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time backends over a size sweep, CSV output");
  bench_cmd->add_option("--kinds", bench.kinds, "Input kinds")->delimiter(',');
  bench_cmd->add_option("--algos", bench.algos, "Backends")->delimiter(',');
  bench_cmd->add_option("--sizes", bench.sizes, "Input sizes")->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed, "Random seed");
  bench_cmd->add_option("--block", bench.block, "Block length for blocked");
  bench_cmd->add_option("--micro", bench.micro, "Micro bound for micro-macro");
  bench_cmd->add_option("--repeat", bench.repeat, "Runs per row; the fastest is reported");
  bench_cmd->add_option("--out", bench.out, "Output file, '-' for standard output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build, out, registry);
    if (*query_cmd) return cmd_query(query, out);
    if (*verify_cmd) return cmd_verify(verify, out, err, registry);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*bench_cmd) return cmd_bench(bench, out, err, registry);
  } catch (const ParseError& e) {
    err << "jpm: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "jpm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace jpm::cli
