#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jpm/profile.hpp"
#include "jpm/string_index.hpp"
#include "jpm/tree.hpp"

namespace jpm::cli {

enum class InputKind { string, tree, weighted_string, weighted_tree };

std::string_view to_string(InputKind kind);
std::optional<InputKind> parse_kind(std::string_view name);

using Weights = std::vector<Cost>;
using InputData = std::variant<BinaryString, LabeledTree, Weights>;

struct Input {
  InputKind kind;
  InputData data;

  std::size_t size() const;
};

// Input file formats. Strings: one line of '0'/'1', whitespace ignored.
// Weighted strings: whitespace-separated signed integers. Trees: first line
// n, then n lines "parent label" for nodes 1..n, parent 0 marking the root;
// weighted trees use a signed integer label. Errors are ParseError.
Input parse_input(std::string_view text, InputKind kind);
std::string format_input(const Input& input);

// Deterministic for a given seed. Strings: i.i.d. bits with P(1) = density.
// Trees: node i > 1 picks its parent uniformly among nodes 1..i-1, labels
// i.i.d. with P(1) = density. Weighted kinds draw weights from [-10, 10].
Input generate_input(InputKind kind, std::size_t n, std::uint64_t seed, double density = 0.5);

// Result of a build: a min/max profile, or per-size maximum sums for the
// weighted kinds.
using BuildResult = std::variant<Profile, CostVector>;

struct BuildParams {
  std::optional<std::size_t> block;
  std::optional<std::size_t> micro;
};

struct Backend {
  std::vector<InputKind> kinds;
  std::function<BuildResult(const Input&, const BuildParams&)> build;
  // Rough peak working-set bytes for an input of size n with parameter p.
  std::function<std::size_t(std::size_t n, std::size_t param)> memory_estimate;

  bool accepts(InputKind kind) const;
};

class BackendRegistry {
 public:
  static BackendRegistry defaults();

  void add(const std::string& name, Backend backend);
  const Backend* find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, Backend, std::less<>> backends_;
};

std::string default_backend(InputKind kind);

void write_result_csv(std::ostream& out, const BuildResult& result);

// Entry point shared by the executable and the tests. args excludes the
// program name. Data goes to out, diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const BackendRegistry& registry = BackendRegistry::defaults());

}  // namespace jpm::cli
