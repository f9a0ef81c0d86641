#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jpm/minplus.hpp"

namespace jpm {

// Malformed textual input. line/column are 1-based; column 0 means the
// whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// For every size i in 1..n, the minimum and maximum number of 1s over all
// substrings (or connected subgraphs) of size i. Sizes without any
// occurrence hold kInf / kNegInf.
class Profile {
 public:
  Profile() = default;
  Profile(std::vector<Cost> min_ones, std::vector<Cost> max_ones);

  // Every size infeasible; the neutral element of merge_profiles.
  static Profile infeasible(std::size_t n);

  std::size_t size() const noexcept { return min_ones_.size(); }

  // 1-based accessors; throw std::out_of_range outside 1..size().
  Cost min_ones(std::size_t i) const;
  Cost max_ones(std::size_t i) const;

  // Entry k describes size k + 1.
  std::span<const Cost> min_values() const noexcept { return min_ones_; }
  std::span<const Cost> max_values() const noexcept { return max_ones_; }

  void relax_min(std::size_t i, Cost ones) noexcept {
    if (ones < min_ones_[i - 1]) min_ones_[i - 1] = ones;
  }
  void relax_max(std::size_t i, Cost ones) noexcept {
    if (ones > max_ones_[i - 1]) max_ones_[i - 1] = ones;
  }

  bool operator==(const Profile&) const = default;

 private:
  std::vector<Cost> min_ones_;
  std::vector<Cost> max_ones_;
};

// True iff 1 <= i <= n and min_ones(i) <= j <= max_ones(i). Anything outside
// the domain is answered "no".
inline bool occurs(const Profile& p, std::int64_t i, std::int64_t j) noexcept {
  if (i < 1 || static_cast<std::uint64_t>(i) > p.size()) return false;
  const auto k = static_cast<std::size_t>(i - 1);
  return p.min_values()[k] <= j && j <= p.max_values()[k];
}

// Pointwise min of minima and max of maxima; the shorter operand counts as
// infeasible beyond its end.
Profile merge_profiles(const Profile& a, const Profile& b);

// Empty string when every size is feasible with 0 <= min <= max <= i and both
// arrays step by 0 or 1; otherwise a description of the first violation.
std::string describe_violation(const Profile& p);

// CSV with header "size,min_ones,max_ones" and one row per size 1..n.
// Writing an infeasible entry throws std::invalid_argument.
void write_profile_csv(std::ostream& out, const Profile& p);
std::string profile_to_csv(const Profile& p);
Profile read_profile_csv(std::istream& in);
Profile parse_profile_csv(const std::string& text);

}  // namespace jpm
