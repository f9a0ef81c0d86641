#include "jpm/profile.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace jpm {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", char " + std::to_string(column) : std::string()) + ": " +
                         what),
      line_(line),
      column_(column) {}

Profile::Profile(std::vector<Cost> min_ones, std::vector<Cost> max_ones)
    : min_ones_(std::move(min_ones)), max_ones_(std::move(max_ones)) {
  if (min_ones_.size() != max_ones_.size()) {
    throw std::invalid_argument("Profile: min and max arrays differ in length");
  }
}

Profile Profile::infeasible(std::size_t n) {
  return Profile(std::vector<Cost>(n, kInf), std::vector<Cost>(n, kNegInf));
}

Cost Profile::min_ones(std::size_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("Profile: size " + std::to_string(i));
  return min_ones_[i - 1];
}

Cost Profile::max_ones(std::size_t i) const {
  if (i < 1 || i > size()) throw std::out_of_range("Profile: size " + std::to_string(i));
  return max_ones_[i - 1];
}

Profile merge_profiles(const Profile& a, const Profile& b) {
  const std::size_t n = std::max(a.size(), b.size());
  Profile out = Profile::infeasible(n);
  for (const Profile* p : {&a, &b}) {
    for (std::size_t i = 1; i <= p->size(); ++i) {
      out.relax_min(i, p->min_ones(i));
      out.relax_max(i, p->max_ones(i));
    }
  }
  return out;
}

std::string describe_violation(const Profile& p) {
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const Cost lo = p.min_ones(i);
    const Cost hi = p.max_ones(i);
    if (lo < 0 || lo > hi || hi > static_cast<Cost>(i)) {
      return "size " + std::to_string(i) + ": need 0 <= min <= max <= size, got min " +
             std::to_string(lo) + " max " + std::to_string(hi);
    }
    if (i > 1) {
      const Cost dlo = lo - p.min_ones(i - 1);
      const Cost dhi = hi - p.max_ones(i - 1);
      if (dlo < 0 || dlo > 1 || dhi < 0 || dhi > 1) {
        return "size " + std::to_string(i) + ": step outside {0,1}";
      }
    }
  }
  return {};
}

void write_profile_csv(std::ostream& out, const Profile& p) {
  out << "size,min_ones,max_ones\n";
  for (std::size_t i = 1; i <= p.size(); ++i) {
    const Cost lo = p.min_ones(i);
    const Cost hi = p.max_ones(i);
    if (is_absorbing(Semiring::min_plus, lo) || is_absorbing(Semiring::max_plus, hi)) {
      throw std::invalid_argument("write_profile_csv: size " + std::to_string(i) +
                                  " has no occurrence");
    }
    out << i << ',' << lo << ',' << hi << '\n';
  }
}

std::string profile_to_csv(const Profile& p) {
  std::ostringstream out;
  write_profile_csv(out, p);
  return out.str();
}

namespace {

Cost parse_field(std::string_view field, std::size_t line, std::size_t column) {
  Cost value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last || value < 0) {
    throw ParseError(line, column, "expected a non-negative decimal integer, got '" +
                                       std::string(field) + "'");
  }
  return value;
}

}  // namespace

Profile read_profile_csv(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::vector<Cost> lo;
  std::vector<Cost> hi;
  bool header_seen = false;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (!header_seen) {
      if (text != "size,min_ones,max_ones") {
        throw ParseError(line_no, 0, "expected header 'size,min_ones,max_ones'");
      }
      header_seen = true;
      continue;
    }
    if (text.empty()) continue;
    std::string_view row(text);
    Cost fields[3];
    std::size_t column = 1;
    for (int f = 0; f < 3; ++f) {
      const std::size_t comma = row.find(',');
      if ((f < 2) != (comma != std::string_view::npos)) {
        throw ParseError(line_no, 0, "expected exactly three comma-separated fields");
      }
      const std::string_view field = row.substr(0, comma);
      fields[f] = parse_field(field, line_no, column);
      column += field.size() + 1;
      row = comma == std::string_view::npos ? std::string_view() : row.substr(comma + 1);
    }
    const auto expected_size = static_cast<Cost>(lo.size() + 1);
    if (fields[0] != expected_size) {
      throw ParseError(line_no, 1, "expected size " + std::to_string(expected_size));
    }
    if (fields[1] > fields[2] || fields[2] > fields[0]) {
      throw ParseError(line_no, 0, "need min_ones <= max_ones <= size");
    }
    lo.push_back(fields[1]);
    hi.push_back(fields[2]);
  }
  if (!header_seen) throw ParseError(1, 0, "empty profile");
  return Profile(std::move(lo), std::move(hi));
}

Profile parse_profile_csv(const std::string& text) {
  std::istringstream in(text);
  return read_profile_csv(in);
}

}  // namespace jpm
