#include "jpm/bitvec.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace jpm {

namespace {
constexpr std::size_t kWordBits = 64;
}

RankBitvector::RankBitvector() : words_(1, 0), directory_(2, 0) {}

RankBitvector::RankBitvector(std::span<const std::uint8_t> bits) : size_(bits.size()) {
  if (bits.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("RankBitvector: too many bits");
  }
  // One trailing word so rank1(size()) never reads past the end.
  const std::size_t word_count = bits.size() / kWordBits + 1;
  words_.assign(word_count, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw std::invalid_argument("RankBitvector: bit " + std::to_string(i) + " is not 0/1");
    }
    words_[i / kWordBits] |= std::uint64_t{bits[i]} << (i % kWordBits);
  }
  directory_.assign(word_count + 1, 0);
  for (std::size_t w = 0; w < word_count; ++w) {
    directory_[w + 1] = directory_[w] + static_cast<std::uint32_t>(std::popcount(words_[w]));
  }
}

std::size_t RankBitvector::rank1(std::size_t i) const {
  if (i > size_) {
    throw std::out_of_range("rank1: index " + std::to_string(i) + " exceeds length " +
                            std::to_string(size_));
  }
  const std::size_t word = i / kWordBits;
  const std::size_t offset = i % kWordBits;
  const std::uint64_t mask = offset == 0 ? 0 : (~std::uint64_t{0} >> (kWordBits - offset));
  return directory_[word] + static_cast<std::size_t>(std::popcount(words_[word] & mask));
}

bool RankBitvector::operator[](std::size_t i) const {
  if (i >= size_) throw std::out_of_range("RankBitvector: index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

RankBitvector build_rank(std::span<const std::uint8_t> bits) { return RankBitvector(bits); }

}  // namespace jpm
