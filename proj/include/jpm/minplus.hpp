#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace jpm {

// Tropical costs. Finite values must satisfy |x| <= kFiniteBound so that the
// sum of two finite values stays strictly between the two sentinels and a
// sentinel plus any finite value is still recognisable as a sentinel.
using Cost = std::int64_t;

inline constexpr Cost kInf = Cost{1} << 60;
inline constexpr Cost kNegInf = -kInf;
inline constexpr Cost kFiniteBound = (Cost{1} << 58) - 1;

enum class Semiring { min_plus, max_plus };

// The "no candidate" value of a semiring: kInf under min, kNegInf under max.
constexpr Cost absorbing(Semiring s) noexcept { return s == Semiring::min_plus ? kInf : kNegInf; }

constexpr bool is_absorbing(Semiring s, Cost v) noexcept {
  return s == Semiring::min_plus ? v >= kInf : v <= kNegInf;
}

constexpr Cost better(Semiring s, Cost a, Cost b) noexcept {
  return s == Semiring::min_plus ? (a < b ? a : b) : (a > b ? a : b);
}

// Clamp a raw sum back onto the sentinel when it involved a sentinel operand.
constexpr Cost saturate(Semiring s, Cost v) noexcept {
  if (s == Semiring::min_plus) return v >= kInf / 2 ? kInf : v;
  return v <= kNegInf / 2 ? kNegInf : v;
}

constexpr Cost tropical_mul(Semiring s, Cost a, Cost b) noexcept { return saturate(s, a + b); }

using CostVector = std::vector<Cost>;

// Dense row-major matrix of tropical costs.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, Cost fill);
  CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows);

  // 0 on the diagonal, the semiring's absorbing value elsewhere.
  static CostMatrix identity(std::size_t n, Semiring s);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Cost& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Cost operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Cost> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Cost> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

  bool operator==(const CostMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cost> data_;
};

// Selects the matrix-product kernel used wherever an algorithm reduces work
// to tropical matrix products.
struct ProductKernel {
  enum class Kind { naive, tiled };
  Kind kind = Kind::tiled;
  std::size_t tile = 64;

  static ProductKernel naive() { return {Kind::naive, 1}; }
  static ProductKernel tiled(std::size_t tile) { return {Kind::tiled, tile}; }
};

// All products throw std::invalid_argument when a.cols() != b.rows().
CostMatrix min_plus_product(const CostMatrix& a, const CostMatrix& b);
CostMatrix min_plus_product_tiled(const CostMatrix& a, const CostMatrix& b, std::size_t tile);
CostMatrix max_plus_product(const CostMatrix& a, const CostMatrix& b);
CostMatrix max_plus_product_tiled(const CostMatrix& a, const CostMatrix& b, std::size_t tile);
CostMatrix tropical_product(const CostMatrix& a, const CostMatrix& b, Semiring s,
                            const ProductKernel& kernel = {});

// w[i] = best over k of u[k] + v[i-k], 0-based, |w| = |u| + |v| - 1.
// Empty operands throw std::invalid_argument.
CostVector min_plus_convolution(std::span<const Cost> u, std::span<const Cost> v);
CostVector max_plus_convolution(std::span<const Cost> u, std::span<const Cost> v);
CostVector tropical_convolution(std::span<const Cost> u, std::span<const Cost> v, Semiring s);

// Same results, evaluated as ceil(sqrt(n)) tropical matrix products of
// ceil(sqrt(n))-sized operands through the given kernel.
CostVector min_plus_convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                                        const ProductKernel& kernel = {});
CostVector max_plus_convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                                        const ProductKernel& kernel = {});
CostVector tropical_convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                                        Semiring s, const ProductKernel& kernel = {});

// Picks the direct loop for short operands and the blocked form otherwise.
CostVector tropical_convolution_auto(std::span<const Cost> u, std::span<const Cost> v, Semiring s,
                                     const ProductKernel& kernel = {});

// Operands shorter than this go through the direct loop in tropical_convolution_auto.
inline constexpr std::size_t kBlockedConvolutionThreshold = 48;

}  // namespace jpm
