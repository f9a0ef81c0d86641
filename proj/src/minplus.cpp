#include "jpm/minplus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jpm {

namespace {

template <Semiring S>
struct Ops {
  static constexpr Cost none = absorbing(S);
  static Cost pick(Cost a, Cost b) noexcept {
    if constexpr (S == Semiring::min_plus) {
      return std::min(a, b);
    } else {
      return std::max(a, b);
    }
  }
};

void check_shapes(const CostMatrix& a, const CostMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("tropical product: inner dimensions differ (" +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + ")");
  }
}

void saturate_all(CostMatrix& c, Semiring s) {
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (Cost& x : c.row(i)) x = saturate(s, x);
  }
}

template <Semiring S>
CostMatrix product_naive(const CostMatrix& a, const CostMatrix& b) {
  check_shapes(a, b);
  CostMatrix c(a.rows(), b.cols(), Ops<S>::none);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Cost best = Ops<S>::none;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        best = Ops<S>::pick(best, a(i, k) + b(k, j));
      }
      c(i, j) = best;
    }
  }
  saturate_all(c, S);
  return c;
}

// i-k-j order inside square tiles; the innermost loop runs over a contiguous
// row of B and C and vectorises.
template <Semiring S>
CostMatrix product_tiled(const CostMatrix& a, const CostMatrix& b, std::size_t tile) {
  check_shapes(a, b);
  if (tile == 0) throw std::invalid_argument("tiled tropical product: tile must be positive");
  const std::size_t rows = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  CostMatrix c(rows, cols, Ops<S>::none);
  for (std::size_t i0 = 0; i0 < rows; i0 += tile) {
    const std::size_t i1 = std::min(rows, i0 + tile);
    for (std::size_t k0 = 0; k0 < inner; k0 += tile) {
      const std::size_t k1 = std::min(inner, k0 + tile);
      for (std::size_t j0 = 0; j0 < cols; j0 += tile) {
        const std::size_t j1 = std::min(cols, j0 + tile);
        for (std::size_t i = i0; i < i1; ++i) {
          Cost* out = c.row(i).data();
          for (std::size_t k = k0; k < k1; ++k) {
            const Cost aik = a(i, k);
            if (is_absorbing(S, aik)) continue;
            const Cost* brow = b.row(k).data();
            for (std::size_t j = j0; j < j1; ++j) {
              out[j] = Ops<S>::pick(out[j], aik + brow[j]);
            }
          }
        }
      }
    }
  }
  saturate_all(c, S);
  return c;
}

void check_operands(std::span<const Cost> u, std::span<const Cost> v) {
  if (u.empty() || v.empty()) throw std::invalid_argument("tropical convolution: empty operand");
}

template <Semiring S>
CostVector convolution_naive(std::span<const Cost> u, std::span<const Cost> v) {
  check_operands(u, v);
  CostVector w(u.size() + v.size() - 1, Ops<S>::none);
  for (std::size_t k = 0; k < u.size(); ++k) {
    const Cost uk = u[k];
    if (is_absorbing(S, uk)) continue;
    Cost* out = w.data() + k;
    for (std::size_t c = 0; c < v.size(); ++c) {
      out[c] = Ops<S>::pick(out[c], uk + v[c]);
    }
  }
  for (Cost& x : w) x = saturate(S, x);
  return w;
}

std::size_t ceil_sqrt(std::size_t n) {
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  while (s > 1 && (s - 1) * (s - 1) >= n) --s;
  return std::max<std::size_t>(s, 1);
}

// Segment length s = ceil(sqrt(max(|u|,|v|))). With k = a*s + alpha and
// i = d*s + t (0 <= alpha, t < s), every split k of position i is the entry
// (a, d - a) of X * Y_t where X[a][alpha] = u[a*s + alpha] and
// Y_t[alpha][c] = v[c*s + t - alpha]. Out-of-range cells hold the sentinel.
template <Semiring S>
CostVector convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                               const ProductKernel& kernel) {
  check_operands(u, v);
  const std::size_t n = std::max(u.size(), v.size());
  const std::size_t s = ceil_sqrt(n);
  const std::size_t p = (u.size() + s - 1) / s;
  const std::size_t q = (v.size() + s - 2) / s + 1;

  CostMatrix x(p, s, Ops<S>::none);
  for (std::size_t k = 0; k < u.size(); ++k) x(k / s, k % s) = u[k];

  CostVector w(u.size() + v.size() - 1, Ops<S>::none);
  CostMatrix y(s, q, Ops<S>::none);
  for (std::size_t t = 0; t < s; ++t) {
    for (std::size_t alpha = 0; alpha < s; ++alpha) {
      for (std::size_t c = 0; c < q; ++c) {
        const std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(c * s + t) -
                                   static_cast<std::ptrdiff_t>(alpha);
        y(alpha, c) = (idx >= 0 && static_cast<std::size_t>(idx) < v.size())
                          ? v[static_cast<std::size_t>(idx)]
                          : Ops<S>::none;
      }
    }
    const CostMatrix prod = tropical_product(x, y, S, kernel);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t c = 0; c < q; ++c) {
        const std::size_t pos = (a + c) * s + t;
        if (pos >= w.size()) break;
        w[pos] = Ops<S>::pick(w[pos], prod(a, c));
      }
    }
  }
  return w;
}

}  // namespace

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols, Cost fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<Cost>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("CostMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

CostMatrix CostMatrix::identity(std::size_t n, Semiring s) {
  CostMatrix m(n, n, absorbing(s));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 0;
  return m;
}

CostMatrix min_plus_product(const CostMatrix& a, const CostMatrix& b) {
  return product_naive<Semiring::min_plus>(a, b);
}

CostMatrix min_plus_product_tiled(const CostMatrix& a, const CostMatrix& b, std::size_t tile) {
  return product_tiled<Semiring::min_plus>(a, b, tile);
}

CostMatrix max_plus_product(const CostMatrix& a, const CostMatrix& b) {
  return product_naive<Semiring::max_plus>(a, b);
}

CostMatrix max_plus_product_tiled(const CostMatrix& a, const CostMatrix& b, std::size_t tile) {
  return product_tiled<Semiring::max_plus>(a, b, tile);
}

CostMatrix tropical_product(const CostMatrix& a, const CostMatrix& b, Semiring s,
                            const ProductKernel& kernel) {
  const bool tiled = kernel.kind == ProductKernel::Kind::tiled;
  if (s == Semiring::min_plus) {
    return tiled ? product_tiled<Semiring::min_plus>(a, b, kernel.tile)
                 : product_naive<Semiring::min_plus>(a, b);
  }
  return tiled ? product_tiled<Semiring::max_plus>(a, b, kernel.tile)
               : product_naive<Semiring::max_plus>(a, b);
}

CostVector min_plus_convolution(std::span<const Cost> u, std::span<const Cost> v) {
  return convolution_naive<Semiring::min_plus>(u, v);
}

CostVector max_plus_convolution(std::span<const Cost> u, std::span<const Cost> v) {
  return convolution_naive<Semiring::max_plus>(u, v);
}

CostVector tropical_convolution(std::span<const Cost> u, std::span<const Cost> v, Semiring s) {
  return s == Semiring::min_plus ? convolution_naive<Semiring::min_plus>(u, v)
                                 : convolution_naive<Semiring::max_plus>(u, v);
}

CostVector min_plus_convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                                        const ProductKernel& kernel) {
  return convolution_blocked<Semiring::min_plus>(u, v, kernel);
}

CostVector max_plus_convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                                        const ProductKernel& kernel) {
  return convolution_blocked<Semiring::max_plus>(u, v, kernel);
}

CostVector tropical_convolution_blocked(std::span<const Cost> u, std::span<const Cost> v,
                                        Semiring s, const ProductKernel& kernel) {
  return s == Semiring::min_plus ? convolution_blocked<Semiring::min_plus>(u, v, kernel)
                                 : convolution_blocked<Semiring::max_plus>(u, v, kernel);
}

CostVector tropical_convolution_auto(std::span<const Cost> u, std::span<const Cost> v, Semiring s,
                                     const ProductKernel& kernel) {
  if (std::min(u.size(), v.size()) < kBlockedConvolutionThreshold) {
    return tropical_convolution(u, v, s);
  }
  return tropical_convolution_blocked(u, v, s, kernel);
}

}  // namespace jpm
