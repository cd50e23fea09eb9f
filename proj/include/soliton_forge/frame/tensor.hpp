#pragma once

// Dense component arrays of ScalarExpr with every index running over the
// frame dimension. Indices are zero-based internally; reports print them
// one-based to match the frame labels f_1 ... f_n.

#include "soliton_forge/algebra/scalar_expr.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace sforge {

template <std::size_t Rank>
class Tensor {
 public:
  using Index = std::array<std::size_t, Rank>;

  Tensor() = default;
  explicit Tensor(std::size_t dim) : dim_(dim), data_(size_for(dim)) {}

  std::size_t dim() const { return dim_; }

  template <class... I>
    requires(sizeof...(I) == Rank)
  ScalarExpr& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  template <class... I>
    requires(sizeof...(I) == Rank)
  const ScalarExpr& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  ScalarExpr& at(const Index& idx) { return data_[offset(idx)]; }
  const ScalarExpr& at(const Index& idx) const { return data_[offset(idx)]; }

  std::span<const ScalarExpr> components() const { return data_; }

  /// Multi-index of the k-th stored component (row-major).
  Index index_of(std::size_t k) const {
    Index idx{};
    for (std::size_t r = Rank; r-- > 0;) {
      idx[r] = k % dim_;
      k /= dim_;
    }
    return idx;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  Tensor substitute(const Bindings& bindings) const {
    Tensor out = *this;
    for (auto& x : out.data_) x = x.substitute(bindings);
    return out;
  }

  friend Tensor operator-(const Tensor& a, const Tensor& b) {
    Tensor out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static std::size_t size_for(std::size_t dim) {
    std::size_t n = 1;
    for (std::size_t r = 0; r < Rank; ++r) n *= dim;
    return n;
  }

  std::size_t offset(const Index& idx) const {
    std::size_t k = 0;
    for (std::size_t r = 0; r < Rank; ++r) {
      if (idx[r] >= dim_) throw std::out_of_range("tensor index out of range");
      k = k * dim_ + idx[r];
    }
    return k;
  }

  std::size_t dim_ = 0;
  std::vector<ScalarExpr> data_;
};

using Matrix = Tensor<2>;
using Rank3 = Tensor<3>;
using Rank4 = Tensor<4>;

Matrix identity_matrix(std::size_t n);
ScalarExpr determinant(const Matrix& m);
/// Inverse by adjugate / determinant; throws DivisionByZero for singular input.
Matrix inverse(const Matrix& m);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& m, const ScalarExpr& factor);

/// Rank for matrices whose entries are all rational constants, else nullopt.
std::optional<std::size_t> numeric_rank(const Matrix& m);

/// Frame components of a vector field or covector; the tag keeps the two apart.
template <class Tag>
class FrameVector {
 public:
  FrameVector() = default;
  explicit FrameVector(std::size_t n) : components_(n) {}
  explicit FrameVector(std::vector<ScalarExpr> components) : components_(std::move(components)) {}

  static FrameVector basis(std::size_t n, std::size_t i) {
    FrameVector v(n);
    v.components_.at(i) = 1;
    return v;
  }

  std::size_t size() const { return components_.size(); }
  ScalarExpr& operator[](std::size_t i) { return components_[i]; }
  const ScalarExpr& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<ScalarExpr>& components() const { return components_; }

  bool is_zero() const {
    for (const auto& x : components_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  FrameVector scaled(const ScalarExpr& factor) const {
    FrameVector out = *this;
    for (auto& x : out.components_) x *= factor;
    return out;
  }

  FrameVector substitute(const Bindings& bindings) const {
    FrameVector out = *this;
    for (auto& x : out.components_) x = x.substitute(bindings);
    return out;
  }

  friend FrameVector operator+(FrameVector a, const FrameVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.components_[i] += b.components_[i];
    return a;
  }
  friend FrameVector operator-(FrameVector a, const FrameVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.components_[i] -= b.components_[i];
    return a;
  }

  friend bool operator==(const FrameVector&, const FrameVector&) = default;

 private:
  std::vector<ScalarExpr> components_;
};

using VectorField = FrameVector<struct VectorFieldTag>;
using CoVector = FrameVector<struct CoVectorTag>;

}  // namespace sforge
