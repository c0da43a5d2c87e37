#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tnear {

/// Dense row-major real matrix. Only used at desk scale.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<double> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

    [[nodiscard]] Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);

[[nodiscard]] double frobenius_norm(const Matrix& a);
[[nodiscard]] double frobenius_norm_squared(const Matrix& a);
[[nodiscard]] double trace(const Matrix& a);

/// Dense symmetric matrix. The constructor replaces its argument by
/// (A + A^T)/2, so symmetry holds exactly afterwards.
class DenseSymmetric {
public:
    explicit DenseSymmetric(const Matrix& a);

    [[nodiscard]] std::size_t order() const noexcept { return entries_.rows(); }
    double operator()(std::size_t i, std::size_t j) const noexcept { return entries_(i, j); }
    [[nodiscard]] const Matrix& matrix() const noexcept { return entries_; }

private:
    Matrix entries_;
};

/// Symmetric and skew-symmetric parts (A + A^T)/2 and (A - A^T)/2.
[[nodiscard]] Matrix symmetric_part(const Matrix& a);
[[nodiscard]] Matrix skew_part(const Matrix& a);

}  // namespace tnear
