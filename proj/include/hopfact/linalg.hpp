#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfact/field.hpp"

namespace hopfact {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    bool is_identity() const;
    /// nullopt when singular or not square.
    std::optional<Matrix> inverse() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

/// Solution set of a linear system: base + span(directions), or empty.
///
/// Produced by reduced row echelon form with pivots chosen on the lowest
/// column index. Each direction corresponds to one free coordinate; the base
/// point has all free coordinates zero.
struct AffineFamily {
    Field field;
    std::vector<std::string> coordinates;
    bool empty = false;
    std::vector<FieldElement> base;
    std::vector<std::vector<FieldElement>> directions;
    std::vector<std::size_t> free_coordinates;

    std::size_t dimension() const noexcept { return directions.size(); }
    /// base + sum params[k] * directions[k].
    std::vector<FieldElement> point(std::span<const FieldElement> params) const;
    /// Parameters realising `p`, if p lies in the family.
    std::optional<std::vector<FieldElement>> parameters_of(std::span<const FieldElement> p) const;
    bool contains(std::span<const FieldElement> p) const { return parameters_of(p).has_value(); }
};

/// One row of an affine system: sum coeffs[j] * u_j == rhs.
struct LinearEquation {
    std::vector<FieldElement> coeffs;
    FieldElement rhs;
};

AffineFamily solve_affine(const Field& field, std::vector<std::string> coordinates,
                          const std::vector<LinearEquation>& equations);

}  // namespace hopfact
