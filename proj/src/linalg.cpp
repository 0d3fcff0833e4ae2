#include "hopfact/linalg.hpp"

#include "hopfact/errors.hpp"

namespace hopfact {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidParams("matrix dimension mismatch");
    if (!(a.field_ == b.field_)) throw MixedFields("matrices over different fields");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& v = (*this)(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(field_, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        FieldElement s = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= s;
            inv(col, j) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            FieldElement f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::vector<FieldElement> AffineFamily::point(std::span<const FieldElement> params) const {
    if (empty) throw InvalidParams("empty affine family has no points");
    if (params.size() != directions.size()) throw InvalidParams("wrong number of family parameters");
    std::vector<FieldElement> p = base;
    for (std::size_t k = 0; k < directions.size(); ++k) {
        if (params[k].is_zero()) continue;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (!directions[k][j].is_zero()) p[j] += params[k] * directions[k][j];
    }
    return p;
}

std::optional<std::vector<FieldElement>> AffineFamily::parameters_of(std::span<const FieldElement> p) const {
    if (empty || p.size() != coordinates.size()) return std::nullopt;
    // Directions are unit vectors on their free coordinates and the base is
    // zero there, so the parameters are read off directly.
    std::vector<FieldElement> params;
    params.reserve(free_coordinates.size());
    for (auto c : free_coordinates) params.push_back(p[c]);
    auto candidate = point(params);
    for (std::size_t j = 0; j < p.size(); ++j)
        if (!(candidate[j] == p[j])) return std::nullopt;
    return params;
}

AffineFamily solve_affine(const Field& field, std::vector<std::string> coordinates,
                          const std::vector<LinearEquation>& equations) {
    const std::size_t n = coordinates.size();
    AffineFamily fam;
    fam.field = field;
    fam.coordinates = std::move(coordinates);

    // augmented rows [coeffs | rhs]
    std::vector<std::vector<FieldElement>> rows;
    rows.reserve(equations.size());
    for (const auto& eq : equations) {
        if (eq.coeffs.size() != n) throw InvalidParams("equation has wrong number of coefficients");
        auto row = eq.coeffs;
        row.push_back(eq.rhs);
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        FieldElement s = rows[rank][col].inverse();
        for (auto& v : rows[rank]) v *= s;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (std::size_t j = col; j <= n; ++j)
                if (!rows[rank][j].is_zero()) rows[r][j] -= f * rows[rank][j];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (!rows[r][n].is_zero()) {
            fam.empty = true;
            return fam;
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    fam.base.assign(n, field.zero());
    for (std::size_t r = 0; r < rank; ++r) fam.base[pivot_cols[r]] = rows[r][n];
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<FieldElement> dir(n, field.zero());
        dir[c] = field.one();
        for (std::size_t r = 0; r < rank; ++r) dir[pivot_cols[r]] = -rows[r][c];
        fam.free_coordinates.push_back(c);
        fam.directions.push_back(std::move(dir));
    }
    return fam;
}

}  // namespace hopfact
