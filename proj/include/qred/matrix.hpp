#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qred/field.hpp"

namespace qred {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over a Field. Entries are always canonical for the
/// field (lowest terms over Q, residues in [0, p) over F_p).
class Matrix {
public:
    Matrix() = default;
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_columns(Field field, std::size_t rows, std::span<const Vec> columns);
    static Matrix from_rows(Field field, std::size_t cols, std::span<const Vec> rows);

    const Field &field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    Vec row(std::size_t r) const;
    void set_column(std::size_t c, const Vec &v);

    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix select_columns(std::span<const std::size_t> idx) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix hstack(const Matrix &rhs) const;
    Matrix vstack(const Matrix &rhs) const;

    Matrix operator*(const Matrix &rhs) const;
    Matrix operator+(const Matrix &rhs) const;
    Matrix operator-(const Matrix &rhs) const;
    Matrix scaled(const Scalar &s) const;
    Vec apply(const Vec &v) const;

    bool is_zero() const;
    bool operator==(const Matrix &rhs) const;

    std::string to_string() const;

private:
    Field field_ = Field::rational();
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Kronecker product a (x) b.
Matrix kron(const Matrix &a, const Matrix &b);
/// Block diagonal matrix.
Matrix block_diagonal(Field field, std::span<const Matrix> blocks);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Matrix &m);
std::size_t rank(const Matrix &m);

/// Columns span the right null space, one column per free variable:
/// a 1 at the free column and minus the reduced pivot entries elsewhere.
Matrix kernel_basis(const Matrix &m);

/// Some x with m * x = rhs (free variables set to zero), or nullopt.
std::optional<Matrix> solve(const Matrix &m, const Matrix &rhs);

/// A maximal independent subset of the columns of m, in order.
Matrix column_basis(const Matrix &m);

bool is_invertible(const Matrix &m);
Matrix inverse(const Matrix &m);

/// Projection of k^n onto k^n / U for a subspace U. Quotient coordinates are
/// the standard coordinates outside the pivot positions of rref(U^T).
class QuotientMap {
public:
    QuotientMap() = default;
    /// `sub` holds the spanning vectors of U as columns (n rows).
    QuotientMap(const Matrix &sub);
    QuotientMap(Field field, std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    std::size_t sub_dim() const { return pivots_.size(); }
    std::size_t quotient_dim() const { return free_.size(); }
    const std::vector<std::size_t> &free_coords() const { return free_; }

    /// Reduce v modulo U in place (pivot coordinates become zero).
    void reduce(Vec &v) const;
    Vec project(Vec v) const;
    bool contains(Vec v) const;
    /// Matrix of the projection k^n -> k^{quotient_dim}.
    Matrix projection_matrix() const;
    /// Section: quotient coordinates back to standard vectors.
    Vec lift(const Vec &q) const;

private:
    Field field_ = Field::rational();
    std::size_t n_ = 0;
    std::vector<Vec> rows_;              // rref rows of U
    std::vector<std::size_t> pivots_;    // pivot column per row
    std::vector<std::size_t> free_;      // complement coordinates
};

/// Incrementally grown subspace of k^n in echelon form.
class EchelonBasis {
public:
    EchelonBasis(Field field, std::size_t n) : field_(field), n_(n) {}

    /// Adds v; returns false if v was already in the span.
    bool add(Vec v);
    bool contains(Vec v) const;
    /// Reduces v against the stored rows (zero iff v lies in the span).
    void reduce(Vec &v) const;
    std::size_t size() const { return rows_.size(); }
    std::size_t ambient_dim() const { return n_; }
    /// The stored vectors as rows, in insertion order.
    Matrix rows_matrix() const;

private:
    Field field_;
    std::size_t n_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace qred
