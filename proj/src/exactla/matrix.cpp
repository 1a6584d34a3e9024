#include "qred/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qred {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match shape");
    for (auto &x : data_)
        x = field_.canonical(x);
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vec> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        assert(columns[c].size() == rows);
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vec> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        assert(rows[r].size() == cols);
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vec &v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    Matrix b(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
    Matrix b(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            b(r, c) = (*this)(r, idx[c]);
    return b;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix b(field_, idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            b(r, c) = (*this)(idx[r], c);
    return b;
}

Matrix Matrix::hstack(const Matrix &rhs) const {
    if (rows_ != rhs.rows_)
        throw std::invalid_argument("hstack: row count mismatch");
    Matrix m(field_, rows_, cols_ + rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < rhs.cols_; ++c)
            m(r, cols_ + c) = rhs(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix &rhs) const {
    if (cols_ != rhs.cols_)
        throw std::invalid_argument("vstack: column count mismatch");
    Matrix m(field_, rows_ + rhs.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(rhs.data_.begin(), rhs.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar &a = (*this)(r, k);
            if (Field::is_zero(a))
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Scalar &b = rhs(k, c);
                if (!Field::is_zero(b))
                    field_.axpy(m(r, c), a, b);
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return m;
}

Matrix Matrix::scaled(const Scalar &s) const {
    Matrix m = *this;
    for (auto &x : m.data_)
        field_.scale(x, s);
    return m;
}

Vec Matrix::apply(const Vec &v) const {
    assert(v.size() == cols_);
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar &a = (*this)(r, c);
            if (!Field::is_zero(a) && !Field::is_zero(v[c]))
                field_.axpy(out[r], a, v[c]);
        }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto &x : data_)
        if (!Field::is_zero(x))
            return false;
    return true;
}

bool Matrix::operator==(const Matrix &rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? "," : "") << field_.format((*this)(r, c));
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix kron(const Matrix &a, const Matrix &b) {
    const Field &f = a.field();
    Matrix m(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (Field::is_zero(a(i, j)))
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!Field::is_zero(b(k, l)))
                        m(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
        }
    return m;
}

Matrix block_diagonal(Field field, std::span<const Matrix> blocks) {
    std::size_t nr = 0, nc = 0;
    for (const auto &b : blocks) {
        nr += b.rows();
        nc += b.cols();
    }
    Matrix m(field, nr, nc);
    std::size_t r0 = 0, c0 = 0;
    for (const auto &b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                m(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

namespace {

// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix &m, std::size_t col_limit) {
    const Field &f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < col_limit && prow < m.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < m.rows() && Field::is_zero(m(sel, c)))
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != prow)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(sel, k), m(prow, k));
        Scalar inv = f.inv(m(prow, c));
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!Field::is_zero(m(prow, k)))
                f.scale(m(prow, k), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow || Field::is_zero(m(r, c)))
                continue;
            Scalar factor = f.neg(m(r, c));
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!Field::is_zero(m(prow, k)))
                    f.axpy(m(r, k), factor, m(prow, k));
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

} // namespace

RrefResult rref(const Matrix &m) {
    RrefResult out{m, 0, {}};
    out.pivot_cols = eliminate(out.reduced, m.cols());
    out.rank = out.pivot_cols.size();
    return out;
}

std::size_t rank(const Matrix &m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix &m) {
    RrefResult r = rref(m);
    const Field &f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols)
        is_pivot[c] = true;
    Matrix k(f, m.cols(), m.cols() - r.rank);
    std::size_t j = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        k(c, j) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            k(r.pivot_cols[i], j) = f.neg(r.reduced(i, c));
        ++j;
    }
    return k;
}

std::optional<Matrix> solve(const Matrix &m, const Matrix &rhs) {
    if (m.rows() != rhs.rows())
        throw std::invalid_argument("solve: rhs row count differs from matrix row count");
    Matrix aug = m.hstack(rhs);
    std::vector<std::size_t> pivots = eliminate(aug, m.cols());
    const std::size_t rk = pivots.size();
    for (std::size_t r = rk; r < aug.rows(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c)
            if (!Field::is_zero(aug(r, m.cols() + c)))
                return std::nullopt;
    Matrix x(m.field(), m.cols(), rhs.cols());
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t c = 0; c < rhs.cols(); ++c)
            x(pivots[i], c) = aug(i, m.cols() + c);
    return x;
}

Matrix column_basis(const Matrix &m) {
    RrefResult r = rref(m);
    return m.select_columns(r.pivot_cols);
}

bool is_invertible(const Matrix &m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix &m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    auto x = solve(m, Matrix::identity(m.field(), m.rows()));
    if (!x || rank(m) != m.rows())
        throw std::domain_error("matrix is singular");
    return *x;
}

QuotientMap::QuotientMap(Field field, std::size_t n) : field_(field), n_(n) {
    for (std::size_t i = 0; i < n; ++i)
        free_.push_back(i);
}

QuotientMap::QuotientMap(const Matrix &sub) : field_(sub.field()), n_(sub.rows()) {
    RrefResult r = rref(sub.transpose());
    std::vector<bool> is_pivot(n_, false);
    for (std::size_t i = 0; i < r.rank; ++i) {
        rows_.push_back(r.reduced.row(i));
        pivots_.push_back(r.pivot_cols[i]);
        is_pivot[r.pivot_cols[i]] = true;
    }
    for (std::size_t c = 0; c < n_; ++c)
        if (!is_pivot[c])
            free_.push_back(c);
}

void QuotientMap::reduce(Vec &v) const {
    assert(v.size() == n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar &lead = v[pivots_[i]];
        if (Field::is_zero(lead))
            continue;
        Scalar factor = field_.neg(lead);
        for (std::size_t c = pivots_[i]; c < n_; ++c)
            if (!Field::is_zero(rows_[i][c]))
                field_.axpy(v[c], factor, rows_[i][c]);
    }
}

Vec QuotientMap::project(Vec v) const {
    reduce(v);
    Vec q(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i)
        q[i] = v[free_[i]];
    return q;
}

bool QuotientMap::contains(Vec v) const {
    reduce(v);
    for (const auto &x : v)
        if (!Field::is_zero(x))
            return false;
    return true;
}

Matrix QuotientMap::projection_matrix() const {
    Matrix p(field_, free_.size(), n_);
    for (std::size_t c = 0; c < n_; ++c) {
        Vec e(n_);
        e[c] = 1;
        Vec q = project(std::move(e));
        for (std::size_t r = 0; r < q.size(); ++r)
            p(r, c) = q[r];
    }
    return p;
}

Vec QuotientMap::lift(const Vec &q) const {
    Vec v(n_);
    for (std::size_t i = 0; i < free_.size(); ++i)
        v[free_[i]] = q[i];
    return v;
}

void EchelonBasis::reduce(Vec &v) const {
    assert(v.size() == n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (Field::is_zero(v[p]))
            continue;
        Scalar factor = field_.neg(v[p]);
        for (std::size_t c = 0; c < n_; ++c)
            if (!Field::is_zero(rows_[i][c]))
                field_.axpy(v[c], factor, rows_[i][c]);
    }
}

bool EchelonBasis::contains(Vec v) const {
    reduce(v);
    for (const auto &x : v)
        if (!Field::is_zero(x))
            return false;
    return true;
}

bool EchelonBasis::add(Vec v) {
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && Field::is_zero(v[p]))
        ++p;
    if (p == n_)
        return false;
    Scalar inv = field_.inv(v[p]);
    for (auto &x : v)
        if (!Field::is_zero(x))
            field_.scale(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

Matrix EchelonBasis::rows_matrix() const { return Matrix::from_rows(field_, n_, rows_); }

} // namespace qred
