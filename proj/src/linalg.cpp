#include "uniserial/linalg.hpp"

namespace uniserial {

void LinearSystem::add_equation(Vector row, FieldElement b) {
    if (row.size() != nvars) throw InternalError("equation arity mismatch");
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

LinearSolution solve_linear(const LinearSystem& sys) {
    const Field& f = sys.field;
    if (sys.rows.size() != sys.rhs.size()) throw InternalError("rhs length mismatch");
    for (const auto& r : sys.rows)
        if (r.size() != sys.nvars) throw InternalError("row length mismatch");

    Matrix a = sys.rows;
    Vector b = sys.rhs;
    const size_t m = a.size();
    const unsigned n = sys.nvars;

    std::vector<int> pivot_col_of_row;
    std::vector<int> pivot_row_of_col(n, -1);
    size_t row = 0;
    for (unsigned col = 0; col < n && row < m; ++col) {
        size_t piv = row;
        while (piv < m && a[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        FieldElement inv = a[row][col].inverse();
        for (unsigned j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            FieldElement factor = a[i][col];
            for (unsigned j = col; j < n; ++j) a[i][j] = a[i][j] - factor * a[row][j];
            b[i] = b[i] - factor * b[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        pivot_row_of_col[col] = static_cast<int>(row);
        ++row;
    }

    LinearSolution sol;
    for (size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) return sol;  // 0 = nonzero
    sol.consistent = true;

    sol.particular.assign(n, f.zero());
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        sol.particular[pivot_col_of_row[r]] = b[r];

    for (unsigned col = 0; col < n; ++col) {
        if (pivot_row_of_col[col] != -1) continue;
        Vector v(n, f.zero());
        v[col] = f.one();
        for (unsigned c = 0; c < n; ++c) {
            int pr = pivot_row_of_col[c];
            if (pr != -1) v[c] = -a[static_cast<size_t>(pr)][col];
        }
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

Vector matrix_apply(const Matrix& m, const Vector& v) {
    Vector r;
    r.reserve(m.size());
    for (const auto& row : m) {
        if (row.size() != v.size()) throw InternalError("matrix/vector size mismatch");
        FieldElement acc = row.empty() ? FieldElement() : row[0] * v[0];
        for (size_t j = 1; j < row.size(); ++j) acc = acc + row[j] * v[j];
        r.push_back(acc);
    }
    return r;
}

Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Matrix r(n, Vector(p));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) throw InternalError("matrix size mismatch");
        for (size_t j = 0; j < p; ++j) {
            FieldElement acc = a[i][0] * b[0][j];
            for (size_t t = 1; t < k; ++t) acc = acc + a[i][t] * b[t][j];
            r[i][j] = acc;
        }
    }
    return r;
}

Matrix matrix_add(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = r[i][j] + b[i][j];
    return r;
}

Matrix matrix_scaled(const Matrix& a, const FieldElement& c) {
    Matrix r = a;
    for (auto& row : r)
        for (auto& x : row) x = x * c;
    return r;
}

Matrix zero_matrix(const Field& f, unsigned rows, unsigned cols) {
    return Matrix(rows, Vector(cols, f.zero()));
}

Matrix identity_matrix(const Field& f, unsigned n) {
    Matrix m = zero_matrix(f, n, n);
    for (unsigned i = 0; i < n; ++i) m[i][i] = f.one();
    return m;
}

bool matrix_is_zero(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

bool matrix_invertible(const Matrix& m, const Field& f) {
    if (m.empty()) return true;
    unsigned n = static_cast<unsigned>(m.size());
    LinearSystem sys{f, n, {}, {}};
    for (const auto& row : m) sys.add_equation(row, f.zero());
    LinearSolution sol = solve_linear(sys);
    return sol.nullspace.empty();
}

}  // namespace uniserial
