#pragma once

#include <vector>

#include "uniserial/field.hpp"

namespace uniserial {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;  // row major

/// A·x = b over an exact field.
struct LinearSystem {
    Field field;
    unsigned nvars = 0;
    Matrix rows;
    Vector rhs;

    void add_equation(Vector row, FieldElement b);
};

struct LinearSolution {
    bool consistent = false;
    Vector particular;            // free variables set to 0
    std::vector<Vector> nullspace;  // basis of the homogeneous solution space
};

/// Exact Gaussian elimination.
LinearSolution solve_linear(const LinearSystem& sys);

Vector matrix_apply(const Matrix& m, const Vector& v);
Matrix matrix_mul(const Matrix& a, const Matrix& b);
Matrix matrix_add(const Matrix& a, const Matrix& b);
Matrix matrix_scaled(const Matrix& a, const FieldElement& c);
Matrix zero_matrix(const Field& f, unsigned rows, unsigned cols);
Matrix identity_matrix(const Field& f, unsigned n);
bool matrix_is_zero(const Matrix& m);
bool matrix_invertible(const Matrix& m, const Field& f);

}  // namespace uniserial
