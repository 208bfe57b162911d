#pragma once

#include "gwb/finite_field.hpp"

#include <optional>
#include <vector>

namespace gwb::linalg {

// Dense matrices over a FiniteField, entries as field codes.
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const FiniteField& f, Mat& m);
int rank(const FiniteField& f, Mat m);
/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
Mat nullspace(const FiniteField& f, Mat m, std::size_t cols);
/// Some x with a x = b, if any.
std::optional<Vec> solve(const FiniteField& f, const Mat& a, const Vec& b);
Mat multiply(const FiniteField& f, const Mat& a, const Mat& b);
Vec apply(const FiniteField& f, const Mat& a, const Vec& v);
Mat identity(std::size_t n);
std::optional<Mat> inverse(const FiniteField& f, const Mat& a);

}  // namespace gwb::linalg
