#pragma once

#include "gha/core/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gha {

// Sparse vector keyed by basis index; zero entries are never stored.
using SVec = std::map<int, Q>;

void axpy(SVec& y, const Q& a, const SVec& x);
SVec scaled(const SVec& x, const Q& a);
SVec add(const SVec& x, const SVec& y);
SVec sub(const SVec& x, const SVec& y);
void add_entry(SVec& y, int key, const Q& value);
Q entry(const SVec& x, int key);

// Row echelon form over Q with leading-index pivots.
class Echelon {
public:
    bool add(SVec v);
    SVec reduce(SVec v) const;
    bool contains(const SVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    void back_substitute();
    std::vector<SVec> basis() const;
    const std::map<int, SVec>& rows() const { return rows_; }

private:
    std::map<int, SVec> rows_;
};

std::vector<SVec> transpose(const std::vector<SVec>& cols, int nrows);

// Kernel of the matrix given by its rows, in reduced echelon form: one
// vector per free column, with 1 at that column and 0 at the other free ones.
std::vector<SVec> nullspace(const std::vector<SVec>& rows, int ncols);

int rank(const std::vector<SVec>& vecs);

// Reduced echelon basis of the span.
std::vector<SVec> span_basis(const std::vector<SVec>& vecs);

// Some x with sum_j x_j * columns[j] = b, or nullopt when b is not in the span.
std::optional<SVec> solve(const std::vector<SVec>& columns, const SVec& b, int nrows);

// Coordinates with respect to a fixed linearly independent family.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    explicit SpanCoordinates(const std::vector<SVec>& basis);  // throws InputError if dependent
    int size() const { return n_; }
    // Coefficients keyed by basis position, or nullopt outside the span.
    std::optional<SVec> coords(const SVec& y) const;

private:
    struct Row {
        SVec vec, combo;
    };
    std::map<int, Row> rows_;
    int n_ = 0;
};

}  // namespace gha
