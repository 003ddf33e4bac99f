#ifndef REPVAR_MATRIXQ_HPP
#define REPVAR_MATRIXQ_HPP

#include <vector>

#include "repvar/rational.hpp"

namespace repvar {

// Dense exact rational matrix with the little linear algebra the cohomology
// and monodromy computations need.
class MatQ {
public:
    MatQ() = default;
    MatQ(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}

    static MatQ identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ operator*(const MatQ& o) const;
    MatQ operator*(const Rat& k) const;
    bool operator==(const MatQ& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    std::size_t rank() const;
    // Basis of the right kernel, in reduced echelon shape (deterministic).
    std::vector<std::vector<Rat>> kernel() const;
    MatQ transpose() const;

    // Append another matrix's columns (same row count).
    MatQ augment_columns(const MatQ& o) const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

// Exact eigenvalues of a 2x2 rational matrix when the characteristic roots are
// rational; nullopt otherwise.
std::optional<std::pair<Rat, Rat>> eigenvalues_2x2(const MatQ& m);

} // namespace repvar

#endif
