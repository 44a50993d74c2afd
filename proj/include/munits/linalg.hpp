#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "munits/cyclotomic.hpp"
#include "munits/field_ops.hpp"
#include "munits/rational.hpp"

namespace munits {

// Exact linear solver for span-membership questions: echelonizes the basis
// once, then answers "is t a combination of the basis vectors" per target.
// Pivot selection is the first nonzero entry in row order; exact arithmetic
// needs no numerical pivoting.
template <class F>
class SpanSolver {
  public:
    // basis: list of vectors, all of the same length.
    explicit SpanSolver(const std::vector<std::vector<F>>& basis) {
        cols_ = basis.size();
        rows_ = basis.empty() ? 0 : basis.front().size();
        for (const auto& v : basis)
            if (v.size() != rows_) throw std::invalid_argument("basis vectors of unequal length");
        // matrix[r][c] = basis[c][r]
        mat_.assign(rows_, std::vector<F>());
        for (std::size_t r = 0; r < rows_; ++r) {
            mat_[r].reserve(cols_);
            for (std::size_t c = 0; c < cols_; ++c) mat_[r].push_back(basis[c][r]);
        }
        echelonize();
    }

    // Coefficients c with sum_i c[i]*basis[i] = target, or nullopt.
    std::optional<std::vector<F>> solve(std::vector<F> target) const {
        if (target.size() != rows_) throw std::invalid_argument("target length mismatch");
        for (const auto& op : ops_) {
            switch (op.kind) {
                case Op::Swap:
                    std::swap(target[op.a], target[op.b]);
                    break;
                case Op::Scale:
                    target[op.a] = target[op.a] * op.c;
                    break;
                case Op::Axpy:
                    target[op.a] = target[op.a] - op.c * target[op.b];
                    break;
            }
        }
        for (std::size_t r = rank_; r < rows_; ++r)
            if (!detail::fe_is_zero(target[r])) return std::nullopt;
        if (cols_ == 0) return std::vector<F>{};
        std::vector<F> coeff(cols_, zero_);
        for (std::size_t r = 0; r < rank_; ++r) coeff[pivot_col_[r]] = target[r];
        return coeff;
    }

    std::size_t rank() const { return rank_; }

  private:
    struct Op {
        enum Kind { Swap, Scale, Axpy } kind;
        std::size_t a, b;
        F c;
    };

    void echelonize() {
        if (rows_ > 0 && cols_ > 0) {
            // a zero of the right field, for filling coefficient slots
            zero_ = mat_[0][0] - mat_[0][0];
        }
        rank_ = 0;
        for (std::size_t col = 0; col < cols_ && rank_ < rows_; ++col) {
            std::size_t piv = rank_;
            while (piv < rows_ && detail::fe_is_zero(mat_[piv][col])) ++piv;
            if (piv == rows_) continue;
            if (piv != rank_) {
                std::swap(mat_[piv], mat_[rank_]);
                ops_.push_back({Op::Swap, piv, rank_, zero_});
            }
            if (!detail::fe_is_one(mat_[rank_][col])) {
                F inv = detail::fe_inverse(mat_[rank_][col]);
                for (std::size_t c = col; c < cols_; ++c) mat_[rank_][c] = mat_[rank_][c] * inv;
                ops_.push_back({Op::Scale, rank_, 0, inv});
            }
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank_ || detail::fe_is_zero(mat_[r][col])) continue;
                F factor = mat_[r][col];
                for (std::size_t c = col; c < cols_; ++c) mat_[r][c] = mat_[r][c] - factor * mat_[rank_][c];
                ops_.push_back({Op::Axpy, r, rank_, factor});
            }
            pivot_col_.push_back(col);
            ++rank_;
        }
    }

    std::size_t rows_ = 0, cols_ = 0, rank_ = 0;
    std::vector<std::vector<F>> mat_;
    std::vector<std::size_t> pivot_col_;
    std::vector<Op> ops_;
    F zero_{};
};

// Membership of target in the exact linear span of the basis vectors.
// Returns the witness coefficients, or nullopt when outside the span.
template <class F>
std::optional<std::vector<F>> in_span(const std::vector<F>& target, const std::vector<std::vector<F>>& basis) {
    SpanSolver<F> solver(basis);
    return solver.solve(target);
}

}  // namespace munits
