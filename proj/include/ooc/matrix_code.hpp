#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ooc/one_dim.hpp"
#include "ooc/params.hpp"

namespace ooc {

// One weighted bit of a matrix code, 0-based.
struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// One difference-of-positions entry: the row of a weighted bit plus the
// circular column gap to the next weighted bit in column-major order.
struct RowGap {
    int row = 0;
    int gap = 0;

    friend auto operator<=>(const RowGap&, const RowGap&) = default;
};

// Shift-invariant identity of a matrix code: the lexicographically smallest
// (col,row)-sorted cell list over all column shifts. Column 0 of the key
// always holds at least one weighted bit.
struct CanonicalForm {
    std::vector<std::pair<int, int>> key;  // (col, row), sorted ascending

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// An immutable rows x cols binary matrix of constant weight, kept in three
// consistent views: the column-major sorted cell list (weighted positions),
// the row-major grid, and the difference-of-positions sequence. Codes that
// differ only by a column-wise circular shift are the same code; operator==
// compares canonical forms.
class MatrixCode {
public:
    static MatrixCode from_cells(int rows, int cols, std::vector<Cell> cells);
    static MatrixCode from_grid(int rows, int cols, const std::vector<std::uint8_t>& bits);
    // Accumulates column gaps mod cols starting at column 0; the gap sum
    // must equal cols exactly.
    static MatrixCode from_dopr(int rows, int cols, const std::vector<RowGap>& entries);

    const CodeParams& params() const { return params_; }
    int rows() const { return params_.rows; }
    int cols() const { return params_.cols; }
    int weight() const { return params_.weight; }

    // Weighted positions, sorted column-major (columns left to right, rows
    // top to bottom within a column).
    const std::vector<Cell>& cells() const { return cells_; }
    // Row-major bit grid, rows*cols entries.
    const std::vector<std::uint8_t>& grid() const { return grid_; }
    // Difference-of-positions view; gaps sum to cols exactly (the final gap
    // is cols - last column + first column, never the mod-cols zero).
    const std::vector<RowGap>& dopr() const { return dopr_; }

    bool bit(int row, int col) const { return grid_[static_cast<std::size_t>(row) * params_.cols + col] != 0; }

    // Right circular shift by p columns; any integer p is reduced mod cols.
    MatrixCode column_shift(int p) const;
    // Downward circular shift by k rows; generally yields a distinct code.
    MatrixCode row_shift(int k) const;

    CanonicalForm canonical() const;

    // Same code: equal dimensions and equal canonical forms.
    friend bool operator==(const MatrixCode& a, const MatrixCode& b) {
        return a.params_ == b.params_ && a.canonical() == b.canonical();
    }

private:
    MatrixCode() = default;

    CodeParams params_;
    std::vector<Cell> cells_;
    std::vector<std::uint8_t> grid_;
    std::vector<RowGap> dopr_;
};

// Difference-of-positions sequence of a cell list in column-major order.
// Exposed separately so the conversion can be checked against cell lists
// that are not full MatrixCode values.
std::vector<RowGap> dopr_from_cells(const std::vector<Cell>& cells, int cols);

// Maps 1D position q to (row = q mod rows, col = q div rows); the word
// length must be divisible by rows.
MatrixCode lift_to_matrix(const OneDimCode& code, int rows);

// Column-major flattening; inverse of lift_to_matrix.
OneDimCode flatten_column_major(const MatrixCode& code);

// Text form: "wpr: 1'0 3'0 2'1" or "dopr: 1'0 3'1 2'0", rows 1-based.
std::string format_wpr(const MatrixCode& code);
std::string format_dopr(const MatrixCode& code);

// Parses either text form; the prefix selects the view. Raises
// malformed_code_error naming the offending token.
MatrixCode parse_code(std::string_view text, int rows, int cols);

}  // namespace ooc
