#include "ooc/matrix_code.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ooc {

namespace {

// column-major order: by column, then by row
bool cell_less(const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
}

std::vector<std::pair<int, int>> shifted_key(const std::vector<Cell>& cells, int cols, int p) {
    std::vector<std::pair<int, int>> key;
    key.reserve(cells.size());
    for (const Cell& c : cells) key.emplace_back((c.col + p) % cols, c.row);
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

MatrixCode MatrixCode::from_cells(int rows, int cols, std::vector<Cell> cells) {
    if (rows < 1 || cols < 1)
        throw parameter_error("rows and cols must be >= 1, got " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    if (cells.empty()) throw malformed_code_error("code has no weighted bits");
    for (const Cell& c : cells) {
        if (c.row < 0 || c.row >= rows || c.col < 0 || c.col >= cols)
            throw malformed_code_error("cell (" + std::to_string(c.row + 1) + "'" +
                                       std::to_string(c.col) + ") outside " +
                                       std::to_string(rows) + "x" + std::to_string(cols));
    }
    std::sort(cells.begin(), cells.end(), cell_less);
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw malformed_code_error("duplicate weighted position");

    MatrixCode code;
    code.params_ = {rows, cols, static_cast<int>(cells.size())};
    code.grid_.assign(static_cast<std::size_t>(rows) * cols, 0);
    for (const Cell& c : cells)
        code.grid_[static_cast<std::size_t>(c.row) * cols + c.col] = 1;
    code.dopr_ = dopr_from_cells(cells, cols);
    code.cells_ = std::move(cells);
    return code;
}

MatrixCode MatrixCode::from_grid(int rows, int cols, const std::vector<std::uint8_t>& bits) {
    if (rows < 1 || cols < 1)
        throw parameter_error("rows and cols must be >= 1, got " + std::to_string(rows) + "x" +
                              std::to_string(cols));
    if (bits.size() != static_cast<std::size_t>(rows) * cols)
        throw malformed_code_error("grid has " + std::to_string(bits.size()) + " entries, want " +
                                   std::to_string(rows * cols));
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bits[static_cast<std::size_t>(r) * cols + c]) cells.push_back({r, c});
    return from_cells(rows, cols, std::move(cells));
}

MatrixCode MatrixCode::from_dopr(int rows, int cols, const std::vector<RowGap>& entries) {
    if (entries.empty()) throw malformed_code_error("difference sequence is empty");
    long long sum = 0;
    for (const RowGap& e : entries) {
        if (e.gap < 0) throw malformed_code_error("negative column gap " + std::to_string(e.gap));
        sum += e.gap;
    }
    if (sum != cols)
        throw malformed_code_error("column gap sum " + std::to_string(sum) + " != cols " +
                                   std::to_string(cols));
    std::vector<Cell> cells;
    cells.reserve(entries.size());
    int col = 0;
    for (const RowGap& e : entries) {
        cells.push_back({e.row, col});
        col = (col + e.gap) % cols;
    }
    return from_cells(rows, cols, std::move(cells));
}

std::vector<RowGap> dopr_from_cells(const std::vector<Cell>& cells, int cols) {
    if (cells.empty()) throw malformed_code_error("code has no weighted bits");
    std::vector<Cell> sorted = cells;
    std::sort(sorted.begin(), sorted.end(), cell_less);
    std::vector<RowGap> dopr;
    dopr.reserve(sorted.size());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        dopr.push_back({sorted[i].row, sorted[i + 1].col - sorted[i].col});
    // closing gap back to the first column; always positive, so gaps sum to cols
    dopr.push_back({sorted.back().row, cols - sorted.back().col + sorted.front().col});
    return dopr;
}

MatrixCode MatrixCode::column_shift(int p) const {
    const int cols = params_.cols;
    p = ((p % cols) + cols) % cols;
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const Cell& c : cells_) cells.push_back({c.row, (c.col + p) % cols});
    return from_cells(params_.rows, cols, std::move(cells));
}

MatrixCode MatrixCode::row_shift(int k) const {
    const int rows = params_.rows;
    k = ((k % rows) + rows) % rows;
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const Cell& c : cells_) cells.push_back({(c.row + k) % rows, c.col});
    return from_cells(rows, params_.cols, std::move(cells));
}

CanonicalForm MatrixCode::canonical() const {
    CanonicalForm best{shifted_key(cells_, params_.cols, 0)};
    for (int p = 1; p < params_.cols; ++p) {
        auto key = shifted_key(cells_, params_.cols, p);
        if (key < best.key) best.key = std::move(key);
    }
    return best;
}

MatrixCode lift_to_matrix(const OneDimCode& code, int rows) {
    if (rows < 1) throw parameter_error("rows must be >= 1, got " + std::to_string(rows));
    if (code.length() % rows != 0)
        throw parameter_error("word length " + std::to_string(code.length()) +
                              " not divisible by rows " + std::to_string(rows));
    const int cols = code.length() / rows;
    std::vector<Cell> cells;
    cells.reserve(code.positions().size());
    for (int q : code.positions()) cells.push_back({q % rows, q / rows});
    return MatrixCode::from_cells(rows, cols, std::move(cells));
}

OneDimCode flatten_column_major(const MatrixCode& code) {
    std::vector<int> positions;
    positions.reserve(code.cells().size());
    for (const Cell& c : code.cells()) positions.push_back(c.col * code.rows() + c.row);
    return OneDimCode::from_positions(std::move(positions), code.params().length());
}

namespace {

std::string format_tokens(const char* prefix, const std::vector<std::pair<int, int>>& pairs) {
    std::ostringstream out;
    out << prefix << ':';
    for (const auto& [row, second] : pairs) out << ' ' << (row + 1) << '\'' << second;
    return out.str();
}

int parse_int(std::string_view text, std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw malformed_code_error("bad token '" + std::string(token) + "'");
    return value;
}

}  // namespace

std::string format_wpr(const MatrixCode& code) {
    std::vector<std::pair<int, int>> pairs;
    for (const Cell& c : code.cells()) pairs.emplace_back(c.row, c.col);
    return format_tokens("wpr", pairs);
}

std::string format_dopr(const MatrixCode& code) {
    std::vector<std::pair<int, int>> pairs;
    for (const RowGap& e : code.dopr()) pairs.emplace_back(e.row, e.gap);
    return format_tokens("dopr", pairs);
}

MatrixCode parse_code(std::string_view text, int rows, int cols) {
    std::istringstream in{std::string(text)};
    std::string head;
    if (!(in >> head)) throw malformed_code_error("empty code text");
    bool wpr = false;
    if (head == "wpr:")
        wpr = true;
    else if (head != "dopr:")
        throw malformed_code_error("bad token '" + head + "' (expected 'wpr:' or 'dopr:')");

    std::vector<std::pair<int, int>> pairs;
    std::string token;
    while (in >> token) {
        const auto sep = token.find('\'');
        if (sep == std::string::npos || sep == 0 || sep + 1 == token.size())
            throw malformed_code_error("bad token '" + token + "'");
        const int row = parse_int(std::string_view(token).substr(0, sep), token);
        const int second = parse_int(std::string_view(token).substr(sep + 1), token);
        if (row < 1 || row > rows)
            throw malformed_code_error("bad token '" + token + "': row outside [1, " +
                                       std::to_string(rows) + "]");
        pairs.emplace_back(row - 1, second);
    }
    if (pairs.empty()) throw malformed_code_error("code text lists no positions");

    if (wpr) {
        std::vector<Cell> cells;
        cells.reserve(pairs.size());
        for (const auto& [row, col] : pairs) cells.push_back({row, col});
        return MatrixCode::from_cells(rows, cols, std::move(cells));
    }
    std::vector<RowGap> entries;
    entries.reserve(pairs.size());
    for (const auto& [row, gap] : pairs) entries.push_back({row, gap});
    return MatrixCode::from_dopr(rows, cols, entries);
}

}  // namespace ooc
