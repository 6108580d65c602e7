#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polydet/errors.hpp"
#include "polydet/polynomial.hpp"
#include "polydet/rational_function.hpp"

namespace polydet {

template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    // Contiguous k x k block with top-left corner at (r0, c0), 0-based.
    Matrix block(std::size_t r0, std::size_t c0, std::size_t k) const {
        Matrix out(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) out.at(i, j) = at(r0 + i, c0 + j);
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<Polynomial>;
using RatMatrix = Matrix<RationalFunction>;

// Text dump: one row per line, entries joined by " | ".
template <class T>
std::string dump_matrix(const Matrix<T>& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " | ";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

inline PolyMatrix parse_poly_matrix(std::string_view text) {
    std::vector<std::vector<Polynomial>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Polynomial> row;
        std::size_t start = 0;
        while (true) {
            auto sep = line.find(" | ", start);
            std::string cell = sep == std::string::npos ? line.substr(start)
                                                        : line.substr(start, sep - start);
            row.push_back(Polynomial::parse(cell));
            if (sep == std::string::npos) break;
            start = sep + 3;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged matrix rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix");
    PolyMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = std::move(rows[i][j]);
    return m;
}

}  // namespace polydet
