#include "dixkit/matrix.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace dixkit {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) {
        throw InvalidArgument(fmt::format("matrix data has {} entries, expected {}x{}", data_.size(), rows, cols));
    }
}

Matrix gather_rows(const Matrix &m, std::span<const std::size_t> indices) {
    Matrix out(indices.size(), m.cols());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto src = m.row(indices[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

}  // namespace dixkit
