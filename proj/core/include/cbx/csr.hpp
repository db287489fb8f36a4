// Compressed sparse row matrix holding strictly positive APPMI values.

#ifndef CBX_CSR_HPP_
#define CBX_CSR_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace cbx {

struct CsrMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<std::uint64_t> row_ptr;  // rows + 1 offsets into the arrays
  std::vector<std::uint32_t> col_idx;  // ascending within each row
  std::vector<double> values;

  CsrMatrix() : row_ptr(1, 0) {}
  CsrMatrix(std::uint32_t r, std::uint32_t c)
      : rows(r), cols(c), row_ptr(static_cast<std::size_t>(r) + 1, 0) {}

  std::size_t nnz() const { return values.size(); }

  std::span<const std::uint32_t> row_cols(std::uint32_t r) const {
    return {col_idx.data() + row_ptr[r],
            col_idx.data() + row_ptr[static_cast<std::size_t>(r) + 1]};
  }
  std::span<const double> row_values(std::uint32_t r) const {
    return {values.data() + row_ptr[r],
            values.data() + row_ptr[static_cast<std::size_t>(r) + 1]};
  }

  // Stored value at (r, c), 0.0 when absent. Binary search within the row.
  double at(std::uint32_t r, std::uint32_t c) const;

  struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    double value;
  };

  // Builds from unordered triplets; duplicates are not allowed.
  static CsrMatrix from_triplets(std::uint32_t rows, std::uint32_t cols,
                                 std::vector<Triplet> triplets);

  bool operator==(const CsrMatrix&) const = default;
};

}  // namespace cbx

#endif  // CBX_CSR_HPP_
