#include "ctx/bool_matrix.hpp"

#include "ctx/error.hpp"

namespace ctx {

BoolMatrix::BoolMatrix(std::initializer_list<std::initializer_list<int>> init)
    : rows_(init.size()), cols_(init.size() == 0 ? 0 : init.begin()->size()) {
  bits_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw Error(ErrorKind::Domain, "ragged matrix literal");
    for (int v : row) bits_.push_back(v != 0);
  }
}

}  // namespace ctx
