#pragma once

#include "gnl/grading.hpp"
#include "gnl/liealg.hpp"
#include "oracles.hpp"

namespace testgen {

struct GradedAlgebra {
  gnl::StructureConstants algebra;
  gnl::Grading grading;
};

/// Random graded algebra: random nonzero degrees in Z_+^d (entries <= max_entry),
/// then brackets [b_i, b_j] = c b_k between "low" vectors landing on "top"
/// vectors of matching degree. Tops never bracket, so Jacobi holds.
inline GradedAlgebra random_graded(std::size_t dim, std::size_t d, long max_entry) {
  std::vector<gnl::ExpVec> degrees(dim, gnl::ExpVec(d));
  std::vector<bool> top(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    do {
      for (auto& v : degrees[i]) v = static_cast<std::uint64_t>(oracle::uniform(0, max_entry));
    } while (gnl::is_zero_vec(degrees[i]));
    top[i] = oracle::uniform(0, 2) == 0;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("v" + std::to_string(i));
  gnl::StructureConstants L(labels);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (top[i] || top[j]) continue;
      gnl::SparseVec val;
      for (std::size_t k = 0; k < dim; ++k) {
        if (!top[k]) continue;
        bool match = true;
        for (std::size_t t = 0; t < d; ++t) match = match && degrees[k][t] == degrees[i][t] + degrees[j][t];
        if (match && oracle::uniform(0, 1) == 1) val[k] = gnl::Rational(oracle::uniform(1, 3));
      }
      if (!val.empty()) L.set_bracket(i, j, val);
    }
  }
  return {std::move(L), gnl::Grading(d, std::move(degrees))};
}

}  // namespace testgen
