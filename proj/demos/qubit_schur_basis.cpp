// Prints the three-qubit Schur basis as kets.
#include <cmath>
#include <cstdio>

#include "schurkit/schurkit.hpp"

int main() {
  using namespace schurkit;
  const int n = 3, d = 2;
  const auto schur = schur_unitary(n, d);
  for (std::size_t r = 0; r < schur.index.dimension(); ++r) {
    const auto label = schur.index.label(r);
    std::printf("lambda=(%s) q=%s p=[%s]:", label.lambda.to_string().c_str(), label.q.to_string().c_str(),
                label.p.to_string().c_str());
    for (Eigen::Index c = 0; c < schur.matrix.cols(); ++c) {
      const double v = schur.matrix(static_cast<Eigen::Index>(r), c).real();
      if (std::abs(v) < 1e-12) continue;
      // Digits printed 0/1 as in the usual qubit notation.
      std::printf(" %+.6f|%d%d%d>", v, static_cast<int>(c >> 2) & 1, static_cast<int>(c >> 1) & 1,
                  static_cast<int>(c) & 1);
    }
    std::printf("\n");
  }
}
