// Weak Schur sampling: the distribution of lambda when rho^{(x) n} is fed
// through the Schur transform, for a diagonal qubit state rho. lambda / n
// concentrates near the spectrum of rho as n grows.
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>

#include "schurkit/schurkit.hpp"

int main(int argc, char** argv) {
  using namespace schurkit;
  const int n = argc > 1 ? std::atoi(argv[1]) : 6;
  const int d = 2;
  const double flip = 0.2;  // probability of the second eigenvector
  const int samples = 200;

  std::mt19937_64 rng(7);
  std::bernoulli_distribution noisy(flip);
  std::map<Partition, double> weight;
  for (int s = 0; s < samples; ++s) {
    // |psi_1> ... |psi_n> with each factor |0> or |1> drawn from rho's spectrum.
    std::size_t x = 0;
    for (int k = 0; k < n; ++k) x = x * d + (noisy(rng) ? 1u : 0u);
    CVector state = CVector::Zero(static_cast<Eigen::Index>(checked_power(d, n)));
    state(static_cast<Eigen::Index>(x)) = 1.0;
    for (const auto& [label, amplitude] : schur_apply_labelled(state, n, d)) {
      weight[label.lambda] += std::norm(amplitude) / samples;
    }
  }
  std::printf("n = %d, spectrum (%.2f, %.2f)\n", n, 1 - flip, flip);
  for (const auto& [lambda, p] : weight) {
    std::printf("  lambda = (%s)  lambda/n = (%.3f, %.3f)  prob = %.4f\n", lambda.to_string().c_str(),
                lambda[0] / double(n), lambda[1] / double(n), p);
  }
}
