#include <utility>

#include "cuspbif/elk_degree.hpp"
#include "cuspbif/errors.hpp"

namespace cuspbif {
namespace {

void swap_symmetric(RationalMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap(m[a], m[b]);
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

Inertia signature(RationalMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::InvalidArgument, "signature needs a square matrix");
    for (std::size_t j = 0; j < i; ++j) {
      if (m[i][j] != m[j][i]) throw Error(ErrorKind::InvalidArgument, "signature needs a symmetric matrix");
    }
  }

  Inertia result;
  std::size_t k = 0;
  while (k < n) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][pivot] == 0) ++pivot;

    if (pivot < n) {
      swap_symmetric(m, k, pivot);
      const Rational d = m[k][k];
      (d > 0 ? result.positives : result.negatives) += 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k] == 0) continue;
        const Rational f = m[i][k] / d;
        for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
      }
      // Keep the trailing block symmetric: column k is now implicitly zero.
      for (std::size_t i = k + 1; i < n; ++i) m[k][i] = m[i][k] = 0;
      ++k;
      continue;
    }

    // All remaining diagonal entries vanish: look for an off-diagonal pair.
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi == n) {
      result.zeros += n - k;
      break;
    }
    swap_symmetric(m, k, pi);
    swap_symmetric(m, k + 1, pj);
    // Block [[0, b], [b, 0]] has one positive and one negative eigenvalue.
    const Rational b = m[k][k + 1];
    result.positives += 1;
    result.negatives += 1;
    for (std::size_t i = k + 2; i < n; ++i) {
      for (std::size_t j = k + 2; j < n; ++j) {
        m[i][j] -= (m[i][k] * m[k + 1][j] + m[i][k + 1] * m[k][j]) / b;
      }
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      m[k][i] = m[i][k] = 0;
      m[k + 1][i] = m[i][k + 1] = 0;
    }
    k += 2;
  }
  return result;
}

}  // namespace cuspbif
