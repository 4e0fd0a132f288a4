#pragma once
// Shared helpers for the test binaries: a dense elimination oracle to
// cross-check the Thomas solve, deterministic RNG construction, scoped
// temp directories and stream capture.

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agingflow/fem1d.hpp"

namespace testsupport {

// Gaussian elimination with partial pivoting on the dense form of a
// tridiagonal system. Deliberately unrelated to the production solver.
inline std::vector<double> dense_solve(const agingflow::TridiagonalSystem& sys,
                                       std::vector<double> rhs) {
  const std::size_t n = sys.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = sys.diag[i];
    if (i > 0) a[i][i - 1] = sys.lower[i];
    if (i + 1 < n) a[i][i + 1] = sys.upper[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

// Random strictly diagonally dominant tridiagonal system of size m.
inline agingflow::TridiagonalSystem random_dominant_system(std::mt19937& rng,
                                                           std::size_t m) {
  std::uniform_real_distribution<double> off_dist(-1.0, 1.0);
  std::uniform_real_distribution<double> bump(0.1, 2.0);
  agingflow::TridiagonalSystem sys;
  sys.lower.assign(m, 0.0);
  sys.diag.assign(m, 0.0);
  sys.upper.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (i > 0) sys.lower[i] = off_dist(rng);
    if (i + 1 < m) sys.upper[i] = off_dist(rng);
    sys.diag[i] =
        std::abs(sys.lower[i]) + std::abs(sys.upper[i]) + bump(rng);
    if (off_dist(rng) < 0.0) sys.diag[i] = -sys.diag[i];
  }
  return sys;
}

class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    for (int k = 0;; ++k) {
      auto candidate = base / ("agingflow-test-" + std::to_string(::getpid()) +
                               "-" + std::to_string(k));
      if (std::filesystem::create_directories(candidate)) {
        path_ = candidate;
        break;
      }
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

// Redirects a stream (cout/cerr) into a buffer for the object lifetime.
class CaptureStream {
 public:
  explicit CaptureStream(std::ostream& stream)
      : stream_(stream), old_(stream.rdbuf(buffer_.rdbuf())) {}
  ~CaptureStream() { stream_.rdbuf(old_); }
  CaptureStream(const CaptureStream&) = delete;
  CaptureStream& operator=(const CaptureStream&) = delete;

  std::string text() const { return buffer_.str(); }

 private:
  std::ostream& stream_;
  std::ostringstream buffer_;
  std::streambuf* old_;
};

} // namespace testsupport
