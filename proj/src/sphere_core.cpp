#include "spherelevels/sphere_core.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spherelevels/errors.hpp"

namespace spherelevels {

namespace {

constexpr double kUnitTolerance = 1e-9;
// Coordinates below this magnitude are treated as zero when fixing the
// antipode orientation.
constexpr double kSignificant = 1e-12;

double norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

void orient_last_nonzero_positive(std::vector<double>& v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (std::abs(*it) > kSignificant) {
      if (*it < 0) {
        for (double& c : v) c = -c;
      }
      return;
    }
  }
}

}  // namespace

UnitVector UnitVector::normalized(std::vector<double> coords) {
  if (coords.size() < 2) {
    throw PreconditionError("unit vector needs at least 2 coordinates");
  }
  const double len = norm(coords);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw PreconditionError("cannot normalize a zero or non-finite vector");
  }
  for (double& c : coords) c /= len;
  return UnitVector(std::move(coords));
}

UnitVector UnitVector::from_unit(std::vector<double> coords) {
  const double len = norm(coords);
  if (!(std::abs(len - 1.0) <= kUnitTolerance)) {
    throw PreconditionError("vector norm " + std::to_string(len) +
                            " is not 1 within 1e-9");
  }
  // Already unit up to rounding: keep the coordinates so save/load round-trips.
  if (std::abs(len - 1.0) <= 8 * std::numeric_limits<double>::epsilon()) {
    return UnitVector(std::move(coords));
  }
  return normalized(std::move(coords));
}

UnitVector UnitVector::operator-() const {
  std::vector<double> neg(coords_);
  for (double& c : neg) c = -c;
  return UnitVector(std::move(neg));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void sample_unit_vector_into(Rng& rng, std::span<double> out) {
  for (;;) {
    double sq = 0.0;
    for (double& c : out) {
      c = rng.normal();
      sq += c * c;
    }
    const double len = std::sqrt(sq);
    if (len >= 1e-12) {
      for (double& c : out) c /= len;
      return;
    }
  }
}

UnitVector sample_unit_vector(int d, Rng& rng) {
  if (d < 1) throw PreconditionError("sample_unit_vector requires d >= 1");
  std::vector<double> v(static_cast<std::size_t>(d) + 1);
  sample_unit_vector_into(rng, v);
  return UnitVector::normalized(std::move(v));
}

Sign side_of_dot(double inner) {
  if (inner > kEpsOn) return Sign::Positive;
  if (inner < -kEpsOn) return Sign::Negative;
  return Sign::Zero;
}

Sign side(const UnitVector& normal, const UnitVector& point) {
  if (normal.size() != point.size()) {
    throw PreconditionError("side: dimension mismatch");
  }
  return side_of_dot(dot(normal, point));
}

double pair_min_singular_value(const UnitVector& u, const UnitVector& w) {
  // Singular values of [u; w] are sqrt(1 +- |cos t|); the small one is
  // sin t / sqrt(1 + |cos t|), with sin t taken from the rejection of w on u.
  const double c = dot(u, w);
  double rej = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double r = w[i] - c * u[i];
    rej += r * r;
  }
  return std::sqrt(rej) / std::sqrt(1.0 + std::abs(c));
}

void validate_simple(const GreatSphereArrangement& arr) {
  if (arr.dimension < 1) throw DegeneracyError("dimension must be >= 1");
  for (const auto& u : arr.normals) {
    if (u.dimension() != arr.dimension) {
      throw DegeneracyError("normal has wrong dimension");
    }
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    for (std::size_t j = i + 1; j < arr.size(); ++j) {
      if (pair_min_singular_value(arr.normals[i], arr.normals[j]) <= kEpsRank) {
        throw DegeneracyError("normals " + std::to_string(i) + " and " +
                              std::to_string(j) + " are parallel");
      }
    }
  }
}

int separation_count(const UnitVector& x, const UnitVector& y,
                     const GreatSphereArrangement& arr,
                     std::span<const int> exclude) {
  int count = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (std::find(exclude.begin(), exclude.end(), static_cast<int>(i)) !=
        exclude.end()) {
      continue;
    }
    const Sign sx = side(arr.normals[i], x);
    const Sign sy = side(arr.normals[i], y);
    if (sx == Sign::Zero || sy == Sign::Zero) {
      throw OnCircleError("point lies on sphere " + std::to_string(i));
    }
    if (sx != sy) ++count;
  }
  return count;
}

std::pair<UnitVector, UnitVector> vertex_pair(
    std::span<const UnitVector> normals) {
  const std::size_t d = normals.size();
  if (d < 1) throw DegenerateError("vertex_pair needs at least one normal");
  for (const auto& u : normals) {
    if (u.size() != d + 1) {
      throw PreconditionError("vertex_pair needs d normals in dimension d+1");
    }
  }

  std::vector<double> v(d + 1);
  if (d == 2) {
    const auto& a = normals[0];
    const auto& b = normals[1];
    if (pair_min_singular_value(a, b) <= kEpsRank) {
      throw DegenerateError("parallel normals");
    }
    v = {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
         a[0] * b[1] - a[1] * b[0]};
  } else {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d + 1));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c <= d; ++c) m(r, c) = normals[r][c];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= kEpsRank) {
      throw DegenerateError("normals are rank-deficient");
    }
    const auto kernel = svd.matrixV().col(static_cast<Eigen::Index>(d));
    for (std::size_t c = 0; c <= d; ++c) v[c] = kernel(static_cast<Eigen::Index>(c));
  }
  orient_last_nonzero_positive(v);
  auto first = UnitVector::normalized(std::move(v));
  auto second = -first;
  return {std::move(first), std::move(second)};
}

std::array<double, 2> central_project(const UnitVector& p, PlaneSign plane) {
  if (p.size() != 3) throw PreconditionError("central_project expects S^2");
  if (std::abs(p[2]) <= kEpsOn) {
    throw OnEquatorError("point has no image in the projection plane");
  }
  const double target = plane == PlaneSign::Plus ? 1.0 : -1.0;
  const double scale = target / p[2];
  return {p[0] * scale, p[1] * scale};
}

}  // namespace spherelevels
