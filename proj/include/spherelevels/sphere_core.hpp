#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace spherelevels {

inline constexpr double kEpsOn = 1e-9;    // on-circle detection
inline constexpr double kEpsRank = 1e-9;  // degeneracy of normal sets

/// A point of S^d, also the normal of a great-(d-1)-sphere.
///
/// Construction goes through `normalized` (re-normalizes any nonzero vector)
/// or `from_unit` (accepts coordinates already unit within 1e-9). The stored
/// coordinates always have Euclidean norm 1 up to rounding.
class UnitVector {
 public:
  UnitVector() = default;

  static UnitVector normalized(std::vector<double> coords);
  static UnitVector from_unit(std::vector<double> coords);

  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  std::size_t size() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  UnitVector operator-() const;
  bool operator==(const UnitVector&) const = default;

 private:
  explicit UnitVector(std::vector<double> c) : coords_(std::move(c)) {}
  std::vector<double> coords_;
};

double dot(std::span<const double> a, std::span<const double> b);
inline double dot(const UnitVector& a, const UnitVector& b) {
  return dot(a.coords(), b.coords());
}

enum class Sign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

inline Sign negate(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline int to_int(Sign s) { return static_cast<int>(s); }

struct RandomSeed {
  std::uint64_t value = 0;
};

/// splitmix64 finalizer; derives independent substream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Random state passed explicitly to every sampling routine.
class Rng {
 public:
  explicit Rng(RandomSeed seed) : engine_(mix_seed(seed.value, 0)) {}
  Rng(RandomSeed seed, std::uint64_t stream)
      : engine_(mix_seed(seed.value, stream)) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Uniform point of S^d (normalized Gaussian vector).
UnitVector sample_unit_vector(int d, Rng& rng);

/// Writes a uniform point of S^d into `out` (size d+1); allocation-free
/// variant used by the Monte Carlo kernels.
void sample_unit_vector_into(Rng& rng, std::span<double> out);

Sign side(const UnitVector& normal, const UnitVector& point);
Sign side_of_dot(double inner);

/// Great-(d-1)-spheres on S^d given by their unit normals.
struct GreatSphereArrangement {
  int dimension = 2;
  std::vector<UnitVector> normals;

  std::size_t size() const { return normals.size(); }
};

/// Dimension check and pairwise non-parallel check; throws DegeneracyError.
void validate_simple(const GreatSphereArrangement& arr);

/// Smallest singular value of the 2x(d+1) matrix with rows u, w.
double pair_min_singular_value(const UnitVector& u, const UnitVector& w);

/// Number of non-excluded spheres separating x from y. Throws OnCircleError
/// when x or y lies on a non-excluded sphere.
int separation_count(const UnitVector& x, const UnitVector& y,
                     const GreatSphereArrangement& arr,
                     std::span<const int> exclude = {});

/// The two antipodal intersection points of d great-(d-1)-spheres on S^d.
/// The first point has its last nonzero coordinate positive.
std::pair<UnitVector, UnitVector> vertex_pair(std::span<const UnitVector> normals);

enum class PlaneSign { Plus, Minus };

/// Central projection of p in S^2 onto the plane z = +1 or z = -1.
std::array<double, 2> central_project(const UnitVector& p, PlaneSign plane);

}  // namespace spherelevels
