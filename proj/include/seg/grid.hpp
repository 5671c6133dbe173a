#pragma once

#include <span>
#include <vector>

namespace seg {

/// Row-major 2D grid of real intensities. Houses the observed image y as
/// well as the auxiliary field x and the inner-loop iterates v.
class Image {
 public:
  Image(int width, int height, double fill = 0.0);
  Image(int width, int height, std::vector<double> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int size() const noexcept { return width_ * height_; }

  double operator()(int row, int col) const { return data_[row * width_ + col]; }
  double& operator()(int row, int col) { return data_[row * width_ + col]; }
  double operator[](int n) const { return data_[n]; }
  double& operator[](int n) { return data_[n]; }

  const std::vector<double>& data() const noexcept { return data_; }
  std::vector<double>& data() noexcept { return data_; }

 private:
  int width_;
  int height_;
  std::vector<double> data_;
};

/// Integer class assignment over a grid; labels run 1..num_classes.
class LabelField {
 public:
  LabelField(int width, int height, int num_classes, int fill_label = 1);
  LabelField(int width, int height, int num_classes, std::vector<int> labels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int size() const noexcept { return width_ * height_; }
  int num_classes() const noexcept { return num_classes_; }

  int operator()(int row, int col) const { return labels_[row * width_ + col]; }
  int operator[](int n) const { return labels_[n]; }
  int& operator[](int n) { return labels_[n]; }

  const std::vector<int>& labels() const noexcept { return labels_; }

  bool operator==(const LabelField& other) const = default;

 private:
  int width_;
  int height_;
  int num_classes_;
  std::vector<int> labels_;
};

enum class Connectivity {
  kFourConnected2D,
  // Declared for forward compatibility with volumetric grids; no operation
  // accepts it yet.
  kSixConnected3D,
};

struct NeighborOffset {
  int dy;
  int dx;
};

/// Neighborhood structure V: the displacement set defining which pixels are
/// neighbors. Offsets are symmetric (closed under negation).
class Neighborhood {
 public:
  static Neighborhood four_connected_2d();
  /// Throws std::invalid_argument for kinds without an implementation.
  static Neighborhood of(Connectivity kind);

  Connectivity kind() const noexcept { return kind_; }
  std::span<const NeighborOffset> offsets() const noexcept { return offsets_; }
  int degree() const noexcept { return static_cast<int>(offsets_.size()); }

 private:
  Neighborhood(Connectivity kind, std::vector<NeighborOffset> offsets);

  Connectivity kind_;
  std::vector<NeighborOffset> offsets_;
};

/// First-order forward differences of an image, stored compactly:
/// dh has (width-1) x height entries, dv has width x (height-1).
/// Out-of-range differences are treated as zero by the accessors.
struct GradientField {
  int width = 0;
  int height = 0;
  std::vector<double> dh;
  std::vector<double> dv;

  double dh_at(int row, int col) const {
    return col + 1 < width ? dh[row * (width - 1) + col] : 0.0;
  }
  double dv_at(int row, int col) const {
    return row + 1 < height ? dv[row * width + col] : 0.0;
  }
};

/// Count of agreeing directed neighbor pairs, neighborhoods truncated at the
/// image boundary.
long long hamiltonian(const LabelField& z, const Neighborhood& nb);

/// Count of disagreeing directed neighbor pairs (the complement: together
/// with hamiltonian() it sums to directed_edge_count()).
long long complement_hamiltonian(const LabelField& z, const Neighborhood& nb);

/// Total number of directed neighbor pairs on a width x height grid with
/// boundary truncation; equals twice the undirected edge count.
long long directed_edge_count(int width, int height, const Neighborhood& nb);

GradientField gradient(const Image& x);

/// Number of strictly nonzero forward differences (exact comparison).
long long l0_gradient_norm(const Image& x);

/// Isotropic total variation: sum over pixels of sqrt(dh^2 + dv^2) of that
/// pixel's own forward differences, missing differences taken as zero.
double tv_isotropic(const Image& x);

}  // namespace seg
