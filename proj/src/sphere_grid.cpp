#include "spherehog/sphere_grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <set>
#include <unordered_map>

#include "spherehog/errors.hpp"
#include "spherehog/sphere_fun.hpp"

namespace spherehog {

namespace {

// Bit key with -0.0 canonicalized to +0.0, so exact negation pairs match.
std::array<std::uint64_t, 3> bit_key(const Vec3& v) {
  std::array<std::uint64_t, 3> key;
  for (int i = 0; i < 3; ++i) {
    const double x = (v[i] == 0.0) ? 0.0 : v[i];
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof(bits));
    key[i] = bits;
  }
  return key;
}

std::vector<int> antipode_by_bits(const std::vector<Vec3>& dirs) {
  std::map<std::array<std::uint64_t, 3>, int> index;
  for (size_t i = 0; i < dirs.size(); ++i) index[bit_key(dirs[i])] = static_cast<int>(i);
  std::vector<int> antipode(dirs.size(), -1);
  for (size_t i = 0; i < dirs.size(); ++i) {
    const auto it = index.find(bit_key(Vec3(-dirs[i])));
    if (it == index.end()) throw invalid_input("grid is not antipodally closed");
    antipode[i] = it->second;
  }
  return antipode;
}

std::vector<std::pair<int, int>> edges_from_faces(const std::vector<std::array<int, 3>>& faces) {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces)
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      edges.insert({a, b});
    }
  return {edges.begin(), edges.end()};
}

}  // namespace

double grid_angular_resolution(const SphereGrid& grid) {
  if (grid.adjacency.empty()) return 0.0;
  std::vector<double> angles;
  angles.reserve(grid.adjacency.size());
  for (const auto& [a, b] : grid.adjacency) {
    const double c = std::clamp(grid.directions[a].dot(grid.directions[b]), -1.0, 1.0);
    angles.push_back(std::acos(c));
  }
  const size_t mid = angles.size() / 2;
  std::nth_element(angles.begin(), angles.begin() + mid, angles.end());
  return angles[mid];
}

SphereGrid SphereGrid::icosphere(int level) {
  if (level < 0 || level > 7) throw invalid_input("icosphere: level in [0, 7]");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {
      {-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
      {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v.normalize();
  std::vector<std::array<int, 3>> faces = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};

  for (int step = 0; step < level; ++step) {
    std::unordered_map<std::uint64_t, int> midpoint;
    auto mid = [&](int a, int b) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(a, b)) << 32) | static_cast<std::uint64_t>(std::max(a, b));
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      Vec3 m = verts[a] + verts[b];
      m.normalize();
      verts.push_back(m);
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int a = mid(f[0], f[1]), b = mid(f[1], f[2]), c = mid(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    faces = std::move(next);
  }

  SphereGrid grid;
  grid.directions = std::move(verts);
  grid.adjacency = edges_from_faces(faces);
  grid.weights.assign(grid.directions.size(), kFourPi / grid.directions.size());
  grid.antipode = antipode_by_bits(grid.directions);
  grid.angular_resolution = grid_angular_resolution(grid);
  return grid;
}

SphereGrid SphereGrid::gauss_legendre(int degree_max) {
  if (degree_max < 0) throw invalid_input("gauss_legendre grid: degree_max >= 0");
  const int n_lat = degree_max + 1;
  const int n_lon = 2 * degree_max + 2;  // even, so the grid is antipodally closed
  std::vector<double> gx, gw;
  gauss_legendre_nodes(n_lat, gx, gw);

  SphereGrid grid;
  grid.directions.assign(size_t(n_lat) * n_lon, Vec3::Zero());
  grid.weights.assign(size_t(n_lat) * n_lon, 0.0);
  const double lon_w = kTwoPi / n_lon;
  auto at = [&](int i, int j) { return i * n_lon + j; };

  // Fill the lower hemisphere (and half of an x = 0 middle ring), then define
  // each antipodal partner as the exact negation so closure is bit-for-bit.
  for (int i = 0; i < n_lat; ++i) {
    const bool mirrored_row = (i > n_lat - 1 - i);
    const bool middle_row = (i == n_lat - 1 - i);
    const double z = gx[i];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int j = 0; j < n_lon; ++j) {
      grid.weights[at(i, j)] = gw[i] * lon_w;
      if (mirrored_row || (middle_row && j >= n_lon / 2)) continue;
      const double phi = lon_w * j;
      grid.directions[at(i, j)] = Vec3(s * std::cos(phi), s * std::sin(phi), z);
      const int ai = n_lat - 1 - i;
      const int aj = (j + n_lon / 2) % n_lon;
      grid.directions[at(ai, aj)] = -grid.directions[at(i, j)];
    }
  }

  for (int i = 0; i < n_lat; ++i)
    for (int j = 0; j < n_lon; ++j) {
      grid.adjacency.emplace_back(at(i, j), at(i, (j + 1) % n_lon));
      if (i + 1 < n_lat) grid.adjacency.emplace_back(at(i, j), at(i + 1, j));
    }

  grid.antipode = antipode_by_bits(grid.directions);
  grid.angular_resolution = grid_angular_resolution(grid);
  return grid;
}

std::vector<int> build_antipode_map(const SphereGrid& grid, double tol) {
  std::map<std::array<std::uint64_t, 3>, int> index;
  for (int i = 0; i < grid.size(); ++i) index[bit_key(grid.directions[i])] = i;
  std::vector<int> antipode(grid.size(), -1);
  for (int i = 0; i < grid.size(); ++i) {
    const Vec3 neg = -grid.directions[i];
    const auto it = index.find(bit_key(neg));
    if (it != index.end()) {
      antipode[i] = it->second;
      continue;
    }
    double best = tol;
    for (int j = 0; j < grid.size(); ++j) {
      const double d = (grid.directions[j] - neg).norm();
      if (d < best) {
        best = d;
        antipode[i] = j;
      }
    }
    if (antipode[i] < 0) throw invalid_input("build_antipode_map: direction without antipode");
  }
  return antipode;
}

}  // namespace spherehog
