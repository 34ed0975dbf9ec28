#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trophodge/lattice.hpp"

namespace trophodge {

// Input polyhedral complex in R^n. A face is conv(vertices) + cone(rays).
struct PolyComplex {
  struct Cell {
    Subset vertices;
    Subset rays;
    bool operator==(const Cell&) const = default;
  };
  std::size_t n = 0;
  std::vector<Vec> vertices;
  std::vector<IVec> rays;
  std::vector<Cell> faces;

  std::size_t cell_dim(std::size_t f) const {
    return faces[f].vertices.size() - 1 + faces[f].rays.size();
  }
  bool cell_leq(std::size_t a, std::size_t b) const;
};

// Adds every missing face (nonempty vertex subset x ray subset).
void close_under_faces(PolyComplex& c);
// Schema, closure and unimodularity checks. Throws Error.
void validate(const PolyComplex& c);

// Simplicial fan; cones are sorted ray-index sets, closed under faces,
// cones[0] is the zero cone.
struct Fan {
  std::size_t n = 0;
  std::vector<IVec> rays;
  std::vector<Subset> cones;

  std::size_t dim() const;
  std::vector<std::size_t> cones_of_dim(std::size_t k) const;
  std::optional<std::size_t> find(const Subset& s) const;
  bool unimodular() const;
};

// Builds a fan from maximal (or any) cones; closes and sorts.
Fan make_fan(std::size_t n, std::vector<IVec> rays, const std::vector<Subset>& cones);
PolyComplex fan_complex(const Fan& f);
// simplicial + proper pairwise intersections; throws not-a-fan
void validate_fan(const Fan& f);

Fan recession_fan(const PolyComplex& c);

// Face of the canonical compactification.
struct Face {
  Subset sed;                // input ray ids at infinity
  std::size_t rep = 0;       // input cell realizing it
  std::size_t dim = 0;
  std::size_t amb = 0;       // rank of the stratum lattice
  std::vector<IVec> points;  // stratum coordinates, sorted
  std::vector<IVec> dirs;    // projected rays not in sed, sorted
  std::vector<IVec> tangent; // oriented basis of N_delta (HNF rows)
  std::vector<IVec> normal_proj;  // N^sed -> N^delta

  bool at_infinity() const { return !sed.empty(); }
  bool bounded() const { return sed.empty() && dirs.empty(); }
};

class FaceComplex {
 public:
  std::size_t n = 0;
  std::vector<IVec> rays;
  std::vector<Face> faces;
  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::vector<std::size_t>> cofacets;
  std::vector<std::string> labels;

  std::size_t size() const { return faces.size(); }
  std::size_t dim() const;
  bool leq(std::size_t a, std::size_t b) const { return le_[a][b]; }
  std::vector<std::size_t> of_dim(std::size_t k) const;
  std::vector<std::size_t> finite_faces() const;
  std::vector<std::size_t> open_faces() const;
  const std::vector<IVec>& stratum(const Subset& sed) const;
  // Q with Q * P_from = P_to, for from a subset of to
  Matrix stratum_map(const Subset& from, const Subset& to) const;

 private:
  friend FaceComplex compactify(const PolyComplex& c);
  std::vector<std::vector<bool>> le_;
  std::map<Subset, std::vector<IVec>> strata_;
};

FaceComplex compactify(const PolyComplex& c);

// u_{delta/gamma}: generator of delta not in gamma, in delta's stratum
// coordinates; -rho for a sedentarity-raising pair
IVec inward_vector(const FaceComplex& x, std::size_t gamma, std::size_t delta);
int sign(const FaceComplex& x, std::size_t gamma, std::size_t delta);
// e_{delta/gamma} in N^gamma (coordinates given by gamma's normal_proj)
IVec primitive_normal(const FaceComplex& x, std::size_t gamma, std::size_t delta);
Vec multivector(const Face& f);  // n_delta as a vector over dim-subsets

struct StarFan {
  Fan fan;
  std::vector<std::size_t> ray_face;   // ray index -> face id
  std::vector<std::size_t> cone_face;  // cone index -> face id
  std::map<std::size_t, std::size_t> face_cone;
};
StarFan star_fan(const FaceComplex& x, std::size_t delta);

}  // namespace trophodge
