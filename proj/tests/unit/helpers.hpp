#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "trophodge/fixtures.hpp"
#include "trophodge/polyhedral.hpp"
#include "trophodge/steenbrink.hpp"

namespace th {

using namespace trophodge;

inline IVec iv(std::initializer_list<long> xs) {
  IVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

// face of the open part with exactly these projected points and dirs
inline std::size_t open_face(const FaceComplex& x, std::vector<IVec> pts, std::vector<IVec> dirs = {}) {
  std::sort(pts.begin(), pts.end());
  std::sort(dirs.begin(), dirs.end());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.faces[i].sed.empty() && x.faces[i].points == pts && x.faces[i].dirs == dirs) return i;
  throw std::runtime_error("face not found");
}

inline std::size_t count_dim(const FaceComplex& x, std::size_t k) { return x.of_dim(k).size(); }

// page plus the complex it points into
struct Page {
  std::unique_ptr<FaceComplex> x;
  std::unique_ptr<SteenbrinkPage> st;
};

inline Page page(const PolyComplex& c) {
  Page p;
  p.x = std::make_unique<FaceComplex>(compactify(c));
  p.st = std::make_unique<SteenbrinkPage>(*p.x);
  return p;
}

inline Page page(const std::string& name) { return page(fixtures::by_name(name)); }

// every compact fixture with a Steenbrink page
inline std::vector<std::string> page_fixtures() {
  return {"fixA", "fixB", "fixC", "fixD", "fixE", "fixF", "square", "u34"};
}

}  // namespace th
