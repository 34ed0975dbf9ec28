#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trophodge/matroid.hpp"
#include "trophodge/polyhedral.hpp"

namespace trophodge::fixtures {

Fan fan_a();    // Bergman fan of U_{2,3}
Fan fan_b();    // complete fan on R^1
Fan fan_c();    // Bergman fan of B_3
Fan fan_u34();  // Bergman fan of U_{3,4}

PolyComplex fix_a();
PolyComplex fix_b();
PolyComplex fix_c();
PolyComplex fix_d();  // vertex 0, two half lines
PolyComplex fix_e();  // vertices 0 and 1
PolyComplex fix_f();  // fix_d x fix_d
// unit square cut along the diagonal, completed by strips and quadrants;
// compactifies to TP^1 x TP^1 with four finite vertices
PolyComplex square();

// (name, complex) in the order fixA .. fixF
std::vector<std::pair<std::string, PolyComplex>> all();
PolyComplex by_name(const std::string& name);

}  // namespace trophodge::fixtures
