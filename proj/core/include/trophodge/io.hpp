#pragma once

#include <string>

#include "trophodge/hodge_cycles.hpp"
#include "trophodge/matroid.hpp"
#include "trophodge/polyhedral.hpp"

namespace trophodge::io {

std::string read_file(const std::string& path);  // throws io-error
void write_file(const std::string& path, const std::string& text);

// {"lattice_rank": n, "vertices": [["p/q", ...]], "rays": [[int]],
//  "faces": [{"vertices": [..], "rays": [..]}]}; validated on load
PolyComplex parse_complex(const std::string& text);
std::string complex_json(const PolyComplex& c);

// fan schema: no vertices, faces list only rays; the origin is implicit
bool is_fan_json(const std::string& text);
Fan parse_fan(const std::string& text);
std::string fan_json(const Fan& f);

// {"type": "uniform"|"boolean"|"graphic"|"bases", ...}
bool is_matroid_json(const std::string& text);
Matroid parse_matroid(const std::string& text);

// {"p": p, "vertices": {"<face-id>": {"<cone-monomial>": "coef"}}}
// monomials are '*'-joined ray face ids; in degree 0 the only key is "1"
HodgeClass parse_class(const SteenbrinkPage& st, const std::string& text);
std::string class_json(const SteenbrinkPage& st, const HodgeClass& a);

std::size_t face_by_label(const FaceComplex& x, const std::string& label);  // throws schema

}  // namespace trophodge::io
