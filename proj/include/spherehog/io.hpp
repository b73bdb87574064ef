#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spherehog/circle_fun.hpp"
#include "spherehog/congruence.hpp"
#include "spherehog/funk.hpp"
#include "spherehog/hedgehog.hpp"
#include "spherehog/reconstruction.hpp"
#include "spherehog/rotation_field.hpp"
#include "spherehog/sphere_fun.hpp"

namespace spherehog {

// SphereFun JSON: { "degree_max": L, "coeffs": [c_00, c_1-1, c_10, c_11, ...] }
// in (l, m) row order, m from -l to l within each l.
nlohmann::json to_json(const SphereFun& f);
SphereFun sphere_fun_from_json(const nlohmann::json& j);

// CircleFun JSON: frame vectors plus interleaved (re, im) coefficients, k
// from -K to K.
nlohmann::json to_json(const CircleFun& h);
CircleFun circle_fun_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CongruenceSolution& s);
nlohmann::json to_json(const std::vector<CongruenceSolution>& sols);
std::vector<CongruenceSolution> congruence_solutions_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SymmetryReport& r);
SymmetryReport symmetry_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ReconstructionResult& r);
ReconstructionResult reconstruction_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EvenEqualityReport& r);
nlohmann::json to_json(const RegularityReport& r);

// CSV with header xi_x,xi_y,xi_z,angle,valid,residual,multiplicity; invalid
// directions write nan in the angle column.
void write_field_csv(std::ostream& os, const RotationField& field);
void write_field_csv(const std::string& path, const RotationField& field);

// Wavefront OBJ (v/f records, 1-based indices).
void write_obj(std::ostream& os, const TriangleMesh& mesh);
void write_obj(const std::string& path, const TriangleMesh& mesh);

// Projection curve CSV: theta, x, y of the planar envelope of a circle
// support function, in frame coordinates.
void write_projection_csv(std::ostream& os, const CircleFun& h, int samples);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

SphereFun load_sphere_fun(const std::string& path);
void save_sphere_fun(const std::string& path, const SphereFun& f);
CircleFun load_circle_fun(const std::string& path);
void save_circle_fun(const std::string& path, const CircleFun& h);

}  // namespace spherehog
