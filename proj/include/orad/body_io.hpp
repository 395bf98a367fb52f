#pragma once

#include "orad/body.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orad {

/// Text body description:
///
///   dim: 3
///   kind: vrep            # vrep | hrep | named
///   vertices:             # one point per row
///     1 0 0
///   halfspaces:           # rows a_1 .. a_n b  meaning <a, x> <= b
///   named: cube axes=1,2 half_width=1 center=0,0,0
///
/// Named constructors: segment a= b=; cube axes= half_width= center=;
/// ball_in_subspace axes= radius= points=; simplex_Kn n=; slab_body segment_axis= cube_axes=.
struct BodyFile {
  int dim = 0;
  std::string kind;
  Mat vertices;  // rows are points, as written in the file
  Mat halfspaces;  // rows a_1 .. a_n b
  std::string named;
};

BodyFile parse_body_file(std::string_view text);
std::string format_body_file(const BodyFile& file);
ConvexBody to_body(const BodyFile& file);
BodyFile body_file_from(const ConvexBody& body);

ConvexBody load_body(const std::string& path);
void save_body(const ConvexBody& body, const std::string& path);

/// Strict decimal parsing shared by the file formats.
double parse_number(std::string_view token);
std::vector<double> parse_number_list(std::string_view text, char sep = ',');
std::vector<int> parse_int_list(std::string_view text, char sep = ',');

}  // namespace orad
