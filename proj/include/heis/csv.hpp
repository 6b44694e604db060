#pragma once

#include "heis/grids.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace heis::csv {

// Text formats, one node per row, 17 significant digits:
//   line   "t,re,im"
//   plane  "x,y,re,im"   (x-major)
//   torus  "u,v,re,im"   preceded by the comment "# m=<int>"
// A header row naming the columns is written and accepted on read; other
// lines starting with '#' are comments.

void write(std::ostream &os, const SampledLine &f);
void write(std::ostream &os, const PlaneField &f);
void write(std::ostream &os, const TorusField &f);

SampledLine read_line(std::istream &is);
PlaneField read_plane(std::istream &is);
TorusField read_torus(std::istream &is);

using AnyField = std::variant<SampledLine, PlaneField, TorusField>;

/// Dispatches on the column count and the "# m=" marker.
AnyField read_any(std::istream &is);

void write_file(const std::string &path, const AnyField &f);
AnyField read_file(const std::string &path);

} // namespace heis::csv
