#pragma once

#include <iosfwd>
#include <string>

#include "monocone/cone.hpp"

namespace monocone {

// cdd-style polyhedral text. Cone rows carry a leading 0 ("b = 0"); the
// "linearity" line lists (1-based) the rows that are equalities or lineality
// generators. Numbers are exact "p/q" tokens. A "* systems n=K" comment
// records the subset coordinates.
void write_cdd(std::ostream& out, const HRep& h);
void write_cdd(std::ostream& out, const VRep& v);

std::string to_cdd(const HRep& h);
std::string to_cdd(const VRep& v);

// Throws ParseError for malformed input, non-cone rows (b != 0) or vertices
// other than the origin.
HRep read_cdd_hrep(std::istream& in);
VRep read_cdd_vrep(std::istream& in);

HRep read_cdd_hrep_file(const std::string& path);
VRep read_cdd_vrep_file(const std::string& path);

}  // namespace monocone
