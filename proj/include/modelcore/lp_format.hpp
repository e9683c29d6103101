#pragma once

#include <ostream>
#include <string>

#include "modelcore/reference_backend.hpp"

namespace modelcore {

// Writes `backend` in CPLEX-style LP format. Output depends only on the
// backend state, so equal states give byte-equal text.
//
// Layout: objective (quadratic part as "[ ... ] / 2" with doubled
// coefficients), "Subject To" with linear rows then quadratic rows in dense
// order, "Bounds" (default [0, +inf) omitted, "free" for (-inf, +inf)),
// then "General", "Binary" and "SOS" sections when non-empty, and "End".
// Unnamed columns are written as x<column>, unnamed rows as c<row>, q<row>
// and s<row>. A row without terms is written as "0 <first column>". Numbers
// use the shortest decimal that round-trips.
void write_lp(const ReferenceBackend& backend, std::ostream& out);

// Shortest round-tripping decimal for a finite double.
std::string format_number(double value);

}  // namespace modelcore
