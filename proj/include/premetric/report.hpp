#pragma once

// Report documents produced by the command-line tool. Every rational is a
// "p/q" string and keys appear in a fixed order, so a report depends only on
// its input and the format version. Wall-clock timing is added only on
// request.

#include <string>

#include "premetric/io.hpp"
#include "premetric/surface.hpp"

namespace premetric::report {

using io::Json;

Json classify(const MediumRecipe& r);

/// Case-1 recipes go through the closed-form inverse, everything else
/// through the exact 6x6 solve. `no_inverse` is set when none exists.
Json invert(const MediumRecipe& r, bool& no_inverse);

/// Throws PreconditionError for ν = 0. `no_wave` is set when only ν itself
/// solves the potential equation.
Json wave(const MediumRecipe& r, const MultiForm& nu, bool& no_wave);

/// Ray samples as JSON; roots and residuals are doubles.
Json surface(const MediumRecipe& r, const std::vector<surface::RaySample>& rays, const Scalar& omega,
             int resolution);

/// Indented "key: value" text; with float_mode each rational also shows a
/// decimal approximation.
std::string render_text(const Json& report, bool float_mode);

/// Structure-constant tables, complement signs, basis orders and the 35
/// polarization points.
std::string conventions_text();

}  // namespace premetric::report
