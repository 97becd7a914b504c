#pragma once

#include <string>

#include "plethyra/laurent.hpp"
#include "plethyra/series.hpp"
#include "plethyra/symfunc.hpp"

namespace plethyra {

// Compact polynomial text: "1+z^2", "1-2*z", "y*x^-1+2*z^3", "0".
// Term order is the internal graded-lex order, so output is deterministic.
std::string to_text(const LaurentPoly& p);

// "p[2,1]" terms with Laurent coefficients; scalar part printed bare.
std::string to_text(const SymFunc& f);

// "1 + (1+z^2) t + (1+z^2+z^4) t^2"; zero coefficients skipped.
std::string to_text(const TruncatedSeries& s);

}  // namespace plethyra
