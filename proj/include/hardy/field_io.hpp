#pragma once

#include <string>

#include "hardy/field.hpp"

namespace hardy {

// Field CSV interchange. Header `x,re,im` (1D) or `x,y,re,im` (2D), rows in
// lexicographic grid order, 17 significant digits so values round-trip
// bit-exactly.
void write_field_csv(const std::string& path, const SampledField& f);
SampledField read_field_csv(const std::string& path);

// Formats a double with 17 significant digits.
std::string format_g17(double v);

// Writes content to path atomically (temp file + rename).
void atomic_write(const std::string& path, const std::string& content);

} // namespace hardy
