#pragma once

#include "detail/highprec.hpp"
#include "pencilrank/kronecker.hpp"

namespace pencilrank::detail {

/// High-precision value of a finite eigenvalue descriptor.
HPComplex hp_value(const EigenvalueDescriptor& d);

}  // namespace pencilrank::detail
