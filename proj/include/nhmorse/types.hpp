#pragma once

#include <complex>

namespace nhmorse {

using ComplexScalar = std::complex<double>;

inline constexpr ComplexScalar kI{0.0, 1.0};

enum class Sector { fermionic, bosonic };

enum class ParameterMap { printed, derived };

enum class BoundStateConvention { paper, shifted };

const char* to_string(Sector s);
const char* to_string(ParameterMap m);
const char* to_string(BoundStateConvention c);

}  // namespace nhmorse
