#pragma once

#include <string>

#include "fibredim/theorems.hpp"

namespace fibredim {

/// JSON fragments with stable field order; integers wider than 64 bits are
/// emitted as decimal strings.
std::string to_json_string(const DimensionValue& v);
std::string to_json_string(const SpecPoint& pt);
std::string to_json_string(const EffectiveSpectrum& spectrum);
std::string to_json_string(const TensorDimReport& report);
std::string to_json_string(const CrossCheckReport& report);
std::string to_json_string(const SeidenbergBounds& bounds);
std::string to_json_string(const FibreRing& fr);

/// Full effspec payload: the spectrum fields plus derived maximal points.
std::string spectrum_report_json(const EffectiveSpectrum& spectrum);

/// Inverse of the documented effspec schema; ignores derived fields.
EffectiveSpectrum parse_effective_spectrum(std::string_view text);

std::string to_json_string(const AltitudeCheck& check, const SpecPoint& pt);

}  // namespace fibredim
