#pragma once

#include <string>

#include <json.hpp>

#include "pmfa/generators.hpp"
#include "pmfa/types.hpp"
#include "pmfa/wavelet.hpp"

namespace pmfa::io {

using nlohmann::json;

/// Write-then-rename; partial files never appear under the final name.
void atomic_write(const std::string& path, const std::string& bytes);

/// Shortest round-trip decimal for a double (deterministic output).
std::string format_double(double v);

/// JSON value for a double: the number when finite, else the sentinel
/// strings "inf", "-inf", "nan".
json number_or_sentinel(double v);
double number_from(const json& v);

/// Raw little-endian float64 samples plus a JSON sidecar.
void write_signal(const std::string& stem, const Array& signal, const json& meta);
Array read_signal_f64(const std::string& path);
/// One value per line.
Array read_signal_csv(const std::string& path);

/// Coefficient field container: one JSON header line, then the approx block
/// and the per-scale detail blocks as raw little-endian float64.
void write_field(const std::string& path, const CoefficientField& field,
                 const std::string& filter_name);
CoefficientField read_field(const std::string& path);

json truth_to_json(const generators::GroundTruth& truth);
generators::GroundTruth truth_from_json(const json& j);
void write_truth(const std::string& path, const generators::GroundTruth& truth);
generators::GroundTruth read_truth(const std::string& path);

}  // namespace pmfa::io
