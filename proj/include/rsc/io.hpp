#pragma once

#include "rsc/complex.hpp"
#include "rsc/density.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace rsc {
namespace io {

/// Facet text format: one facet per line as whitespace-separated integer
/// labels; '#' starts a comment; downward closure applied on load.
Complex load_complex_text(std::istream& in);
void save_complex_text(std::ostream& out, const Complex& c);

/// JSON form {"faces_by_dim": [[...], ...]} plus optional sampler metadata
/// {"n", "r", "seed", "trial"}.
struct SampleMeta {
    long long n;
    int r;
    std::uint64_t seed;
    std::uint64_t trial;
};
nlohmann::json complex_to_json(const Complex& c,
                               const std::optional<SampleMeta>& meta = std::nullopt);
Complex complex_from_json(const nlohmann::json& j);

/// Reads either format (JSON when the first non-space byte is '{').
Complex load_complex_file(const std::string& path);
Complex load_complex_stream(std::istream& in);

/// Rational as [num, den] (both decimal strings, den positive).
nlohmann::json rational_to_json(const Rational& x);

/// {"reduced": ..., "constraints": [{"W": [...], "nu": [[num,den], ...]}]}.
nlohmann::json domain_to_json(const DensityDomain& d);

nlohmann::json polygon_to_json(const Polygon2& poly);

} // namespace io
} // namespace rsc
