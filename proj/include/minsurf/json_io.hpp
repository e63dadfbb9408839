#pragma once

#include <filesystem>

#include "json.hpp"
#include "minsurf/boundary.hpp"
#include "minsurf/equality.hpp"
#include "minsurf/series.hpp"
#include "minsurf/subharmonic.hpp"
#include "minsurf/surface.hpp"

namespace minsurf {

using Json = nlohmann::json;

/// Complex numbers are [re, im] pairs; series are arrays of them, index = power.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

/// {"p": [[re,im],...], "q": [[re,im],...], "name": string?}
Json surface_to_json(const Surface& s);
Surface surface_from_json(const Json& j);
/// Throws InputError on unreadable files or malformed content.
Surface load_surface_file(const std::filesystem::path& path);

void to_json(Json& j, const Point3& p);
void from_json(const Json& j, Point3& p);
void to_json(Json& j, const PolarGrid& g);
void from_json(const Json& j, PolarGrid& g);
void to_json(Json& j, const QuadratureSpec& q);
void from_json(const Json& j, QuadratureSpec& q);
void to_json(Json& j, const IsothermalReport& r);
void to_json(Json& j, const SchwarzReport& r);
void from_json(const Json& j, SchwarzReport& r);
void to_json(Json& j, const RieszReport& r);
void from_json(const Json& j, RieszReport& r);
void to_json(Json& j, const EqualityVerdict& v);
void from_json(const Json& j, EqualityVerdict& v);

}  // namespace minsurf
