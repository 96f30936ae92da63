#pragma once

#include <string>

#include "hh/bounds.hpp"
#include "hh/convexity.hpp"
#include "hh/verify.hpp"

namespace hh {

// JSON documents (2-space indent, stable field order). Field names match
// docs/report-schema.json.
std::string serialize(const ConvexityCertificate& c);
std::string serialize(const MonotonicityCertificate& c);
std::string serialize(const BoundReport& r);
std::string serialize(const FuzzSummary& s);

/// CSV dump of a fuzz summary's histogram plus header metadata.
std::string margins_csv(const FuzzSummary& s);

}  // namespace hh
