#pragma once

// JSON and text serialization. Every top-level document carries "schema": 1.

#include <iosfwd>

#include <json.hpp>

#include "zmcenter/abscenter.hpp"
#include "zmcenter/aut.hpp"
#include "zmcenter/realiser.hpp"

namespace zmcenter::report {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

json to_json(const ZmTriple& t);
json to_json(const ZmElement& g);
json to_json(const AutTriple& a);
json to_json(const AutCounts& c);
json to_json(const AbsCenterComparison& c);
json to_json(const RealiserCertificate& cert);
json to_json(const VerificationReport& r);
json to_json(const ProductCheck& p);

/// Parses and validates a certificate document; throws DomainError.
RealiserCertificate certificate_from_json(const json& doc);

void print_comparison(std::ostream& os, const AbsCenterComparison& c);
void print_certificate(std::ostream& os, const RealiserCertificate& cert);
void print_report(std::ostream& os, const VerificationReport& r);

}  // namespace zmcenter::report
