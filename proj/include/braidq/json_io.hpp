#pragma once

#include <string>

#include <json.hpp>

#include "braidq/audits.hpp"
#include "braidq/garside.hpp"
#include "braidq/hom.hpp"
#include "braidq/homsearch.hpp"
#include "braidq/presentations.hpp"
#include "braidq/tss.hpp"
#include "braidq/welded.hpp"

namespace braidq {

using Json = nlohmann::ordered_json;

Json to_json(const Word& w);  // ["s1", "T2", ...]
Word word_from_json(const Json& j);

Json to_json(const GroupPresentation& p);
Json to_json(const GarsideNormalForm& nf);
Json to_json(const TSSCertificate& c);
Json to_json(const SplitReport& s);
Json to_json(const std::vector<DerivationStep>& steps);
std::vector<DerivationStep> derivation_from_json(const Json& j);

/// One search record. Images are 1-based arrays keyed by generator token.
Json hom_record(const Homomorphism& h, const std::string& target, std::uint64_t multiplicity);
// Adds classification, image_order, splits, p, d.
void add_report(Json& record, const HomReport& r);

struct HomRecord {
  Homomorphism hom;
  std::string target;
  std::uint64_t multiplicity = 1;
  Json raw;
};
// Throws InvalidParameter on malformed records.
HomRecord hom_from_json(const Json& j);

Json to_json(const TheoremAAudit& a);
Json to_json(const CaseReport& r);

}  // namespace braidq
