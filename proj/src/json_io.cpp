#include "braidq/json_io.hpp"

#include "braidq/errors.hpp"

namespace braidq {

Json to_json(const Word& w) { return Json(w.tokens()); }

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidParameter("word must be a JSON array of tokens");
  return word_from_tokens(j.get<std::vector<std::string>>());
}

Json to_json(const GroupPresentation& p) {
  Json j;
  j["name"] = to_string(p.kind);
  j["n"] = p.n;
  Json gens = Json::array();
  for (const auto& g : p.generators) gens.push_back(to_token(g));
  j["generators"] = gens;
  Json rels = Json::array();
  for (const auto& r : p.relators) rels.push_back(Json::array({to_json(r.lhs), to_json(r.rhs)}));
  j["relators"] = rels;
  return j;
}

Json to_json(const GarsideNormalForm& nf) {
  Json j;
  j["delta_power"] = nf.delta_power;
  Json f = Json::array();
  for (const auto& p : nf.factors) f.push_back(p.one_based());
  j["factors"] = f;
  return j;
}

Json to_json(const TSSCertificate& c) {
  Json j;
  j["members"] = c.members;
  Json conj = Json::object();
  for (std::size_t a = 0; a < c.conjugators.size(); ++a)
    conj["(" + std::to_string(a + 1) + " " + std::to_string(a + 2) + ")"] = c.conjugators[a];
  j["conjugators"] = conj;
  j["conditional"] = c.conditional;
  return j;
}

Json to_json(const SplitReport& s) {
  Json j;
  j["size"] = s.family_size;
  j["image_size"] = s.image_size;
  j["splits"] = s.splits;
  j["p"] = s.p;
  if (s.conjugation_only) j["conjugation_only"] = true;
  return j;
}

Json to_json(const std::vector<DerivationStep>& steps) {
  Json j = Json::array();
  for (const auto& s : steps)
    j.push_back(Json{{"relator", s.relator}, {"position", s.position}, {"direction", to_string(s.direction)}});
  return j;
}

std::vector<DerivationStep> derivation_from_json(const Json& j) {
  std::vector<DerivationStep> out;
  for (const auto& s : j)
    out.push_back({s.at("relator").get<std::size_t>(), s.at("position").get<std::size_t>(),
                   parse_rewrite_direction(s.at("direction").get<std::string>())});
  return out;
}

Json hom_record(const Homomorphism& h, const std::string& target, std::uint64_t multiplicity) {
  Json j;
  j["presentation"] = to_string(h.kind);
  j["n"] = h.n;
  j["target"] = target;
  j["degree"] = h.degree();
  Json imgs = Json::object();
  const auto pres = make_presentation(h.kind, h.n);
  for (std::size_t g = 0; g < pres.generators.size(); ++g) imgs[to_token(pres.generators[g])] = h.images[g].one_based();
  j["images"] = imgs;
  j["multiplicity"] = multiplicity;
  return j;
}

void add_report(Json& record, const HomReport& r) {
  record["classification"] = to_string(r.classification);
  record["image_order"] = r.image_order;
  Json splits = Json::object();
  for (const auto& s : r.splits) splits[s.family] = to_json(s);
  record["splits"] = splits;
  record["p"] = r.p;
  record["d"] = r.d;
}

HomRecord hom_from_json(const Json& j) {
  try {
    HomRecord rec;
    rec.raw = j;
    rec.hom.kind = parse_presentation_kind(j.at("presentation").get<std::string>());
    rec.hom.n = j.at("n").get<int>();
    rec.target = j.value("target", std::string{});
    rec.multiplicity = j.value("multiplicity", std::uint64_t{1});
    const auto pres = make_presentation(rec.hom.kind, rec.hom.n);
    const auto& imgs = j.at("images");
    for (const auto& g : pres.generators)
      rec.hom.images.push_back(Permutation::from_one_based(imgs.at(to_token(g)).get<std::vector<int>>()));
    const int d = rec.hom.degree();
    for (const auto& p : rec.hom.images)
      if (p.degree() != d) throw InvalidParameter("images have different degrees");
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed homomorphism record: ") + e.what());
  }
}

namespace {

Json perms(const std::vector<Permutation>& ps) {
  Json j = Json::array();
  for (const auto& p : ps) j.push_back(p.to_cycles());
  return j;
}

}  // namespace

Json to_json(const TheoremAAudit& a) {
  Json j;
  j["n"] = a.n;
  j["p"] = a.p;
  j["d"] = a.d;
  j["lpf"] = a.lpf_p;
  j["odd"] = perms(a.odd);
  j["even"] = perms(a.even);
  j["image_order"] = a.image_order;
  j["gamma_order"] = a.gamma_order;
  j["odd_generated_order"] = a.odd_generated_order;
  j["psi_surjective"] = a.psi_surjective;
  j["observations"] = Json::array({a.obs1, a.obs2, a.obs3, a.obs4, a.obs5});
  j["witnesses"] = a.witnesses;
  j["coset_count"] = a.coset_count;
  j["coset_required"] = a.coset_required;
  j["eq3"] = a.eq3;
  j["gamma_bound"] = a.gamma_bound;
  j["eq4"] = a.eq4;
  j["bound"] = a.bound_a.str();
  j["bound_p"] = a.bound_ap.str();
  j["final_bound"] = a.final_bound;
  return j;
}

Json to_json(const CaseReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["case"] = r.case_label;
  j["image_order"] = r.image_order;
  j["evidence"] = r.evidence;
  j["flags"] = r.flags;
  if (r.factors_through_welded) j["factors_through_welded"] = *r.factors_through_welded;
  if (r.welded_relators_hold) j["welded_relators_hold"] = *r.welded_relators_hold;
  if (r.restriction_audit) j["restriction_audit"] = to_json(*r.restriction_audit);
  if (r.balloon && r.balloon->tss.ok()) j["balloon"] = to_json(r.balloon->tss.certificate);
  return j;
}

}  // namespace braidq
