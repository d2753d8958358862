#include "braidq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "braidq/audits.hpp"
#include "braidq/bounds.hpp"
#include "braidq/errors.hpp"
#include "braidq/garside.hpp"
#include "braidq/homsearch.hpp"
#include "braidq/json_io.hpp"
#include "braidq/permgroup.hpp"
#include "braidq/presentations.hpp"
#include "braidq/tss.hpp"
#include "braidq/welded.hpp"

namespace braidq::cli {

namespace {

struct Options {
  std::string presentation = "braid";
  int n = 3;
  std::vector<std::string> words;
  int depth = 4;
  std::size_t bfs_nodes = 200'000;

  std::string family;
  std::string ambient = "welded";
  std::string target;
  std::vector<std::string> members;

  std::string mode = "full";
  bool pin_first = false;
  int workers = 0;
  std::uint64_t max_nodes = 0;
  std::string out_path;

  std::string formula;
  std::optional<int> n_max;
  std::optional<long long> p;
  std::string format = "text";

  std::string theorem;
  std::string homs_path;
  bool replay = false;
};

// Output to --out if given, else the provided stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidParameter("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Word parse_word_arg(const std::string& s, int n) {
  Word w = Word::parse(s);
  if (w.max_index() >= n) throw InvalidParameter("word '" + s + "' uses an index >= n");
  return w;
}

int cmd_present(const Options& o, std::ostream& out) {
  out << to_json(make_presentation(parse_presentation_kind(o.presentation), o.n)).dump() << '\n';
  return kOk;
}

int cmd_braid_eq(const Options& o, std::ostream& out) {
  const Word a = parse_word_arg(o.words.at(0), o.n), b = parse_word_arg(o.words.at(1), o.n);
  const auto na = normal_form(a, o.n), nb = normal_form(b, o.n);
  const bool eq = na == nb;
  out << (eq ? "equal" : "distinct") << '\n';
  out << to_json(na).dump() << '\n' << to_json(nb).dump() << '\n';
  return eq ? kOk : kVerificationFailure;
}

int cmd_welded_eq(const Options& o, std::ostream& out) {
  const Word a = parse_word_arg(o.words.at(0), o.n), b = parse_word_arg(o.words.at(1), o.n);
  const bool eq = welded_equal(a, b, o.n);
  out << (eq ? "equal" : "distinct") << '\n';
  return eq ? kOk : kVerificationFailure;
}

int cmd_virtual_eq(const Options& o, std::ostream& out) {
  const Word a = parse_word_arg(o.words.at(0), o.n), b = parse_word_arg(o.words.at(1), o.n);
  VirtualSearchConfig cfg;
  cfg.depth = o.depth;
  cfg.max_nodes = o.bfs_nodes;
  const auto v = virtual_equal_semidecide(a, b, o.n, cfg);
  out << to_string(v.verdict) << '\n';
  Json j;
  j["verdict"] = to_string(v.verdict);
  if (v.verdict == Verdict::ProvenEqual) j["derivation"] = to_json(v.derivation);
  if (v.verdict == Verdict::ProvenDistinct) j["witness"] = v.witness;
  j["nodes"] = v.nodes;
  out << j.dump() << '\n';
  switch (v.verdict) {
    case Verdict::ProvenEqual: return kOk;
    case Verdict::ProvenDistinct: return kVerificationFailure;
    case Verdict::Unknown: return kBudget;
  }
  return kBudget;
}

int cmd_verify_tss(const Options& o, std::ostream& out) {
  TSSResult res;
  if (!o.target.empty()) {
    const auto g = named_group(o.target);
    std::vector<Permutation> members;
    for (const auto& m : o.members) members.push_back(Permutation::from_cycles(m, g.degree()));
    if (members.empty()) throw InvalidParameter("--members is required with --target");
    res = verify_totally_symmetric(members, g);
  } else {
    if (o.family.empty()) throw InvalidParameter("give --family or --target with --members");
    WordAmbient amb;
    amb.n = o.n;
    amb.budget.depth = o.depth;
    amb.budget.max_nodes = o.bfs_nodes;
    PresentationKind kind = PresentationKind::Welded;
    if (o.ambient == "braid") {
      amb.kind = WordAmbientKind::BraidExact;
      kind = PresentationKind::Braid;
    } else if (o.ambient == "welded") {
      amb.kind = WordAmbientKind::WeldedExact;
    } else if (o.ambient == "virtual") {
      amb.kind = WordAmbientKind::VirtualSemi;
      kind = PresentationKind::Virtual;
    } else {
      throw InvalidParameter("unknown ambient '" + o.ambient + "'");
    }
    res = verify_family(family_by_name(o.family, o.n, kind), amb);
  }
  Json j;
  j["ok"] = res.ok();
  if (!res.ok()) {
    j["failure"] = to_string(res.failure);
    j["detail"] = res.detail;
  } else {
    j["certificate"] = to_json(res.certificate);
  }
  out << j.dump() << '\n';
  if (res.failure == TSSFailure::Unknown) return kBudget;
  return res.ok() ? kOk : kVerificationFailure;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const auto pres = make_presentation(parse_presentation_kind(o.presentation), o.n);
  const auto g = named_group(o.target);
  SearchConfig cfg;
  if (o.mode == "full")
    cfg.mode = SearchMode::Full;
  else if (o.mode == "conj")
    cfg.mode = SearchMode::Conj;
  else
    throw InvalidParameter("--mode must be full or conj");
  cfg.pin_first = o.pin_first;
  cfg.workers = o.workers;
  cfg.max_nodes = o.max_nodes;
  const auto res = enumerate_homs(pres, g, cfg);
  Sink sink(o.out_path, out);
  for (std::size_t k = 0; k < res.homs.size(); ++k) {
    Json rec = hom_record(res.homs[k], o.target, res.multiplicity[k]);
    add_report(rec, report(res.homs[k]));
    *sink << rec.dump() << '\n';
  }
  err << res.homs.size() << " records, " << res.represented() << " homomorphisms represented"
      << (res.partial ? " (partial: node budget exhausted)" : "") << '\n';
  return res.partial ? kBudget : kOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const int hi = o.n_max.value_or(o.n);
  if (hi < o.n) throw InvalidParameter("--n-max must be >= --n");
  if (o.format == "csv") out << "formula,n,p,value,in_range\n";
  for (int n = o.n; n <= hi; ++n) {
    const auto b = bound_by_name(o.formula, n, o.p);
    if (o.format == "csv") {
      out << b.formula << ',' << b.n << ',' << (b.p ? std::to_string(*b.p) : "") << ',' << b.value << ','
          << (b.in_range ? "true" : "false") << '\n';
    } else if (o.format == "text") {
      if (hi > o.n) out << n << ' ';
      out << b.value << (b.in_range ? "" : "  (outside the stated range)") << '\n';
    } else {
      throw InvalidParameter("--format must be text or csv");
    }
  }
  return kOk;
}

std::vector<HomRecord> read_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  std::vector<HomRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidParameter(std::string("bad JSON line: ") + e.what());
    }
    out.push_back(hom_from_json(j));
  }
  return out;
}

// Recomputes every derived field of a search record and compares.
int replay(const std::vector<HomRecord>& recs, std::ostream& out, std::ostream& err) {
  std::size_t bad = 0;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const auto& r = recs[k];
    std::string why;
    if (!verify_relations(r.hom)) {
      why = "relator fails";
    } else if (!r.target.empty() && [&] {
                 const auto g = named_group(r.target);
                 return std::any_of(r.hom.images.begin(), r.hom.images.end(),
                                    [&](const Permutation& p) { return !g.contains(p); });
               }()) {
      why = "image outside target";
    } else {
      Json again = hom_record(r.hom, r.target, r.multiplicity);
      add_report(again, report(r.hom));
      for (const auto& [key, val] : again.items())
        if (r.raw.contains(key) && r.raw.at(key) != val) why = "field '" + key + "' differs";
    }
    if (!why.empty()) {
      ++bad;
      err << "record " << k << ": " << why << '\n';
    }
  }
  out << recs.size() - bad << "/" << recs.size() << " records replayed\n";
  return bad ? kVerificationFailure : kOk;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err) {
  const auto recs = read_records(o.homs_path);
  if (o.replay) return replay(recs, out, err);
  Sink sink(o.out_path, out);
  std::size_t failures = 0;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    const auto& h = recs[k].hom;
    Json line;
    line["index"] = k;
    try {
      if (!verify_relations(h)) throw AuditFailure("record does not satisfy the relators");
      if (o.theorem == "thmA") {
        if (h.kind != PresentationKind::Braid || h.n < 6) {
          line["status"] = "skipped";
          line["reason"] = "needs a braid homomorphism with n >= 6";
        } else if (classify(h) == Classification::Cyclic) {
          line["status"] = "skipped";
          line["reason"] = "cyclic";
        } else {
          line["status"] = "pass";
          line["audit"] = to_json(theorem_a_audit(h));
        }
      } else if (o.theorem == "thmB") {
        line["status"] = "pass";
        line["report"] = to_json(theorem_b_case(h));
      } else {
        line["status"] = "pass";
        line["report"] = to_json(theorem_c_case(h));
      }
    } catch (const AuditFailure& e) {
      ++failures;
      line["status"] = "fail";
      line["reason"] = e.what();
      err << "record " << k << ": " << e.what() << '\n';
    }
    *sink << line.dump() << '\n';
  }
  return failures ? kVerificationFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite quotients of braid, virtual and welded braid groups"};
  app.require_subcommand(1);
  Options o;

  auto add_words = [&](CLI::App* c) {
    c->add_option("--n", o.n, "Strand count")->required()->check(CLI::Range(2, 64));
    c->add_option("words", o.words, "Two words, e.g. \"s1 t2 S1\"")->required()->expected(2);
  };

  auto* present = app.add_subcommand("present", "Print a presentation as JSON");
  present->add_option("--presentation", o.presentation, "braid|symmetric|virtual|welded");
  present->add_option("--n", o.n, "Strand count")->required();

  auto* beq = app.add_subcommand("braid-eq", "Decide equality in B_n");
  add_words(beq);
  auto* weq = app.add_subcommand("welded-eq", "Decide equality in wB_n");
  add_words(weq);
  auto* veq = app.add_subcommand("virtual-eq", "Semi-decide equality in vB_n");
  add_words(veq);
  veq->add_option("--depth", o.depth, "Rewrite steps")->check(CLI::NonNegativeNumber);
  veq->add_option("--max-nodes", o.bfs_nodes, "Words visited before giving up")->check(CLI::PositiveNumber);

  auto* vt = app.add_subcommand("verify-tss", "Certify a totally symmetric set");
  vt->add_option("--family", o.family, "SOdd, A2, R3, RightDiagBottomRow, ...");
  vt->add_option("--n", o.n, "Strand count");
  vt->add_option("--ambient", o.ambient, "braid|welded|virtual");
  vt->add_option("--depth", o.depth, "Rewrite steps (virtual)");
  vt->add_option("--target", o.target, "Finite ambient group, e.g. S6");
  vt->add_option("--members", o.members, "Members in cycle notation (finite ambient)");

  auto* search = app.add_subcommand("search", "Enumerate homomorphisms into a finite group");
  search->add_option("--presentation", o.presentation, "braid|symmetric|virtual|welded")->required();
  search->add_option("--n", o.n, "Strand count")->required()->check(CLI::Range(2, 64));
  search->add_option("--target", o.target, "S2-S8, A3-A8, Z2-Z24, D4-D12")->required();
  search->add_option("--mode", o.mode, "full|conj");
  search->add_flag("--pin-first", o.pin_first, "One first-generator image per conjugacy class");
  search->add_option("--workers", o.workers, "Threads (0: default)")->check(CLI::NonNegativeNumber);
  search->add_option("--max-nodes", o.max_nodes, "Search-tree node budget (0: none)");
  search->add_option("--out", o.out_path, "JSONL output file");

  auto* bound = app.add_subcommand("bound", "Evaluate a closed-form bound");
  bound->add_option("--formula", o.formula, "thmA|thmAp|ck|wbn|hab")->required();
  bound->add_option("--n", o.n, "Strand count")->required();
  bound->add_option("--n-max", o.n_max, "Tabulate n..n-max");
  bound->add_option("--p", o.p, "Minimal common power (thmAp)");
  bound->add_option("--format", o.format, "text|csv");

  auto* audit = app.add_subcommand("audit", "Audit homomorphism records");
  audit->add_option("theorem", o.theorem, "thmA|thmB|thmC")->check(CLI::IsMember({"thmA", "thmB", "thmC"}));
  audit->add_option("--homs", o.homs_path, "JSONL from search")->required();
  audit->add_option("--out", o.out_path, "JSONL output file");
  audit->add_flag("--replay", o.replay, "Re-verify records instead of auditing");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*present) return cmd_present(o, out);
    if (*beq) return cmd_braid_eq(o, out);
    if (*weq) return cmd_welded_eq(o, out);
    if (*veq) return cmd_virtual_eq(o, out);
    if (*vt) return cmd_verify_tss(o, out);
    if (*search) return cmd_search(o, out, err);
    if (*bound) return cmd_bound(o, out);
    if (*audit) {
      if (o.theorem.empty() && !o.replay) throw InvalidParameter("audit needs thmA, thmB or thmC");
      return cmd_audit(o, out, err);
    }
  } catch (const ResourceError& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const AuditFailure& e) {
    err << "audit failure: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace braidq::cli
