#include "ckdual/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "ckdual/corpus.hpp"
#include "ckdual/document.hpp"
#include "ckdual/errors.hpp"
#include "ckdual/invariants.hpp"
#include "ckdual/reciprocal.hpp"

namespace ckdual {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  bool assume = false;
  std::optional<std::size_t> level;
  std::string file;
  std::string file2;
};

struct Outcome {
  json report;
  int code = 0;
};

std::string free_group(std::size_t rank) { return FgAbelianGroup{rank, {}}.to_string(); }

json kernel_json(const KernelBasis& kb) {
  json out = json::array();
  for (const auto& v : kb.vectors) out.push_back(vector_to_json(v));
  return out;
}

json pair_json(const PairInvariant& p) {
  return json{{"group", p.group.to_string()}, {"quotient", p.quotient.to_string()}};
}

const ZeroOneMatrix& require_ck(const InputDocument& doc, const std::string& command) {
  if (doc.kind != InputDocument::Kind::Ck)
    throw MalformedDocument(command + " expects a \"ck\" document");
  return *doc.matrix;
}

// CK documents are read through their hat seed.
StableSeed seed_of(const InputDocument& doc) {
  if (doc.kind == InputDocument::Kind::Seed) return *doc.seed;
  return hat_of_finite(*doc.matrix);
}

json certification_json(const Certification& c) {
  return json{{"certified", c.certified}, {"assumptions", c.assumptions}, {"reason", c.reason}};
}

// Level to use and the assumptions it rests on; a level-free query needs
// (DRS)+(LI).
std::size_t chosen_level(const StableSeed& s, const Options& o, json& report) {
  report["assumptions"] = json::array();
  if (o.level) {
    if (*o.level < s.k())
      throw std::invalid_argument("--level must be at least K = " + std::to_string(s.k()));
    report["level"] = *o.level;
    return *o.level;
  }
  const Certification cert = require_drs_li(s, o.assume);
  report["assumptions"] = cert.assumptions;
  report["level"] = s.k();
  return s.k();
}

Outcome cmd_validate(const InputDocument& doc, const Options& o) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  if (doc.kind == InputDocument::Kind::Ck) {
    const ZeroOneMatrix& m = *doc.matrix;
    r["properties"] = {{"irreducible", is_irreducible(m)}, {"permutation", is_permutation(m)}};
    bool valid = true;
    try {
      validate_ck(m);
    } catch (const Error& e) {
      valid = false;
      r["reason"] = e.what();
    }
    r["verdict"] = valid;
    r["assumptions"] = json::array();
    res.code = valid ? 0 : 1;
    return res;
  }
  const StableSeed& s = *doc.seed;
  const std::size_t depth = o.level ? (*o.level < s.k() ? 0 : *o.level - s.k()) : default_check_depth(s);
  const PropertyReport p = check_seed_properties(s, depth);
  json levels = json::array();
  for (const auto& lc : p.levels) {
    json l{{"level", lc.level}, {"irreducible", lc.irreducible}};
    if (lc.rs) l["rs"] = *lc.rs;
    if (lc.dc) l["dc"] = *lc.dc;
    levels.push_back(l);
  }
  r["properties"] = {{"rsf", p.rsf},
                     {"rs", p.rs},
                     {"dc", p.dc},
                     {"drs", p.drs},
                     {"li_up_to", p.li_up_to ? json(*p.li_up_to) : json(nullptr)},
                     {"li_from", p.li_from ? json(*p.li_from) : json(nullptr)},
                     {"li_all_checked", p.li_all_checked},
                     {"closed_form", p.closed_form},
                     {"assumed_beyond", p.assumed_beyond},
                     {"note", p.note},
                     {"levels", levels}};
  const Certification cert = certify_drs_li(s, o.assume);
  r["certification"] = certification_json(cert);
  r["assumptions"] = cert.assumptions;
  // (RS) and (LI) make the algebra a Kirchberg algebra.
  const bool ok = p.rsf && p.rs && p.li_all_checked;
  r["verdict"] = ok;
  res.code = ok ? 0 : 1;
  return res;
}

Outcome cmd_kgroups(const InputDocument& doc, const Options& o) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  std::optional<KGroups> k;
  if (doc.kind == InputDocument::Kind::Ck) {
    k = ck_k_theory(*doc.matrix);
    r["assumptions"] = json::array();
  } else {
    const std::size_t n = chosen_level(*doc.seed, o, r);
    k = k_groups_level(*doc.seed, n);
  }
  r["groups"] = {{"K0", k->k0.group().to_string()}, {"K1", free_group(k->k1.rank())}};
  r["marked"] = {{"unit", vector_to_json(k->k0.element())}};
  r["unit_order"] = element_order(k->k0) ? json(element_order(k->k0)->get_str()) : json("infinite");
  r["k1_basis"] = kernel_json(k->k1);
  r["verdict"] = true;
  return res;
}

Outcome cmd_ext(const InputDocument& doc, const Options& o) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  const StableSeed s = seed_of(doc);
  if (doc.kind == InputDocument::Kind::Ck) r["seed"] = seed_to_json(s);
  const std::size_t n = chosen_level(s, o, r);
  const LevelInvariants li = level_invariants(s, n);
  r["groups"] = {{"Ext_s", li.ext_s.group().to_string()},
                 {"Ext_s0", free_group(li.ext_s0.rank())},
                 {"Ext_w", li.ext_w.to_string()}};
  r["marked"] = {{"minus_c", vector_to_json(li.ext_s.element())}};
  r["pair"] = pair_json(pair_invariant(li.ext_s));
  r["verdict"] = true;
  return res;
}

Outcome cmd_sixterm(const InputDocument& doc, const Options& o) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  const StableSeed s = seed_of(doc);
  if (doc.kind == InputDocument::Kind::Ck) r["seed"] = seed_to_json(s);
  const std::size_t n = o.level.value_or(s.k());
  if (n < s.k()) throw std::invalid_argument("--level must be at least K = " + std::to_string(s.k()));
  r["level"] = n;
  r["assumptions"] = json::array();
  const SixTermReport six = six_term_check(s, n);
  r["groups"] = {{"Ext_s0", free_group(six.ext_s0_rank)},
                 {"Ext_w0", free_group(six.ext_w0_rank)},
                 {"Ext_s", six.ext_s.to_string()},
                 {"Ext_w", six.ext_w.to_string()},
                 {"ker_q", six.ker_q.to_string()}};
  r["nodes"] = {{"identity_holds", six.identity_holds},
                {"iota_well_defined", six.iota_well_defined},
                {"j_injective", six.j_injective},
                {"exact_at_ext_w0", six.exact_at_ker_w},
                {"exact_at_z", six.exact_at_z},
                {"exact_at_ext_s", six.exact_at_coker_s},
                {"q_surjective", six.q_surjective}};
  r["subobjects"] = {{"im_j_rank", six.im_j_rank},
                     {"ker_s_rank", six.ker_s_rank},
                     {"im_s", six.im_s.get_str()},
                     {"ker_iota", six.ker_iota.get_str()},
                     {"im_iota_order", six.im_iota_order ? json(six.im_iota_order->get_str()) : json("infinite")}};
  r["verdict"] = six.exact();
  res.code = six.exact() ? 0 : 1;
  return res;
}

Outcome cmd_dual(const InputDocument& doc, const Options& o) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  const StableSeed s = seed_of(doc);
  if (doc.kind == InputDocument::Kind::Ck) r["seed"] = seed_to_json(s);
  const DualityReport d = verify_duality(s, o.assume);
  const PresentationChain chain = presentation_chain(s, s.k());
  r["dual_matrix"] = matrix_to_json(d.dual);
  r["swap_matrix"] = matrix_to_json(dual_swap_matrix(s, o.assume));
  r["dual_valid"] = d.dual_valid;
  if (!d.dual_error.empty()) r["dual_error"] = d.dual_error;
  r["groups"] = {{"Ext_s", d.left_pair.group.to_string()},
                 {"Ext_s_quotient", d.left_pair.quotient.to_string()},
                 {"Ext_s0", free_group(d.left_kernel_rank)},
                 {"dual_K0", d.right_pair.group.to_string()},
                 {"dual_K0_quotient", d.right_pair.quotient.to_string()},
                 {"dual_K1", free_group(d.right_kernel_rank)}};
  r["marked"] = {{"minus_c", vector_to_json(d.left_marked)}, {"dual_unit", vector_to_json(d.right_marked)}};
  r["pairs_equivalent"] = d.pairs_equivalent;
  r["ranks_equal"] = d.ranks_equal;
  r["presentation_chain"] = {{"embedding_isomorphism", chain.embedding_isomorphism},
                             {"consistent", chain.consistent()}};
  r["assumptions"] = d.assumptions;
  r["verdict"] = d.verdict;
  res.code = d.verdict ? 0 : 1;
  return res;
}

Outcome cmd_double_dual(const InputDocument& doc, const Options&) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  const ZeroOneMatrix& a = require_ck(doc, "double-dual");
  const DoubleHatReport d = double_hat_check(a);
  const KGroups left = ck_k_theory(a);
  const KGroups right = ck_k_theory(d.double_hat);
  r["double_hat"] = matrix_to_json(d.double_hat);
  r["groups"] = {{"K0", left.k0.group().to_string()},
                 {"K1", free_group(left.k1.rank())},
                 {"double_hat_K0", right.k0.group().to_string()},
                 {"double_hat_K1", free_group(right.k1.rank())}};
  r["marked"] = {{"unit", vector_to_json(left.k0.element())},
                 {"double_hat_unit", vector_to_json(right.k0.element())}};
  r["checks"] = {{"pairs_equivalent", d.pairs_equivalent},
                 {"k1_ranks_equal", d.k1_ranks_equal},
                 {"det_identity", d.det_identity},
                 {"det_double_hat", d.det_double_hat.get_str()},
                 {"det_original", d.det_original.get_str()}};
  r["assumptions"] = json::array();
  r["verdict"] = d.passed();
  res.code = d.passed() ? 0 : 1;
  return res;
}

Outcome cmd_ck_invariant(const InputDocument& doc, const Options&) {
  Outcome res{document_to_json(doc), 0};
  json& r = res.report;
  const CkInvariant inv = ck_complete_invariant(require_ck(doc, "ck-invariant"));
  r["groups"] = {{"G1", inv.g1.to_string()}, {"G2", inv.g2.to_string()}, {"G3", inv.g3.to_string()}};
  r["g3_is_sum"] = inv.g3_is_sum;
  r["assumptions"] = json::array();
  r["verdict"] = inv.g3_is_sum;
  res.code = inv.g3_is_sum ? 0 : 1;
  return res;
}

Outcome cmd_compare(const InputDocument& a, const InputDocument& b, const Options&) {
  const ZeroOneMatrix& x = require_ck(a, "compare");
  const ZeroOneMatrix& y = require_ck(b, "compare");
  const CkInvariant ix = ck_complete_invariant(x);
  const CkInvariant iy = ck_complete_invariant(y);
  const bool same = ck_isomorphic(x, y);
  Outcome res;
  json& r = res.report;
  r["kind"] = "compare";
  r["matrix"] = {matrix_to_json(x), matrix_to_json(y)};
  r["groups"] = {{"first", {{"G1", ix.g1.to_string()}, {"G2", ix.g2.to_string()}}},
                 {"second", {{"G1", iy.g1.to_string()}, {"G2", iy.g2.to_string()}}}};
  r["result"] = same ? "isomorphic" : "not isomorphic";
  r["assumptions"] = json::array();
  r["verdict"] = same;
  res.code = same ? 0 : 1;
  return res;
}

Outcome cmd_example_corpus() {
  Outcome res;
  json& r = res.report;
  r["kind"] = "paper-examples";
  r["examples"] = json::array();
  bool all = true;
  for (const auto& e : run_example_corpus()) {
    r["examples"].push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
    all = all && e.passed;
  }
  r["assumptions"] = json::array();
  r["verdict"] = all;
  res.code = all ? 0 : 1;
  return res;
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render(const json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      render(value, os, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render(item, os, indent + 4);
      }
    } else {
      os << pad << key << ": " << scalar_text(value) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(report, os, 0);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact K-theory and extension-group invariants of Cuntz-Krieger and Exel-Laca algebras",
               "ckdual"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--assume-drs-li", o.assume,
               "Assume (DRS)+(LI) beyond the levels an explicit tail describes");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Input document")->required();
    sub->fallthrough();
    return sub;
  };
  CLI::App* validate = file_cmd("validate", "Check (RSF), (RS), (DC), (DRS), (LI) or CK validity");
  validate->add_option("--level", o.level, "Check seeds up to this level");
  CLI::App* kgroups = file_cmd("kgroups", "K_0 with unit class and K_1");
  kgroups->add_option("--level", o.level, "Finite level (default K, which needs (DRS)+(LI))");
  CLI::App* ext = file_cmd("ext", "Strong and weak extension groups");
  ext->add_option("--level", o.level, "Finite level (default K, which needs (DRS)+(LI))");
  CLI::App* sixterm = file_cmd("sixterm", "Exactness of the six-term sequence at a level");
  sixterm->add_option("--level", o.level, "Finite level (default K)");
  CLI::App* dual = file_cmd("dual", "Reciprocal dual matrix and duality check");
  CLI::App* ddual = file_cmd("double-dual", "Double dual of a CK matrix");
  CLI::App* ckinv = file_cmd("ck-invariant", "Complete invariant groups of a CK matrix");
  CLI::App* compare = app.add_subcommand("compare", "Decide isomorphism of two CK algebras");
  compare->add_option("first", o.file, "First CK document")->required();
  compare->add_option("second", o.file2, "Second CK document")->required();
  compare->fallthrough();
  CLI::App* examples = app.add_subcommand("paper-examples", "Run the built-in example corpus");
  examples->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Outcome res;
  try {
    if (examples->parsed()) {
      res = cmd_example_corpus();
    } else if (compare->parsed()) {
      res = cmd_compare(load_document(o.file), load_document(o.file2), o);
    } else {
      const InputDocument doc = load_document(o.file);
      if (validate->parsed()) res = cmd_validate(doc, o);
      else if (kgroups->parsed()) res = cmd_kgroups(doc, o);
      else if (ext->parsed()) res = cmd_ext(doc, o);
      else if (sixterm->parsed()) res = cmd_sixterm(doc, o);
      else if (dual->parsed()) res = cmd_dual(doc, o);
      else if (ddual->parsed()) res = cmd_double_dual(doc, o);
      else if (ckinv->parsed()) res = cmd_ck_invariant(doc, o);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.format == "json") {
    out << res.report.dump(2) << "\n";
  } else if (examples->parsed()) {
    for (const auto& e : res.report["examples"]) {
      out << (e["passed"].get<bool>() ? "PASS " : "FAIL ") << e["name"].get<std::string>();
      if (!e["detail"].get<std::string>().empty()) out << "  (" << e["detail"].get<std::string>() << ")";
      out << "\n";
    }
  } else {
    out << render_text(res.report);
  }
  return res.code;
}

}  // namespace ckdual
