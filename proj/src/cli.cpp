#include "locmouf/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "locmouf/extraction.hpp"
#include "locmouf/jordan_pair.hpp"
#include "locmouf/moufang.hpp"
#include "locmouf/moufang_identities.hpp"
#include "locmouf/moufang_verify.hpp"
#include "locmouf/projective_space.hpp"
#include "locmouf/ring.hpp"
#include "locmouf/ring_verify.hpp"
#include "locmouf/roundtrip.hpp"
#include "locmouf/serialize.hpp"

namespace locmouf {

namespace {

struct Options {
  std::string spec;
  std::string input;
  std::string e;
  std::string out_file;
  std::string table_file;
  std::string control;
  std::size_t cap = 1u << 20;
  bool deep = false;
  bool full_lm3 = false;
  bool seedless = false;
};

/// Usage or input problem; exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The Moufang set a command works on, with the point chosen as e.
struct Subject {
  std::optional<Ring> ring;
  std::optional<ProjectiveSpace> space;
  std::optional<FinMoufang> m;
  Elem e_elem = 0;   // ring element, ring inputs only
  Index e_point = 0;
};

Ring ring_of(const Options& o) {
  if (o.spec.empty()) throw InputError("a ring spec is required");
  return Ring(RingSpec::parse(o.spec));
}

Elem ring_e(const Ring& r, const Options& o) {
  if (o.e.empty()) return r.one();
  const Elem e = r.parse_elem(o.e);
  if (!r.is_unit(e)) throw InputError("--e " + o.e + " is not invertible");
  return e;
}

Subject load_subject(const Options& o) {
  Subject s;
  if (!o.input.empty()) {
    if (!o.spec.empty()) throw InputError("give either a ring spec or --input, not both");
    s.m.emplace(parse_moufang_file(o.input));
    if (o.e.empty()) {
      s.e_point = first_unit(*s.m);
    } else {
      auto p = s.m->find(o.e);
      if (!p || !s.m->is_unit(*p)) throw InputError("--e " + o.e + " is not a unit point");
      s.e_point = *p;
    }
    return s;
  }
  s.ring.emplace(ring_of(o));
  s.e_elem = ring_e(*s.ring, o);
  s.space.emplace(make_pair_from_ring(*s.ring), s.e_elem);
  s.m.emplace(FinMoufang::build(moufang_data(*s.space), s.space->infinity()));
  s.e_point = s.space->affine(s.e_elem);
  return s;
}

Json moufang_summary(const FinMoufang& m) {
  return Json{{"points", m.size()},
              {"classes", m.class_count()},
              {"zero", m.label(m.zero())},
              {"infinity", m.label(m.inf())},
              {"units", m.units().size()},
              {"u_inf_order", m.u_inf().size()}};
}

JordanPair control_pair(const Ring& r, const std::string& kind) {
  const auto g = AbelianGroup::additive_group(r);
  if (kind == "linear")
    return JordanPair::unchecked("control:linear(" + r.spec().str() + ")", g, g,
                                 [&](Side, Elem x, Elem y) { return r.mul(x, y); });
  return JordanPair::unchecked("control:shifted(" + r.spec().str() + ")", g, g,
                               [&](Side, Elem x, Elem y) { return r.add(r.mul(r.mul(x, x), y), x); });
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw InputError(path + ": cannot write");
  f << j.dump(2) << "\n";
}

/// Fills summary and report for one command.
void execute(const std::string& cmd, const Options& o, Json& summary, VerifyReport& rep) {
  if (cmd == "ring-info") {
    const Ring r = ring_of(o);
    std::size_t units = 0;
    for (Elem a : r.elements()) units += r.is_unit(a);
    summary = Json{{"ring", r.spec().str()},  {"size", r.size()},        {"p", r.spec().p},
                   {"k", r.spec().k},         {"units", units},          {"non_units", r.size() - units}};
    rep.merge(verify_ring(r));
    return;
  }
  if (cmd == "jp-verify") {
    const Ring r = ring_of(o);
    if (!o.control.empty()) {
      const JordanPair v = control_pair(r, o.control);
      summary = Json{{"pair", v.name()}, {"size_plus", v.size(Side::plus)}, {"size_minus", v.size(Side::minus)}};
      rep.merge(verify_jordan_axioms(v));
      return;
    }
    const JordanPair v = make_pair_from_ring(r);
    summary = Json{{"pair", v.name()}, {"size_plus", v.size(Side::plus)}, {"size_minus", v.size(Side::minus)}};
    rep.merge(structure_checks(v));
    rep.merge(verify_jordan_axioms(v));
    rep.merge(verify_local(v));
    rep.merge(verify_quasi_inverse_identities(v));
    return;
  }
  if (cmd == "jp-radical") {
    const Ring r = ring_of(o);
    const JordanPair v = make_pair_from_ring(r);
    const auto ps = PairStructure::analyze(v);
    summary = Json{{"pair", v.name()}};
    for (Side s : {Side::plus, Side::minus}) {
      Json rad = Json::array();
      for (Elem x : ps.rad.elements(s)) rad.push_back(v.label(s, x));
      std::size_t inv = 0;
      for (bool b : ps.invertible[idx(s)]) inv += b;
      const std::string k = s == Side::plus ? "plus" : "minus";
      summary["radical_" + k] = std::move(rad);
      summary["invertible_" + k] = inv;
    }
    rep.merge(verify_local(v));
    return;
  }

  const Subject s = load_subject(o);
  const FinMoufang& m = *s.m;
  summary = moufang_summary(m);
  summary["e"] = m.label(s.e_point);

  if (cmd == "ms-build") {
    rep.merge(m.construction_report());
    if (!o.out_file.empty()) write_file(o.out_file, moufang_to_json(m));
    return;
  }
  if (cmd == "ms-verify") {
    rep.merge(verify_moufang(m, o.full_lm3));
    if (s.space) {
      rep.merge(verify_projective_space(*s.space), "P(V): ");
      rep.merge(verify_mu_actions(*s.space), "P(V): ");
      rep.merge(verify_dictionary(*s.space), "P(V): ");
    }
    rep.merge(verify_moufang_identities(m), "identities: ");
    summary["special"] = check_special(m).pass;
    summary["abelian"] = check_abelian(m).pass;
    return;
  }
  if (cmd == "ms-group") {
    try {
      const auto g = little_projective_group(m, o.cap);
      summary["order"] = g.order;
      rep.merge(g.report);
    } catch (const CapExceeded& ex) {
      summary["order"] = nullptr;
      Check c;
      c.name = "closure of U_inf and U_0";
      c.pass = false;
      c.note = ex.what();
      rep.add(std::move(c));
    }
    return;
  }
  if (cmd == "ms-extract") {
    const Extraction ex = extract(m, s.e_point);
    rep.merge(ex.report);
    summary["extractable"] = ex.w.has_value();
    if (ex.pair) rep.merge(verify_extraction_identities(*ex.pair, o.deep), "identities: ");
    const FinMoufang sw = m.swapped();
    const Extraction exs = extract(sw, s.e_point);
    rep.merge(exs.report, "[swapped] ");
    summary["swapped_extractable"] = exs.w.has_value();
    if (exs.pair) rep.merge(verify_extraction_identities(*exs.pair, o.deep), "[swapped] identities: ");
    if (ex.w) {
      summary["size_plus"] = ex.w->size(Side::plus);
      summary["size_minus"] = ex.w->size(Side::minus);
      if (!o.table_file.empty()) write_file(o.table_file, pair_tables(*ex.w));
    }
    return;
  }
  if (cmd == "roundtrip") {
    if (s.space) rep.merge(verify_roundtrip_pair(s.space->pair(), s.e_elem), "V = W: ");
    rep.merge(verify_star_and_iso(m, s.e_point), "M = M(W): ");
    return;
  }
  throw InputError("unknown command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local Moufang sets and local Jordan pairs over finite local rings", "locmouf"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"ring-info", "ring size, units and ring axioms"},
      {"jp-verify", "Jordan pair axiom suite for (R, R)"},
      {"jp-radical", "radical and invertible elements of (R, R)"},
      {"ms-build", "build M(V) or load a Moufang set file"},
      {"ms-verify", "Moufang set axioms and identities"},
      {"ms-group", "order of the little projective group"},
      {"ms-extract", "extract a Jordan pair from a Moufang set"},
      {"roundtrip", "V = W and M = M(W) round trips"},
  };
  for (const auto& sp : specs) {
    CLI::App* sub = app.add_subcommand(sp.name, sp.help);
    sub->add_option("spec", o.spec, "ring spec zmod:p:k or poly:p:k");
    sub->add_option("--e", o.e, "distinguished invertible element (ring element or point label)");
    sub->add_flag("--seedless", o.seedless, "accepted for compatibility; nothing is random");
    const std::string name = sp.name;
    if (name.rfind("ms-", 0) == 0 || name == "roundtrip")
      sub->add_option("--input", o.input, "Moufang set JSON file")->check(CLI::ExistingFile);
    if (name == "jp-verify")
      sub->add_option("--control", o.control, "negative control pair")->check(CLI::IsMember({"linear", "shifted"}));
    if (name == "ms-build") sub->add_option("--out", o.out_file, "write the Moufang set as JSON");
    if (name == "ms-verify") sub->add_flag("--full-lm3", o.full_lm3, "check LM3 under all of G");
    if (name == "ms-group") sub->add_option("--cap", o.cap, "abort closure beyond this many elements");
    if (name == "ms-extract") {
      sub->add_flag("--deep", o.deep, "add the e-anchored identity chain");
      sub->add_option("--table", o.table_file, "write operation tables of the extracted pair");
    }
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  Json summary = Json::object();
  VerifyReport rep;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    execute(cmd, o, summary, rep);
  } catch (const ConstructionFailure& ex) {
    err << "locmouf: " << ex.what() << "\n";
    for (const auto& c : ex.report().checks())
      if (!c.pass) err << "  failed: " << c.name << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
    return 2;
  } catch (const Error& ex) {
    err << "locmouf: " << ex.what() << "\n";
    return 2;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  Json input{{"spec", o.spec}, {"file", o.input}, {"e", o.e}};
  if (o.deep) input["deep"] = true;
  if (o.full_lm3) input["full_lm3"] = true;
  if (!o.control.empty()) input["control"] = o.control;
  if (cmd == "ms-group") input["cap"] = o.cap;

  Json report{{"schema", kSchemaVersion}, {"tool", "locmouf"},        {"version", kToolVersion},
              {"command", cmd},           {"input", input},           {"summary", summary},
              {"checks", to_json(rep)},   {"ok", rep.ok()},           {"timing_ms", static_cast<long long>(ms)}};
  out << report.dump(2) << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace locmouf
