#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mcluster/algebra/isomorphism.hpp"
#include "mcluster/algebra/modules.hpp"
#include "mcluster/algebra/presentation.hpp"
#include "mcluster/algebra/presentation_io.hpp"
#include "mcluster/cli/enumerate.hpp"
#include "mcluster/cli/pipeline.hpp"
#include "mcluster/cluster/cluster_category.hpp"
#include "mcluster/derived/derived_io.hpp"
#include "mcluster/derived/rolling.hpp"
#include "mcluster/derived/tilting.hpp"
#include "mcluster/errors.hpp"

using namespace mcluster;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  int m = 1;
  std::string format = "json";
  std::optional<std::size_t> max_steps;
  std::optional<std::size_t> bound;
  std::string out;
  bool single = false;
  bool quiver_only = false;
  bool gldim_only = false;
  std::size_t n = 2;
  std::string orientation;
  std::size_t max_n = 6;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("", "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw PreconditionError("cannot write '" + opt.out + "'");
  out << text;
}

derived::DerivedSum load_sum(const std::string& path) {
  derived::ParsedSum parsed = derived::parse_derived_sum(read_file(path));
  return parsed.sum;
}

std::size_t gldim_bound(const Options& opt) { return opt.bound.value_or(static_cast<std::size_t>(2 * opt.m + 4)); }

std::string presentation_output(const algebra::StructureAlgebra& a, const Options& opt) {
  if (opt.quiver_only) {
    algebra::Presentation q{algebra::quiver_of(a).quiver, {}};
    return algebra::emit(q, opt.format);
  }
  return algebra::emit(algebra::present(a), opt.format);
}

int cmd_check_tilting(const Options& opt, bool with_m) {
  derived::DerivedSum t = load_sum(opt.input);
  derived::TiltingCertificate cert = derived::is_tilting_complex(t);
  json out;
  out["tilting"] = cert.tilting;
  out["issues"] = cert.issues;
  out["violations"] = json::array();
  for (const auto& v : cert.violations)
    out["violations"].push_back({{"shift", v.shift},
                                 {"source", derived::to_string(t.summands[v.source])},
                                 {"target", derived::to_string(t.summands[v.target])}});
  bool verdict = cert.tilting;
  if (with_m) {
    auto cc = cluster::is_m_cluster_tilting(t, opt.m);
    out["m"] = opt.m;
    out["m_cluster_tilting"] = cc.cluster_tilting;
    out["cluster_issues"] = cc.issues;
    out["cluster_violations"] = json::array();
    for (const auto& v : cc.violations)
      out["cluster_violations"].push_back(
          {{"ext_degree", v.ext_degree}, {"source", v.source}, {"target", v.target}, {"grade", v.grade}});
    verdict = verdict && cc.cluster_tilting;
  }
  write_output(opt, out.dump(2) + "\n");
  return verdict ? kOk : kFalse;
}

int cmd_present(const Options& opt) {
  derived::DerivedSum t = load_sum(opt.input);
  derived::require_tilting(t);
  algebra::StructureAlgebra b = derived::endo_algebra(t);
  if (opt.gldim_only) {
    auto gl = algebra::global_dimension(b, gldim_bound(opt));
    write_output(opt, gl ? std::to_string(*gl) + "\n" : "> " + std::to_string(gldim_bound(opt)) + "\n");
    return kOk;
  }
  write_output(opt, presentation_output(b, opt));
  return kOk;
}

int cmd_roll(const Options& opt) {
  derived::DerivedSum t = load_sum(opt.input);
  if (opt.single) {
    derived::DerivedSum rolled = derived::roll(t, opt.m, gldim_bound(opt));
    write_output(opt, derived::emit(rolled));
    return kOk;
  }
  derived::RollingResult r = derived::roll_to_fundamental(t, opt.m, opt.max_steps, gldim_bound(opt));
  if (opt.format == "text") {
    std::ostringstream s;
    s << "steps: " << r.steps << "\n";
    for (std::size_t k = 0; k < r.trajectory.size(); ++k) s << "rho^" << k << ": " << derived::emit(r.trajectory[k]);
    s << "slice:";
    for (int v : r.domain_slice.sigma) s << " " << v;
    s << "\nresult: " << derived::emit(r.result);
    write_output(opt, s.str());
  } else {
    json out;
    out["steps"] = r.steps;
    out["rolled"] = derived::to_json(derived::sorted(r.rolled));
    out["slice"] = r.domain_slice.sigma;
    out["result"] = derived::to_json(derived::sorted(r.result));
    write_output(opt, out.dump() + "\n");
  }
  return kOk;
}

int cmd_cluster_present(const Options& opt) {
  derived::DerivedSum t = load_sum(opt.input);
  write_output(opt, presentation_output(cluster::cluster_endo(t, opt.m).algebra, opt));
  return kOk;
}

int cmd_relext(const Options& opt) {
  derived::DerivedSum t = load_sum(opt.input);
  write_output(opt, presentation_output(cluster::relation_extension(t, opt.m, gldim_bound(opt)).algebra, opt));
  return kOk;
}

int cmd_pipeline(const Options& opt) {
  derived::DerivedSum t = load_sum(opt.input);
  cli::PipelineReport r = cli::run_pipeline(t, {opt.m, opt.bound, opt.max_steps});
  write_output(opt, opt.format == "text" ? cli::to_text(r) : cli::to_json(r).dump(2) + "\n");
  return r.isomorphic() ? kOk : kFalse;
}

int cmd_enumerate(const Options& opt) {
  rep::Orientation o = opt.orientation.empty() ? rep::Orientation::linear(opt.n) : rep::Orientation(opt.n, opt.orientation);
  if (opt.n <= opt.max_n && (opt.n > 4 || (opt.n > 3 && opt.m > 1)))
    std::cerr << "warning: enumeration grows like the Fuss-Catalan numbers; this may take a while\n";
  cli::EnumerationReport r = cli::enumerate_tilting(o, opt.m, {opt.max_n, 3});
  write_output(opt, cli::to_json(r).dump(2) + "\n");
  return kOk;
}

int cmd_iso(const Options& opt) {
  if (opt.inputs.size() != 2) throw PreconditionError("iso: expected two presentation files");
  algebra::Presentation p = algebra::parse_presentation(read_file(opt.inputs[0]));
  algebra::Presentation q = algebra::parse_presentation(read_file(opt.inputs[1]));
  algebra::IsoResult r = algebra::presentation_iso(p, q);
  json out;
  out["verdict"] = algebra::to_string(r.verdict);
  out["reason"] = r.reason;
  if (r.verdict == algebra::IsoVerdict::isomorphic) {
    json vmap = json::object();
    for (const auto& [a, b] : r.vertex_map) vmap[std::to_string(a)] = b;
    out["vertex_map"] = vmap;
    out["arrow_map"] = r.arrow_map;
  }
  write_output(opt, out.dump(2) + "\n");
  return r.verdict == algebra::IsoVerdict::isomorphic ? kOk : kFalse;
}

int cmd_normalize(const Options& opt) {
  std::string text = read_file(opt.input);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    algebra::Presentation p = algebra::parse_presentation(text);  // DOT with embedded JSON
    j = algebra::to_json(p);
  }
  if (j.is_object() && j.contains("summands")) {
    derived::ParsedSum parsed = derived::derived_sum_from_json(j);
    if (!parsed.canonical) std::cerr << "warning: summands were not in canonical order; normalized\n";
    write_output(opt, derived::emit(derived::sorted(parsed.sum)));
    return kOk;
  }
  algebra::Presentation p = algebra::presentation_from_json(j);
  algebra::Presentation c = algebra::canonical_form(p);
  if (algebra::to_json(c) != algebra::to_json(p)) std::cerr << "warning: vertices or arrows were not in canonical order; normalized\n";
  write_output(opt, algebra::emit(c, "json"));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"m-cluster categories, relation extensions and rolling for type A_n"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* c) { c->add_option("--input,-i", opt.input, "DerivedSum JSON file ('-' for stdin)")->required(); };
  auto add_m = [&](CLI::App* c, bool required) {
    auto o = c->add_option("--m,-m", opt.m, "m >= 1")->check(CLI::PositiveNumber);
    if (required) o->required();
    return o;
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format,-f", opt.format, "output format")->check(CLI::IsMember({"dot", "json", "text"}));
  };
  auto add_out = [&](CLI::App* c) { c->add_option("--out,-o", opt.out, "write output to this file"); };
  auto add_bound = [&](CLI::App* c) { c->add_option("--bound", opt.bound, "global dimension search bound (default 2m+4)"); };

  auto* check = app.add_subcommand("check-tilting", "verify Hom(T, T[i]) = 0 for i != 0 (and m-cluster tilting with --m)");
  add_input(check);
  auto* check_m = add_m(check, false);
  add_out(check);

  auto* present = app.add_subcommand("present", "quiver with relations of End(T)");
  add_input(present);
  add_format(present);
  add_out(present);
  add_bound(present);
  present->add_flag("--quiver-only", opt.quiver_only, "only the Gabriel quiver");
  present->add_flag("--gldim", opt.gldim_only, "print the global dimension instead");

  auto* roll = app.add_subcommand("roll", "m-rolling into the fundamental domain");
  add_input(roll);
  add_m(roll, true);
  add_format(roll);
  add_out(roll);
  add_bound(roll);
  roll->add_option("--max-steps", opt.max_steps, "rolling cap (default n * (degree span + m + 2))");
  roll->add_flag("--single", opt.single, "one rolling step only");

  auto* cpres = app.add_subcommand("cluster-present", "quiver with relations of End_{C_m}(T)");
  add_input(cpres);
  add_m(cpres, true);
  add_format(cpres);
  add_out(cpres);
  cpres->add_flag("--quiver-only", opt.quiver_only, "only the Gabriel quiver");

  auto* relext = app.add_subcommand("relext", "quiver with relations of the m-relation extension of End(T)");
  add_input(relext);
  add_m(relext, true);
  add_format(relext);
  add_out(relext);
  add_bound(relext);
  relext->add_flag("--quiver-only", opt.quiver_only, "only the Gabriel quiver");

  auto* pipeline = app.add_subcommand("pipeline", "C_m(B) against R_m(B') after rolling");
  add_input(pipeline);
  add_m(pipeline, true);
  add_format(pipeline);
  add_out(pipeline);
  add_bound(pipeline);
  pipeline->add_option("--max-steps", opt.max_steps, "rolling cap");

  auto* enumerate = app.add_subcommand("enumerate", "all m-cluster tilting objects of C_m(A_n)");
  enumerate->add_option("--n,-n", opt.n, "number of vertices")->required()->check(CLI::PositiveNumber);
  add_m(enumerate, true);
  enumerate->add_option("--orientation", opt.orientation, "word over {R, L} of length n-1 (default linear)");
  enumerate->add_option("--max-n", opt.max_n, "refuse larger n");
  add_out(enumerate);

  auto* iso = app.add_subcommand("iso", "isomorphism of two presentations (JSON or DOT)");
  iso->add_option("files", opt.inputs, "two presentation files")->required()->expected(2);
  add_out(iso);

  auto* normalize = app.add_subcommand("normalize", "parse and re-emit a DerivedSum or presentation canonically");
  add_input(normalize);
  add_out(normalize);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*check) return cmd_check_tilting(opt, check_m->count() > 0);
    if (*present) return cmd_present(opt);
    if (*roll) return cmd_roll(opt);
    if (*cpres) return cmd_cluster_present(opt);
    if (*relext) return cmd_relext(opt);
    if (*pipeline) return cmd_pipeline(opt);
    if (*enumerate) return cmd_enumerate(opt);
    if (*iso) return cmd_iso(opt);
    if (*normalize) return cmd_normalize(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const derived::RollingError& e) {
    std::cerr << "error: " << e.what() << "\ntrajectory:\n";
    for (const auto& t : e.trajectory()) std::cerr << "  " << derived::emit(t);
    return kPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
