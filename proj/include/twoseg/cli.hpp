#pragma once

// Command-line surface. run_command is the whole tool minus main(), so tests
// can drive it in-process.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoseg/error.hpp"
#include "twoseg/groupoid_sigma.hpp"
#include "twoseg/hall.hpp"
#include "twoseg/io.hpp"
#include "twoseg/nerve_exact.hpp"
#include "twoseg/path.hpp"
#include "twoseg/poset.hpp"
#include "twoseg/render.hpp"
#include "twoseg/sdot.hpp"
#include "twoseg/search.hpp"
#include "twoseg/segal.hpp"

namespace twoseg {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitUsage = 64,
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace cli_detail {

struct Globals {
  std::string report = "text";
  std::string render;
  int jobs = 1;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
  const Globals& g;

  void emit(const CheckReport& rep, const std::string& name, const json& extra = json::object()) const {
    if (g.report == "json") {
      json j = to_json(rep);
      for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
      out << j.dump(2) << "\n";
    } else {
      out << to_text(rep, name);
      for (auto it = extra.begin(); it != extra.end(); ++it)
        out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
            << "\n";
    }
  }
};

inline int verdict_exit(const CheckReport& rep) { return rep.failed() ? kExitFail : kExitPass; }

/// Loads a file and runs its law checks; returns the validation report when it fails.
inline std::optional<CheckReport> load(const std::string& path, ObjectFile& obj) {
  obj = parse_object_file(path);
  CheckReport v = validation_report(obj);
  if (v.failed()) return v;
  return std::nullopt;
}

template <class T>
const T& expect(const ObjectFile& obj, const char* kind, const std::string& command) {
  const T* body = std::get_if<T>(&obj.body);
  if (!body)
    throw UsageError(command + " expects a " + std::string(kind) + " file, got kind '" + obj.kind + "'");
  return *body;
}

inline void maybe_render(const Output& o, const PreaugBisimplicialSet* d) {
  if (o.g.render.empty()) return;
  if (!d) throw UsageError("--render needs a sigma object");
  render_grid(*d, o.g.render);
}

} // namespace cli_detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Finite 2-Segal sets, stable augmented double Segal sets and the path/S-construction"};
  app.name("twoseg");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--report", g.report, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--render", g.render, "Write an SVG picture of the generator staircase");
  app.add_option("--jobs", g.jobs, "Worker threads for searches")->check(CLI::PositiveNumber);

  std::string file, out_path, kind, poset_spec_text, category_file, proto_file;
  int t = -1, pointed = 0, x0 = 1, x1 = 2, trunc = 3;
  std::vector<int> bidegree;

  auto* validate = app.add_subcommand("validate", "Check the laws of an object file");
  validate->add_option("FILE", file)->required();
  auto* check = app.add_subcommand("check", "Decide a condition");
  check->add_option("CONDITION", kind)->required()->check(
      CLI::IsMember({"2segal", "unital", "sadss", "sadss-groupoid"}));
  check->add_option("FILE", file)->required();
  auto* path = app.add_subcommand("path", "Path construction of a simplicial set");
  path->add_option("FILE", file)->required();
  path->add_option("-o", out_path)->required();
  auto* sdotc = app.add_subcommand("sdot", "S-construction of a Sigma-set");
  sdotc->add_option("FILE", file)->required();
  sdotc->add_option("-o", out_path)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "Verify the unit or counit of the path/S adjunction");
  roundtrip->add_option("FILE", file)->required();
  auto* nerve = app.add_subcommand("nerve", "Nerve of a poset or finite category");
  auto* poset_opt = nerve->add_option("--poset", poset_spec_text, "Covering relations, e.g. 0<1<2;0<3");
  auto* cat_opt = nerve->add_option("--category", category_file, "Category file");
  poset_opt->excludes(cat_opt);
  nerve->add_option("-t", t, "Truncation")->required()->check(CLI::NonNegativeNumber);
  nerve->add_option("-o", out_path)->required();
  auto* nex = app.add_subcommand("nerve-exact", "Exact nerve as a groupoid Sigma-diagram");
  auto* ps_opt = nex->add_option("--pointed-sets", pointed, "Pointed sets of size < N");
  auto* pe_opt = nex->add_option("--proto-exact", proto_file, "Proto-exact category file");
  ps_opt->excludes(pe_opt);
  nex->add_option("--bidegree", bidegree, "A B: levels up to total degree A+1+B")->expected(2)->required();
  nex->add_option("-o", out_path)->required();
  auto* hall = app.add_subcommand("hall", "Structure constants and associativity");
  hall->add_option("FILE", file)->required();
  auto* search = app.add_subcommand("search", "Smallest non-2-Segal object in range");
  search->add_option("--max-x0", x0)->required();
  search->add_option("--max-x1", x1)->required();
  search->add_option("--truncation", trunc)->required();
  search->add_option("-o", out_path);

  std::vector<const char*> argv{"twoseg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << "\n" << app.help();
    return kExitUsage;
  }

  Output o{out, err, g};
  HomOptions hom;
  hom.jobs = g.jobs;
  try {
    ObjectFile obj;
    if (validate->parsed()) {
      obj = parse_object_file(file);
      CheckReport rep = validation_report(obj);
      maybe_render(o, std::get_if<PreaugBisimplicialSet>(&obj.body));
      o.emit(rep, "validate " + obj.kind);
      return rep.failed() ? kExitValidation : kExitPass;
    }
    if (check->parsed()) {
      if (auto bad = load(file, obj)) {
        o.emit(*bad, "validate " + obj.kind);
        return kExitValidation;
      }
      CheckReport rep;
      if (kind == "2segal") rep = check_2segal(expect<TruncatedSimplicialSet>(obj, "sset", "check 2segal"));
      else if (kind == "unital") rep = check_unital(expect<TruncatedSimplicialSet>(obj, "sset", "check unital"));
      else if (kind == "sadss") rep = check_sadss(expect<PreaugBisimplicialSet>(obj, "sigma", "check sadss"));
      else rep = check_sadss_groupoid(expect<GroupoidSigmaDiagram>(obj, "groupoid-sigma", "check sadss-groupoid"));
      maybe_render(o, std::get_if<PreaugBisimplicialSet>(&obj.body));
      o.emit(rep, kind);
      return verdict_exit(rep);
    }
    if (path->parsed()) {
      if (auto bad = load(file, obj)) {
        o.emit(*bad, "validate " + obj.kind);
        return kExitValidation;
      }
      auto d = path_of_sset(expect<TruncatedSimplicialSet>(obj, "sset", "path"));
      write_object_file(out_path, {"sigma", d});
      maybe_render(o, &d);
      CheckReport rep = validate_sigma(d);
      o.emit(rep, "path", {{"output", out_path}});
      return verdict_exit(rep);
    }
    if (sdotc->parsed()) {
      if (auto bad = load(file, obj)) {
        o.emit(*bad, "validate " + obj.kind);
        return kExitValidation;
      }
      const auto& d = expect<PreaugBisimplicialSet>(obj, "sigma", "sdot");
      auto x = sdot(d, hom);
      write_object_file(out_path, {"sset", x});
      maybe_render(o, &d);
      CheckReport rep = validate_simplicial(x);
      o.emit(rep, "sdot", {{"output", out_path}});
      return verdict_exit(rep);
    }
    if (roundtrip->parsed()) {
      if (auto bad = load(file, obj)) {
        o.emit(*bad, "validate " + obj.kind);
        return kExitValidation;
      }
      CheckReport rep;
      if (auto* x = std::get_if<TruncatedSimplicialSet>(&obj.body)) {
        rep = roundtrip_verify(*x, hom);
      } else if (auto* d = std::get_if<PreaugBisimplicialSet>(&obj.body)) {
        rep = roundtrip_verify(*d, hom);
        maybe_render(o, d);
      } else {
        throw UsageError("roundtrip expects an sset or sigma file, got kind '" + obj.kind + "'");
      }
      o.emit(rep, "roundtrip " + obj.kind);
      return verdict_exit(rep);
    }
    if (nerve->parsed()) {
      TruncatedSimplicialSet x;
      if (!poset_opt->empty()) {
        x = nerve_poset(parse_poset_spec(poset_spec_text), t);
      } else if (!cat_opt->empty()) {
        obj = parse_object_file(category_file);
        const auto& c = expect<FiniteCategoryData>(obj, "category", "nerve --category");
        x = nerve_category(c, t);
      } else {
        throw UsageError("nerve needs --poset SPEC or --category FILE");
      }
      write_object_file(out_path, {"sset", x});
      CheckReport rep = validate_simplicial(x);
      o.emit(rep, "nerve", {{"output", out_path}});
      return verdict_exit(rep);
    }
    if (nex->parsed()) {
      if (bidegree.size() != 2 || bidegree[0] < 0 || bidegree[1] < 0)
        throw UsageError("--bidegree takes two non-negative integers");
      const int T = bidegree[0] + 1 + bidegree[1];
      ProtoExactData e;
      if (!ps_opt->empty()) {
        e = builtin_pointed_sets(pointed);
      } else if (!pe_opt->empty()) {
        obj = parse_object_file(proto_file);
        e = expect<ProtoExactData>(obj, "proto-exact", "nerve-exact --proto-exact");
        if (auto bad = validation_report(obj); bad.failed()) {
          o.emit(bad, "validate proto-exact");
          return kExitValidation;
        }
      } else {
        throw UsageError("nerve-exact needs --pointed-sets N or --proto-exact FILE");
      }
      auto d = nerve_exact(e, T);
      write_object_file(out_path, {"groupoid-sigma", d});
      CheckReport rep = validate_groupoid_sigma(d);
      json sizes = json::object();
      for (int a = 0; a < T; ++a)
        for (int b = 0; a + 1 + b <= T; ++b)
          sizes[std::to_string(a) + "," + std::to_string(b)] = d.levels[a][b].object_count();
      o.emit(rep, "nerve-exact", {{"output", out_path}, {"objects", sizes}});
      return verdict_exit(rep);
    }
    if (hall->parsed()) {
      if (auto bad = load(file, obj)) {
        o.emit(*bad, "validate " + obj.kind);
        return kExitValidation;
      }
      auto sc = structure_constants(expect<TruncatedSimplicialSet>(obj, "sset", "hall"));
      CheckReport rep = check_associativity(sc, g.jobs);
      o.emit(rep, "associativity", {{"constants", to_json(sc)}});
      return verdict_exit(rep);
    }
    if (search->parsed()) {
      auto res = search_non_2segal({x0, x1, trunc});
      CheckReport rep;
      rep.scope = "|X_0| <= " + std::to_string(x0) + ", |X_1| <= " + std::to_string(x1) +
                  ", truncation " + std::to_string(trunc);
      rep.checked = res.examined;
      json extra = {{"examined", res.examined}};
      if (!res.found) {
        rep.mark_partial("no non-2-Segal object in range");
        o.emit(rep, "search", extra);
        return kExitFail;
      }
      rep.notes = res.description;
      extra["counterexample"] = res.report.instances.empty() ? json() : to_json(res.report.instances[0]);
      if (!out_path.empty()) {
        write_object_file(out_path, {"sset", res.object});
        extra["output"] = out_path;
      }
      o.emit(rep, "search", extra);
      return kExitPass;
    }
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& ex) {
    err << "validation error: " << ex.what() << "\n";
    return kExitValidation;
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& ex) {
    err << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace twoseg
