#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "radact/catalog.hpp"
#include "radact/injectivity.hpp"
#include "radact/universe.hpp"
#include "radact/verifier.hpp"

namespace radact::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::size_t monoid_max = 3;
  std::size_t act_max = 4;
  std::size_t hull_bound = 6;
  std::string radical = "rG";
  std::string report = "text";
  std::string seed_catalog;
  std::vector<std::string> monoid_files;
  std::vector<std::string> radical_files;
};

// What a command produced: a JSON payload, its text rendering and the exit
// code.
struct Result {
  Json json;
  std::string text;
  int code = kExitOk;
};

std::string elements_string(ElemSet s) {
  std::string out;
  for (Elem x : elements_of(s)) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string map_string(const std::vector<Elem>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? " " : "") + std::to_string(m[i]);
  return out;
}

std::vector<int> parse_indices(const std::string& text, const std::string& what) {
  std::string clean = text;
  std::replace(clean.begin(), clean.end(), ',', ' ');
  std::istringstream in(clean);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "bad " + what + " entry '" + tok + "'");
    }
  }
  return out;
}

class Context {
 public:
  explicit Context(const Options& o) : opts_(o) {
    catalog_.fallback_monoids = [this](const std::string& n) -> std::optional<FiniteMonoid> {
      if (auto i = universe().monoid_by_name(n)) return universe().monoid(*i);
      return std::nullopt;
    };
    catalog_.fallback_acts = [this](const std::string& n) { return universe().act_by_name(n); };
    if (!o.seed_catalog.empty()) catalog_.load_dir(o.seed_catalog);
    for (const std::string& f : o.monoid_files) catalog_.load_file(f);
    for (const std::string& f : o.radical_files) catalog_.load_file(f);
  }

  const Options& opts() const { return opts_; }

  Universe& universe() {
    if (!universe_) {
      universe_ = std::make_unique<Universe>(
          Universe::standard(Bounds{opts_.monoid_max, opts_.act_max, opts_.hull_bound}));
    }
    return *universe_;
  }

  const Catalog& catalog() const { return catalog_; }

  // A file path, a catalogue name or a universe name.
  FiniteAct act(const std::string& spec) {
    if (fs::is_regular_file(spec)) {
      std::ifstream in(spec);
      const fs::path dir = fs::path(spec).parent_path();
      return parse_act(
          in,
          [&](const std::string& name) -> std::optional<FiniteMonoid> {
            if (auto m = catalog_.monoid(name)) return m;
            const fs::path sibling = dir / (name + ".monoid");
            if (fs::is_regular_file(sibling)) {
              std::ifstream min(sibling);
              return parse_monoid(min, sibling.string());
            }
            return std::nullopt;
          },
          spec);
    }
    if (auto a = catalog_.act(spec)) return *a;
    throw Error(ErrorKind::InvalidArgument, "unknown act '" + spec + "' (not a file or catalogue name)");
  }

  Radical radical(const std::string& name) {
    for (const Radical& r : catalog_.radicals()) {
      if (r.name() == name) return r;
    }
    for (const Radical& r : universe().radicals()) {
      if (r.name() == name) return r;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown radical '" + name + "'");
  }

  Radical radical() { return radical(opts_.radical); }

  // The universe lab when the monoid is a member as given, otherwise a lab
  // over all acts of that monoid up to the act bound.
  MonoidLab& lab(const FiniteMonoid& m) {
    Universe& u = universe();
    if (auto i = u.monoid_index(m); i && u.monoid(*i) == m) return u.lab(*i);
    std::string key(m.table().begin(), m.table().end());
    auto& slot = local_labs_[key];
    if (!slot) {
      std::vector<FiniteAct> acts;
      for (std::size_t k = 1; k <= opts_.act_max; ++k) {
        for (FiniteAct& a : enumerate_acts(m, k)) acts.push_back(std::move(a));
      }
      slot = std::make_unique<MonoidLab>(m, std::move(acts), opts_.hull_bound);
    }
    return *slot;
  }

 private:
  Options opts_;
  Catalog catalog_;
  std::unique_ptr<Universe> universe_;
  std::map<std::string, std::unique_ptr<MonoidLab>> local_labs_;
};

Subact parse_subact(const FiniteAct& a, const std::string& text) {
  ElemSet s = 0;
  for (int x : parse_indices(text, "subact")) {
    if (static_cast<std::size_t>(x) >= a.size()) {
      throw Error(ErrorKind::InvalidArgument, "subact element " + std::to_string(x) + " out of range");
    }
    s |= singleton(static_cast<std::size_t>(x));
  }
  return make_subact(a, s);
}

std::vector<Elem> parse_map(const std::string& text) {
  std::vector<Elem> out;
  for (int x : parse_indices(text, "map")) out.push_back(static_cast<Elem>(x));
  return out;
}

Json extension_json(const Extension& e) {
  return Json{{"act", act_json(e.embedding.target)},
              {"embedding", e.embedding.map},
              {"large", e.large},
              {"essential", e.essential},
              {"r_dense", e.r_dense},
              {"r_essential", e.r_essential},
              {"note", e.note}};
}

std::string extension_text(const Extension& e) {
  std::ostringstream out;
  out << print_act(e.embedding.target) << "embedding " << map_string(e.embedding.map) << "\n"
      << "large " << (e.large ? "yes" : "no") << "\n";
  if (!e.radical.empty()) {
    out << "r-dense " << (e.r_dense ? "yes" : "no") << "\n"
        << "r-essential " << (e.r_essential ? "yes" : "no") << "\n";
  }
  if (!e.note.empty()) out << "note " << e.note << "\n";
  return out.str();
}

Result yes_no(const std::string& property, bool value) {
  return Result{Json{{property, value}}, property + " " + (value ? "yes" : "no") + "\n", kExitOk};
}

Json taxonomy_json(const Taxonomy& t) {
  Json flags{{"hereditary", t.hereditary},         {"pre_hereditary", t.pre_hereditary},
             {"weakly_hereditary", t.weakly_hereditary}, {"zero_hereditary", t.zero_hereditary},
             {"pre_kurosh", t.pre_kurosh},         {"kurosh_amitsur", t.kurosh_amitsur}};
  Json w = Json::object();
  for (const auto& [k, v] : t.witnesses) w[k] = v;
  return Json{{"flags", flags}, {"witnesses", w}};
}

std::string taxonomy_text(const std::string& label, const Taxonomy& t) {
  std::ostringstream out;
  const Json j = taxonomy_json(t);
  out << label << ":";
  for (auto& [k, v] : j["flags"].items()) out << " " << k << "=" << (v.get<bool>() ? "yes" : "no");
  out << "\n";
  for (const auto& [k, v] : t.witnesses) out << "  not " << k << ": " << v << "\n";
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Radicals, closures and injectivity for finite monoid acts", "radact"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--monoid-max", o.monoid_max, "Largest monoid order in the universe")
      ->check(CLI::PositiveNumber);
  app.add_option("--act-max", o.act_max, "Largest act size in the universe")
      ->check(CLI::PositiveNumber);
  app.add_option("--hull-bound", o.hull_bound, "Largest act examined by hull searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--radical", o.radical, "Radical name (delta, nabla, rG, tL_rG or a loaded table)");
  app.add_option("--report", o.report, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed-catalog", o.seed_catalog, "Directory of .monoid/.act/.radical files")
      ->check(CLI::ExistingDirectory);
  app.add_option("--monoid-file", o.monoid_files, "Extra monoid file")->check(CLI::ExistingFile);
  app.add_option("--radical-file", o.radical_files, "Extensional radical table")
      ->check(CLI::ExistingFile);

  std::function<Result(Context&)> handler;
  std::string act_spec, subact_spec, target_spec, map_spec, mode = "auto", instance;
  std::vector<std::string> files, acts, links, theorems;
  std::optional<std::size_t> bound;
  bool all = false, mutant = false, list = false, print = false;

  auto needs_act = [&](CLI::App* sub) { sub->add_option("--act", act_spec, "Act file or name")->required(); };

  CLI::App* validate = app.add_subcommand("validate", "Parse and validate catalogue files");
  validate->add_option("files", files, "Monoid, act or radical-table files")->required();
  validate->callback([&] {
    handler = [&](Context& ctx) {
      Result r{Json::array(), "", kExitOk};
      for (const std::string& f : files) {
        Catalog cat = ctx.catalog();
        try {
          std::ifstream probe(f);
          if (!probe) throw Error(ErrorKind::InvalidArgument, "cannot open '" + f + "'");
          const CatalogKind kind = detect_kind(probe, f);
          if (kind == CatalogKind::Act) {
            const FiniteAct a = ctx.act(f);
            r.text += f + ": ok act " + a.name() + " over " + a.monoid().name() + "\n";
            r.json.push_back(Json{{"file", f}, {"ok", true}, {"kind", "act"}, {"name", a.name()}});
          } else {
            std::ifstream in(f);
            const char* k = kind == CatalogKind::Monoid ? "monoid" : "radical";
            const std::string head =
                kind == CatalogKind::Monoid
                    ? parse_monoid(in, f).name()
                    : parse_radical_table(in, [&](const std::string& n) { return cat.act(n); }, f)
                          .name();
            r.text += f + ": ok " + k + " " + head + "\n";
            r.json.push_back(Json{{"file", f}, {"ok", true}, {"kind", k}, {"name", head}});
          }
        } catch (const Error& e) {
          r.text += f + ": " + to_string(e.kind()) + ": " + e.what() + "\n";
          r.json.push_back(Json{{"file", f}, {"ok", false}, {"error", to_string(e.kind())},
                                {"message", e.what()}});
          r.code = kExitViolation;
        }
      }
      return r;
    };
  });

  CLI::App* congruences = app.add_subcommand("congruences", "List Con(A)");
  needs_act(congruences);
  congruences->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      Result r{Json::array(), "", kExitOk};
      for (const Congruence& c : all_congruences(a, std::max(a.size(), kDefaultCongruenceBound))) {
        r.json.push_back(c.to_string());
        r.text += c.to_string() + "\n";
      }
      return r;
    };
  });

  CLI::App* radical = app.add_subcommand("radical", "Print r(A)");
  needs_act(radical);
  radical->callback([&] {
    handler = [&](Context& ctx) {
      const Radical rad = ctx.radical();
      const Congruence c = rad(ctx.act(act_spec));
      return Result{Json{{"radical", rad.name()}, {"partition", c.to_string()}}, c.to_string() + "\n",
                    kExitOk};
    };
  });

  CLI::App* classify = app.add_subcommand("classify", "Taxonomy flags of a radical over the universe");
  classify->callback([&] {
    handler = [&](Context& ctx) {
      const Radical rad = ctx.radical();
      Universe& u = ctx.universe();
      Result r{Json{{"radical", rad.name()}}, "", kExitOk};
      r.json["universe"] = taxonomy_json(universe_taxonomy(u, rad));
      r.text = taxonomy_text(rad.name(), universe_taxonomy(u, rad));
      Json per = Json::object();
      for (std::size_t i = 0; i < u.num_monoids(); ++i) {
        const Taxonomy& t = u.lab(i).taxonomy(rad);
        per[u.monoid(i).name()] = taxonomy_json(t);
        r.text += taxonomy_text("  " + u.monoid(i).name(), t);
      }
      r.json["monoids"] = per;
      return r;
    };
  });

  CLI::App* closure_cmd = app.add_subcommand("closure", "Print c^r_A(B)");
  needs_act(closure_cmd);
  closure_cmd->add_option("--subact", subact_spec, "Elements of B")->required();
  closure_cmd->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      const Subact c = closure(ctx.radical(), parse_subact(a, subact_spec));
      return Result{Json{{"closure", c.elements()}}, elements_string(c.members) + "\n", kExitOk};
    };
  });

  CLI::App* dense = app.add_subcommand("dense", "Is B r-dense in A");
  needs_act(dense);
  dense->add_option("--subact", subact_spec, "Elements of B")->required();
  dense->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      return yes_no("r-dense", is_r_dense(ctx.radical(), parse_subact(a, subact_spec)));
    };
  });

  CLI::App* injective = app.add_subcommand("injective", "Is A injective");
  needs_act(injective);
  injective->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      return yes_no("injective", ctx.lab(a.monoid()).injective(a));
    };
  });

  CLI::App* r_injective = app.add_subcommand("r-injective", "Is A r-injective");
  needs_act(r_injective);
  r_injective->add_option("--mode", mode, "Decision mode")
      ->check(CLI::IsMember({"auto", "criterion", "universe"}));
  r_injective->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      const InjMode m = mode == "criterion" ? InjMode::Criterion
                        : mode == "universe" ? InjMode::Universe
                                             : InjMode::Auto;
      return yes_no("r-injective", ctx.lab(a.monoid()).r_injective(ctx.radical(), a, m));
    };
  });

  CLI::App* weakly = app.add_subcommand("weakly-injective", "Is A weakly injective");
  needs_act(weakly);
  weakly->callback([&] {
    handler = [&](Context& ctx) { return yes_no("weakly-injective", is_weakly_injective(ctx.act(act_spec))); };
  });

  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", bound, "Size bound (defaults to --hull-bound)")->check(CLI::PositiveNumber);
  };

  CLI::App* hull = app.add_subcommand("hull", "Injective hull within a size bound");
  needs_act(hull);
  add_bound(hull);
  hull->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      const std::size_t k = bound.value_or(ctx.opts().hull_bound);
      try {
        const Extension e = injective_hull(a, k);
        return Result{extension_json(e), extension_text(e), kExitOk};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundExceeded) throw;
        return Result{Json{{"hull", nullptr}, {"bound", k}}, std::string(e.what()) + "\n", kExitViolation};
      }
    };
  });

  CLI::App* r_hull = app.add_subcommand("r-hull", "r-injective hull within a size bound");
  needs_act(r_hull);
  add_bound(r_hull);
  r_hull->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct a = ctx.act(act_spec);
      const std::size_t k = bound.value_or(ctx.opts().hull_bound);
      try {
        const Extension e = r_injective_hull(ctx.radical(), a, k, ctx.lab(a.monoid()));
        return Result{extension_json(e), extension_text(e), kExitOk};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BoundExceeded) throw;
        return Result{Json{{"hull", nullptr}, {"bound", k}}, std::string(e.what()) + "\n", kExitViolation};
      }
    };
  });

  CLI::App* pushout = app.add_subcommand("pushout", "Transfer an r-dense inclusion along a hom");
  needs_act(pushout);
  pushout->add_option("--subact", subact_spec, "Elements of the r-dense subact A' of B")->required();
  pushout->add_option("--target", target_spec, "Act C")->required();
  pushout->add_option("--map", map_spec, "f : A' -> C on the local indices of A'")->required();
  pushout->callback([&] {
    handler = [&](Context& ctx) {
      const FiniteAct b = ctx.act(act_spec);
      const FiniteAct c = ctx.act(target_spec);
      const EmbeddedSubact e = as_act(parse_subact(b, subact_spec));
      const ActHom f = make_hom(e.act, c, parse_map(map_spec));
      const Pushout p = transfer_pushout(ctx.radical(), e.inclusion, f);
      Json j{{"d", act_json(p.d)}, {"u", p.u.map}, {"v", p.v.map}};
      return Result{j, print_act(p.d) + "u " + map_string(p.u.map) + "\nv " + map_string(p.v.map) + "\n",
                    kExitOk};
    };
  });

  CLI::App* limit = app.add_subcommand("limit", "Direct limit of a finite chain");
  limit->add_option("--act", acts, "Acts of the chain in order")->required();
  limit->add_option("--link", links, "Link maps A_i -> A_{i+1}");
  limit->callback([&] {
    handler = [&](Context& ctx) {
      std::vector<FiniteAct> chain;
      for (const std::string& s : acts) chain.push_back(ctx.act(s));
      if (links.size() + 1 != chain.size()) {
        throw Error(ErrorKind::InvalidArgument, "a chain of n acts needs n-1 --link maps");
      }
      std::vector<ActHom> homs;
      for (std::size_t k = 0; k < links.size(); ++k) {
        homs.push_back(make_hom(chain[k], chain[k + 1], parse_map(links[k])));
      }
      const DirectLimit lim = direct_limit(DirectedChain::make(chain, homs));
      Json legs = Json::array();
      std::string text = print_act(lim.act.renamed("L"));
      for (std::size_t k = 0; k < lim.legs.size(); ++k) {
        legs.push_back(lim.legs[k].map);
        text += "leg " + std::to_string(k) + " " + map_string(lim.legs[k].map) + "\n";
      }
      return Result{Json{{"limit", act_json(lim.act)}, {"legs", legs}}, text, kExitOk};
    };
  });

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate the universe");
  enumerate->add_flag("--list", list, "List act names");
  enumerate->add_flag("--print", print, "Print every monoid and act as a catalogue file");
  enumerate->callback([&] {
    handler = [&](Context& ctx) {
      Universe& u = ctx.universe();
      Result r{Json{{"monoids", Json::array()}, {"acts", u.num_acts()}}, "", kExitOk};
      for (std::size_t i = 0; i < u.num_monoids(); ++i) {
        const FiniteMonoid& m = u.monoid(i);
        std::vector<std::size_t> by_size(ctx.opts().act_max, 0);
        Json names = Json::array();
        for (const FiniteAct& a : u.acts(i)) {
          ++by_size[a.size() - 1];
          names.push_back(a.name());
        }
        r.json["monoids"].push_back(Json{{"name", m.name()}, {"order", m.size()},
                                         {"acts_by_size", by_size}, {"acts", names}});
        if (print) {
          r.text += print_monoid(m) + "\n";
          for (const FiniteAct& a : u.acts(i)) r.text += print_act(a) + "\n";
          continue;
        }
        r.text += m.name() + " order " + std::to_string(m.size()) + " acts by size";
        for (std::size_t n : by_size) r.text += " " + std::to_string(n);
        r.text += "\n";
        if (list) {
          for (const FiniteAct& a : u.acts(i)) r.text += "  " + a.name() + "\n";
        }
      }
      if (!print) r.text += std::to_string(u.num_monoids()) + " monoids, " + std::to_string(u.num_acts()) + " acts\n";
      return r;
    };
  });

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run theorem checkers over the universe");
  auto* all_flag = verify_cmd->add_flag("--all", all, "Run every checker");
  verify_cmd->add_option("--theorem", theorems, "Checker id (repeatable)")->excludes(all_flag);
  verify_cmd->add_option("--instance", instance, "Evaluate a single instance key");
  verify_cmd->add_flag("--mutant", mutant, "Replace the radicals by a corrupted copy of --radical");
  verify_cmd->callback([&] {
    handler = [&](Context& ctx) {
      if (!all && theorems.empty()) throw CLI::RequiredError("--all or --theorem");
      Universe& u = ctx.universe();
      for (const Radical& r : ctx.catalog().radicals()) u.add_radical(r);
      std::string note;
      if (mutant) {
        std::string victim;
        Radical m = mutant_radical(u, ctx.radical(), &victim);
        note = "mutant " + m.name() + " corrupted at " + victim + "\n";
        u.set_radicals({m});
      }
      std::optional<std::string> only;
      if (!instance.empty()) {
        if (theorems.size() != 1) throw CLI::ValidationError("--instance", "needs exactly one --theorem");
        only = instance;
      }
      for (const std::string& id : theorems) find_checker(id);
      const SuiteReport s = run_suite(u, theorems, only);
      return Result{to_json(s), note + to_text(s), s.any_violated() ? kExitViolation : kExitOk};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx(o);
    Result r = handler(ctx);
    if (o.report == "json") {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace radact::cli
