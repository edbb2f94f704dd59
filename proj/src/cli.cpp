#include "refsev/cli.hpp"

#include "refsev/chrecursion.hpp"
#include "refsev/engines.hpp"
#include "refsev/floordiagrams.hpp"
#include "refsev/gfseries.hpp"
#include "refsev/invariants.hpp"
#include "refsev/json_io.hpp"
#include "refsev/templates.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace refsev {

namespace {

using nlohmann::json;

struct ArgError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string surface = "p2";
  int d = -1;
  int c = 0;
  int m = -1;
  long delta = -1;
  std::string alpha;
  std::string beta;
  std::string engine;
  std::string y = "symbolic";
  bool json = false;
  bool record = false;
  long max_delta = -1;
  std::string grid;
  std::string cache_dir;
};

TangencySeq parse_seq(const std::string& text) {
  std::vector<int> v;
  if (text.empty()) return TangencySeq();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || x < 0) throw ArgError("bad tangency sequence '" + text + "'");
    v.push_back(x);
  }
  return TangencySeq(std::move(v));
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ArgError("grid must look like d1..d2");
  try {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw ArgError("empty grid " + text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ArgError("grid must look like d1..d2");
  }
}

Surface surface_for(const Options& o, int d) {
  if (d < 0) throw ArgError("--d is required");
  Surface s;
  if (o.surface == "p2") {
    s = Surface::p2(d);
  } else if (o.surface == "hirzebruch") {
    if (o.m == -1) throw ArgError("--m is required for hirzebruch");
    s = Surface::hirzebruch(o.m, o.c, d);
  } else if (o.surface == "p11m") {
    if (o.m == -1) throw ArgError("--m is required for p11m");
    s = Surface::wps(o.m, d);
  } else {
    throw ArgError("unknown surface '" + o.surface + "'");
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ArgError(e.what());
  }
  return s;
}

long require_delta(const Options& o) {
  if (o.delta < 0) throw ArgError("--delta >= 0 is required");
  return o.delta;
}

Engine engine_or(const Options& o, Engine fallback) {
  if (o.engine.empty()) return fallback;
  try {
    return parse_engine(o.engine);
  } catch (const std::invalid_argument& e) {
    throw ArgError(e.what());
  }
}

// Value at y = -1 of a symmetric polynomial with rational coefficients.
Rational at_minus_one(const RatLaurent& p) {
  Rational re = 0;
  Rational im = 0;
  for (const auto& [e, c] : p.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      default: im -= c; break;
    }
  }
  if (im != 0) throw std::invalid_argument("value at y = -1 is not real");
  return re;
}

class Printer {
 public:
  explicit Printer(const Options& o) : mode_(o.y) {
    if (mode_ != "symbolic" && mode_ != "1" && mode_ != "-1") throw ArgError("--y must be 1, -1 or symbolic");
  }
  bool symbolic() const { return mode_ == "symbolic"; }

  std::string text(const LaurentPoly& p) const {
    if (mode_ == "1") return p.sum_of_coefficients().str();
    if (mode_ == "-1") return eval_special(p, -1).str();
    return to_string(p);
  }
  json js(const LaurentPoly& p) const {
    if (symbolic()) return to_json(p);
    return text(p);
  }
  RatLaurent reduce(const RatLaurent& p) const {
    if (mode_ == "1") return RatLaurent(p.sum_of_coefficients());
    if (mode_ == "-1") return RatLaurent(at_minus_one(p));
    return p;
  }
  json js(const RatLaurent& p) const {
    const RatLaurent r = reduce(p);
    if (!symbolic()) return r.coeff(0).str();
    json j = json::object();
    for (const auto& [e, c] : r.terms()) j[std::to_string(e)] = c.str();
    return j;
  }

 private:
  std::string mode_;
};

std::string multipoly_text(const MultiPoly& p, const std::vector<std::string>& vars, const Printer& pr) {
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const RatLaurent c = pr.reduce(it->second);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (it->first[v] == 0) continue;
      out += " " + vars[v];
      if (it->first[v] > 1) out += "^" + std::to_string(it->first[v]);
    }
  }
  return out.empty() ? "0" : out;
}

json surface_json(const Surface& s) {
  json j = {{"d", s.d}};
  switch (s.kind) {
    case SurfaceKind::P2: j["surface"] = "p2"; break;
    case SurfaceKind::Hirzebruch:
      j["surface"] = "hirzebruch";
      j["m"] = s.m;
      j["c"] = s.c;
      break;
    case SurfaceKind::WPS:
      j["surface"] = "p11m";
      j["m"] = s.m;
      break;
  }
  return j;
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Context {
  const Options& o;
  std::ostream& out;
  std::ostream& err;
  Printer pr;
};

int cmd_severi(Context& ctx, bool welschinger_only) {
  const Options& o = ctx.o;
  const Surface s = surface_for(o, o.d);
  const long delta = require_delta(o);
  const Engine e = engine_or(o, Engine::CH);
  const auto t0 = Clock::now();
  const LaurentPoly p = severi_by(e, s, delta);
  const double ms = ms_since(t0);
  ctx.err << "elapsed_ms=" << ms << "\n";
  if (welschinger_only) {
    const std::string v = eval_special(p, -1).str();
    if (o.json) {
      ctx.out << json(v).dump() << "\n";
    } else {
      ctx.out << v << "\n";
    }
    return 0;
  }
  if (o.json && o.record) {
    json rec = {{"request", surface_json(s)}, {"engine", engine_name(e)}, {"result", ctx.pr.js(p)}, {"elapsed_ms", ms}};
    rec["request"]["delta"] = delta;
    ctx.out << rec.dump() << "\n";
  } else if (o.json) {
    ctx.out << ctx.pr.js(p).dump() << "\n";
  } else {
    ctx.out << ctx.pr.text(p) << "\n";
  }
  return 0;
}

int cmd_relative(Context& ctx) {
  const Options& o = ctx.o;
  const Surface s = surface_for(o, o.d);
  const long delta = require_delta(o);
  const TangencySeq alpha = parse_seq(o.alpha);
  const TangencySeq beta = parse_seq(o.beta);
  if (alpha.weighted() + beta.weighted() != invariants(s).HL)
    throw ArgError("I alpha + I beta must equal " + std::to_string(invariants(s).HL));
  const Engine e = engine_or(o, Engine::CH);
  const auto t0 = Clock::now();
  LaurentPoly p;
  if (e == Engine::CH) {
    p = relative_severi(CHKey(s, alpha, beta, delta));
  } else if (e == Engine::Floor) {
    if (s.kind != SurfaceKind::P2) throw DomainError("relative floor diagrams need surface p2");
    p = comb_relative_severi(s.d, delta, alpha, beta);
  } else {
    throw DomainError("relative degrees need engine ch or floor");
  }
  const double ms = ms_since(t0);
  ctx.err << "elapsed_ms=" << ms << "\n";
  if (o.json && o.record) {
    json rec = {{"request", surface_json(s)}, {"engine", engine_name(e)}, {"result", ctx.pr.js(p)}, {"elapsed_ms", ms}};
    rec["request"]["delta"] = delta;
    rec["request"]["alpha"] = alpha.entries();
    rec["request"]["beta"] = beta.entries();
    ctx.out << rec.dump() << "\n";
  } else if (o.json) {
    ctx.out << ctx.pr.js(p).dump() << "\n";
  } else {
    ctx.out << ctx.pr.text(p) << "\n";
  }
  return 0;
}

int cmd_diagrams(Context& ctx) {
  const Options& o = ctx.o;
  const Surface s = surface_for(o, o.d);
  const long delta = require_delta(o);
  const auto [c, m] = floor_parameters(s);
  std::vector<DiagramRecord> records = enumerate_diagrams(s, delta);
  std::sort(records.begin(), records.end(),
            [](const DiagramRecord& a, const DiagramRecord& b) { return a.diagram < b.diagram; });
  json rows = json::array();
  LaurentPoly total;
  for (const auto& r : records) {
    const LaurentPoly mult = diagram_mult(r.diagram);
    const BigInt nu = diagram_markings(r.diagram, s);
    total += mult * nu;
    if (o.json) {
      rows.push_back({{"diagram", r.diagram.to_string()},
                      {"cogenus", diagram_cogenus(r.diagram, c, m)},
                      {"mult", ctx.pr.js(mult)},
                      {"nu", nu.str()}});
    } else {
      ctx.out << r.diagram.to_string() << "; cogenus=" << diagram_cogenus(r.diagram, c, m)
              << "; mult=" << ctx.pr.text(mult) << "; nu=" << nu << "\n";
    }
  }
  if (o.json) {
    ctx.out << json({{"diagrams", rows}, {"total", ctx.pr.js(total)}}).dump() << "\n";
  } else {
    ctx.out << "total=" << ctx.pr.text(total) << "\n";
  }
  return 0;
}

int cmd_templates(Context& ctx) {
  const Options& o = ctx.o;
  long lo = o.delta;
  long hi = o.delta;
  if (o.max_delta >= 0) {
    lo = 1;
    hi = o.max_delta;
  }
  if (hi < 0) throw ArgError("--delta or --max-delta is required");
  json rows = json::array();
  for (long delta = std::max(lo, 1L); delta <= hi; ++delta) {
    for (const Template& g : enumerate_templates(static_cast<int>(delta))) {
      const TemplateStats st = template_stats(g);
      if (o.json) {
        rows.push_back({{"edges", g.to_string()},
                        {"length", st.length},
                        {"cogenus", st.cogenus},
                        {"mult", ctx.pr.js(st.mult)},
                        {"eps0", st.eps0},
                        {"eps1", st.eps1},
                        {"kappa", st.kappa},
                        {"kmin", st.kmin}});
      } else {
        ctx.out << g.to_string() << "; length=" << st.length << "; cogenus=" << st.cogenus
                << "; mult=" << ctx.pr.text(st.mult) << "; eps0=" << st.eps0 << "; eps1=" << st.eps1 << "; kappa=[";
        for (std::size_t i = 0; i < st.kappa.size(); ++i) ctx.out << (i ? "," : "") << st.kappa[i];
        ctx.out << "]; kmin=" << st.kmin << "\n";
      }
    }
  }
  if (o.json) ctx.out << rows.dump() << "\n";
  return 0;
}

int cmd_nodepoly(Context& ctx) {
  const Options& o = ctx.o;
  const long delta = require_delta(o);
  if (delta < 1) throw ArgError("node polynomials need --delta >= 1");
  const Engine e = engine_or(o, Engine::Template);
  const int dl = static_cast<int>(delta);
  const auto t0 = Clock::now();
  if (o.surface == "p2") {
    const DPoly p = node_polynomial_p2(dl, e);
    ctx.err << "elapsed_ms=" << ms_since(t0) << "\n";
    if (o.json) {
      json j = json::object();
      for (int k = 0; k <= p.degree(); ++k) j[std::to_string(k)] = ctx.pr.js(p.coeff(k));
      ctx.out << j.dump() << "\n";
    } else {
      std::vector<RatLaurent> reduced;
      for (const auto& c : p.coeffs()) reduced.push_back(ctx.pr.reduce(c));
      ctx.out << to_string(DPoly(reduced)) << "\n";
    }
    return 0;
  }
  MultiPoly p;
  std::vector<std::string> vars;
  if (o.surface == "hirzebruch") {
    p = node_polynomial_hirzebruch(dl, e);
    vars = {"c", "m", "d"};
  } else if (o.surface == "p11m") {
    p = node_polynomial_wps(dl, e);
    vars = {"m", "d"};
  } else {
    throw ArgError("unknown surface '" + o.surface + "'");
  }
  ctx.err << "elapsed_ms=" << ms_since(t0) << "\n";
  if (o.json) {
    json j = json::object();
    for (const auto& [exps, c] : p) {
      std::string key;
      for (std::size_t v = 0; v < exps.size(); ++v) key += (v ? "," : "") + std::to_string(exps[v]);
      j[key] = ctx.pr.js(c);
    }
    ctx.out << j.dump() << "\n";
  } else {
    ctx.out << multipoly_text(p, vars, ctx.pr) << "\n";
  }
  return 0;
}

int cmd_irreducible(Context& ctx) {
  const Options& o = ctx.o;
  if (o.surface != "p2") throw DomainError("irreducible degrees are only available on p2");
  const Surface s = surface_for(o, o.d);
  const long delta = require_delta(o);
  const LaurentPoly p = irreducible_severi(s.d, delta);
  ctx.out << (o.json ? ctx.pr.js(p).dump() : ctx.pr.text(p)) << "\n";
  return 0;
}

int cmd_gfcheck(Context& ctx) {
  const Options& o = ctx.o;
  const Surface s = surface_for(o, o.d);
  const long hi = o.max_delta >= 0 ? o.max_delta : (o.delta >= 0 ? o.delta : kEmbeddedOrder);
  if (hi > kEmbeddedOrder) throw DomainError("generating functions only known for delta <= " + std::to_string(kEmbeddedOrder));
  int status = 0;
  json rows = json::array();
  for (long delta = 0; delta <= hi; ++delta) {
    const LaurentPoly ch = severi(s, delta);
    json row = {{"delta", delta}, {"ch", ctx.pr.js(ch)}};
    std::ostringstream line;
    line << "delta=" << delta;
    if (auto why = gf_region_violation(s, delta); why && delta > 0) {
      row["status"] = "skipped";
      row["reason"] = *why;
      line << " skipped (" << *why << ") ch=" << ctx.pr.text(ch);
    } else {
      const LaurentPoly gf = severi_by(Engine::GF, s, delta);
      row["gf"] = ctx.pr.js(gf);
      if (gf == ch) {
        row["status"] = "agree";
        line << " agree " << ctx.pr.text(ch);
      } else {
        row["status"] = "disagree";
        line << " DISAGREE gf=" << ctx.pr.text(gf) << " ch=" << ctx.pr.text(ch);
        status = 1;
      }
    }
    if (o.json) {
      rows.push_back(row);
    } else {
      ctx.out << line.str() << "\n";
    }
  }
  if (o.json) ctx.out << rows.dump() << "\n";
  return status;
}

int cmd_crosscheck(Context& ctx) {
  const Options& o = ctx.o;
  const auto [dlo, dhi] = o.grid.empty() ? std::pair<int, int>{1, 6} : parse_grid(o.grid);
  const long hi = o.max_delta >= 0 ? o.max_delta : 3;
  json rows = json::array();
  for (int d = dlo; d <= dhi; ++d) {
    const Surface s = surface_for(o, d);
    for (long delta = 0; delta <= hi; ++delta) {
      const LaurentPoly ch = severi(s, delta);
      std::vector<std::string> used{"ch"};
      std::vector<Engine> others{Engine::Template, Engine::Floor, Engine::GF};
      for (Engine e : others) {
        LaurentPoly v;
        try {
          v = severi_by(e, s, delta);
        } catch (const DomainError&) {
          continue;
        }
        used.push_back(engine_name(e));
        if (v != ch) {
          ctx.out << "DISAGREE " << s.describe() << " delta=" << delta << " ch=" << ctx.pr.text(ch) << " "
                  << engine_name(e) << "=" << ctx.pr.text(v) << "\n";
          return 1;
        }
      }
      std::string names;
      for (const auto& n : used) names += (names.empty() ? "" : ",") + n;
      if (o.json) {
        json row = surface_json(s);
        row["delta"] = delta;
        row["engines"] = used;
        row["result"] = ctx.pr.js(ch);
        rows.push_back(row);
      } else {
        ctx.out << s.describe() << " delta=" << delta << " engines=" << names << " " << ctx.pr.text(ch) << "\n";
      }
    }
  }
  if (o.json) ctx.out << rows.dump() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Refined Severi degrees of P2, Hirzebruch surfaces and P(1,1,m)", "refsev"};
  app.require_subcommand(1);
  app.add_option("--cache-dir", o.cache_dir, "Directory holding the persistent recursion table");

  auto surface_opts = [&](CLI::App* sub) {
    sub->add_option("--surface", o.surface, "p2, hirzebruch or p11m");
    sub->add_option("--d", o.d, "Degree (coefficient of H)");
    sub->add_option("--c", o.c, "Coefficient of F (hirzebruch)");
    sub->add_option("--m", o.m, "Surface parameter m");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "Number of nodes");
    sub->add_option("--y", o.y, "1, -1 or symbolic");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--cache-dir", o.cache_dir, "Directory holding the persistent recursion table");
  };

  std::map<std::string, std::function<int(Context&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, std::function<int(Context&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    surface_opts(sub);
    common(sub);
    handlers[name] = std::move(fn);
    return sub;
  };

  auto* sev = add("severi", "Refined Severi degree", [](Context& c) { return cmd_severi(c, false); });
  sev->add_option("--engine", o.engine, "ch, template, floor or gf");
  sev->add_flag("--record", o.record, "With --json, wrap the result with the request echo and timing");
  auto* rel = add("relative", "Relative refined Severi degree", cmd_relative);
  rel->add_option("--alpha", o.alpha, "Fixed tangencies, e.g. 1,0,2");
  rel->add_option("--beta", o.beta, "Free tangencies");
  rel->add_option("--engine", o.engine, "ch or floor");
  rel->add_flag("--record", o.record, "With --json, wrap the result with the request echo and timing");
  add("diagrams", "List marked floor diagrams", cmd_diagrams);
  add("templates", "List templates with their statistics", cmd_templates)
      ->add_option("--max-delta", o.max_delta, "All cogenera up to this bound");
  add("nodepoly", "Refined node polynomial", cmd_nodepoly)->add_option("--engine", o.engine, "Sampling engine");
  add("irreducible", "Irreducible refined Severi degree on P2", cmd_irreducible);
  add("welschinger", "Tropical Welschinger number (value at y = -1)", [](Context& c) { return cmd_severi(c, true); })
      ->add_option("--engine", o.engine, "ch, template, floor or gf");
  add("gfcheck", "Compare generating functions with the recursion", cmd_gfcheck)
      ->add_option("--max-delta", o.max_delta, "Largest delta");
  auto* cc = add("crosscheck", "Compare all engines on a grid", cmd_crosscheck);
  cc->add_option("--max-delta", o.max_delta, "Largest delta (default 3)");
  cc->add_option("--grid", o.grid, "Degrees d1..d2 (default 1..6)");

  std::vector<std::string> argv_store{"refsev"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string cache_file =
      o.cache_dir.empty() ? std::string() : (std::filesystem::path(o.cache_dir) / "ch-memo.json").string();
  try {
    if (!cache_file.empty()) shared_ch_engine().import_records(load_cache(cache_file));
    Context ctx{o, out, err, Printer(o)};
    int status = 0;
    for (CLI::App* sub : app.get_subcommands()) status = handlers.at(sub->get_name())(ctx);
    if (!cache_file.empty()) {
      std::filesystem::create_directories(o.cache_dir);
      save_cache(cache_file, shared_ch_engine().export_records());
    }
    return status;
  } catch (const DomainError& e) {
    err << "outside validity region: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    err << "inconsistent: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "argument error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace refsev
