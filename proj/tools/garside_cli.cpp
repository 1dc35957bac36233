// garside command-line tool: build and query Garside structures, run the
// structural verification suite, and export conjugacy and curve graphs.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "garside/cache.hpp"
#include "garside/catalog.hpp"
#include "garside/conjugacy.hpp"
#include "garside/element.hpp"
#include "garside/parabolic.hpp"

using namespace garside;
using nlohmann::json;

namespace {

struct Ctx {
  std::string structure_path;
  std::string catalog;
  bool json_out = false;
  int threads = 1;
  unsigned long long seed = 1;
  int length = 8;
  bool force = false;
  std::optional<StructureCache> cache;

  static std::string resolve_cache_path(const std::string& p) {
    // bare filenames resolve against GARSIDE_CACHE_DIR when it is set
    if (p.find('/') == std::string::npos) {
      if (const char* dir = std::getenv("GARSIDE_CACHE_DIR"))
        return std::string(dir) + "/" + p;
    }
    return p;
  }

  const CatalogEntry& entry() {
    if (!cache) {
      if (!structure_path.empty()) {
        cache = load_cache(resolve_cache_path(structure_path), CatalogOptions{});
      } else if (!catalog.empty()) {
        StructureCache c;
        c.catalog_name = catalog;
        c.entry = make_catalog(catalog, CatalogOptions{});
        c.stamps.balanced = c.stamps.lattice = true;
        cache = std::move(c);
      } else {
        throw std::invalid_argument(
            "no structure given: pass --structure cache.json or --catalog name");
      }
    }
    return cache->entry;
  }
  const GarsideStructure& gs() { return *entry().structure; }

  VerifiedStructure verified() {
    const auto& e = entry();
    if (force) return override_verification(e.structure);
    if (cache->stamps.lcm_garside && cache->stamps.support_preserving) {
      VerifiedStructure v;
      v.gs = e.structure;
      v.lcm_garside = v.support_preserving = true;
      return v;
    }
    SupportCheckOptions so;
    so.seed = seed;
    so.max_length = length;
    so.threads = threads;
    return verify_for_parabolics(e.structure, so);
  }
};

Element parse_element(const GarsideStructure& gs, const std::string& text) {
  return Element::from_signed_word(gs, parse_word(gs, text));
}

json element_json(const Element& x) {
  json j;
  j["inf"] = x.inf();
  j["sup"] = x.sup();
  j["nf"] = x.str();
  return j;
}

ParabolicHandle parse_handle(const GarsideStructure& gs,
                             const std::string& text) {
  // {"X": ["s1", "s2"], "g": "word"}  or a bare comma list of atoms
  if (!text.empty() && text[0] == '{') {
    json j = json::parse(text);
    std::vector<std::string> names = j.at("X").get<std::vector<std::string>>();
    Element g = Element::identity(gs);
    if (j.contains("g")) g = parse_element(gs, j["g"].get<std::string>());
    return ParabolicHandle::conjugated(gs, closure(gs, atom_set(gs, names)), g);
  }
  std::vector<std::string> names;
  std::string cur;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (!isspace((unsigned char)ch)) {
      cur += ch;
    }
  }
  return ParabolicHandle::standard(gs, closure(gs, atom_set(gs, names)));
}

json handle_json(const ParabolicHandle& h) {
  json j;
  std::vector<std::string> names;
  h.standard_part().for_each([&](size_t a) {
    names.push_back(h.structure().atom_name((int)a));
  });
  j["X"] = names;
  j["g"] = h.conjugator().str();
  if (!h.is_trivial()) {
    j["z"] = h.z().str();
    j["e"] = h.exponent();
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside structure computations for complex braid groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Ctx ctx;
  app.add_option("--structure", ctx.structure_path, "structure cache file");
  app.add_option("--catalog", ctx.catalog, "catalog name (bypasses the cache)");
  app.add_flag("--json", ctx.json_out, "machine-readable output");
  app.add_option("--threads", ctx.threads, "worker threads for verification");
  app.add_option("--seed", ctx.seed, "seed for sampled checks");
  app.add_option("--len", ctx.length, "word length for sampled checks");
  app.add_flag("--force", ctx.force,
               "skip the verified-structure gate for parabolic operations");

  // ---- build ----
  auto* cb = app.add_subcommand("build", "build a catalog structure");
  std::string build_name, out_path;
  bool fast = false;
  bool allow_large = false;
  std::size_t element_cap = 1000000;
  cb->add_option("name", build_name, "catalog name or .refl file")->required();
  cb->add_option("--out", out_path, "cache output path");
  cb->add_flag("--fast", fast, "skip the verification suite");
  cb->add_flag("--allow-large", allow_large, "permit beyond-desk-scale groups");
  cb->add_option("--cap", element_cap, "group enumeration element cap");

  // ---- word-level ----
  std::string w1, w2, atom_arg, handle1, handle2, check_what, godelle_arg;
  auto* cnf = app.add_subcommand("nf", "left normal form of a signed word");
  cnf->add_option("word", w1)->required();
  bool suffix_side = false;
  auto* clcm = app.add_subcommand("lcm", "join of two positive words");
  clcm->add_option("w1", w1)->required();
  clcm->add_option("w2", w2)->required();
  clcm->add_flag("--suffix", suffix_side, "use the suffix order");
  auto* cgcd = app.add_subcommand("gcd", "meet of two positive words");
  cgcd->add_option("w1", w1)->required();
  cgcd->add_option("w2", w2)->required();
  cgcd->add_flag("--suffix", suffix_side, "use the suffix order");
  auto* cfr = app.add_subcommand("fraction", "reduced left-fraction decomposition");
  cfr->add_option("word", w1)->required();
  auto* csw = app.add_subcommand("swap-orbit", "iterated swap until recurrence");
  csw->add_option("word", w1)->required();
  auto* crho = app.add_subcommand("rho", "minimal positive conjugator with an atom prefix");
  crho->add_option("atom", atom_arg)->required();
  crho->add_option("word", w1)->required();
  auto* cmc = app.add_subcommand("min-conj", "minimal positive conjugators of a positive word");
  cmc->add_option("word", w1)->required();
  auto* csup = app.add_subcommand("support", "support of an element");
  csup->add_option("word", w1)->required();
  auto* cpc = app.add_subcommand("pc", "parabolic closure of an element");
  cpc->add_option("word", w1)->required();
  auto* cz = app.add_subcommand("z", "z-element of a parabolic handle");
  cz->add_option("handle", handle1, "atom list or handle JSON")->required();
  auto* cgraph = app.add_subcommand("conj-graph", "positive conjugates graph (DOT)");
  cgraph->add_option("word", w1)->required();

  // ---- checks ----
  auto* cchk = app.add_subcommand("check", "structural verification");
  std::string mode = "sampled";
  int samples = 2000;
  cchk->add_option("what", check_what,
                   "balanced|lattice|lcm-garside|support-preserving|hypdual|godelle")
      ->required();
  cchk->add_option("arg", godelle_arg, "simple word for godelle");
  cchk->add_option("--mode", mode, "sampled|certificate");
  cchk->add_option("--samples", samples, "sampled mode sample count");

  // ---- parabolic pairs ----
  auto* cint = app.add_subcommand("intersect", "intersection of two parabolics");
  int bound = 3;
  cint->add_option("h1", handle1)->required();
  cint->add_option("h2", handle2)->required();
  cint->add_option("--bound", bound, "conjugator search radius");
  auto* cadj = app.add_subcommand("adjacent", "curve-graph adjacency of two parabolics");
  cadj->add_option("h1", handle1)->required();
  cadj->add_option("h2", handle2)->required();

  auto* ccg = app.add_subcommand("curve-graph", "curve graph of the structure");
  int cg_bound = 0;
  std::string cg_format = "dot";
  bool cg_cliques = false;
  ccg->add_option("--bound", cg_bound, "conjugator length bound");
  ccg->add_option("--format", cg_format, "dot|json");
  ccg->add_flag("--cliques", cg_cliques, "emit maximal cliques (json)");

  auto* cls = app.add_subcommand("list", "list catalog names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cls->parsed()) {
      if (ctx.json_out) {
        json j = json::array();
        for (const auto& n : catalog_names()) j.push_back(n);
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& n : catalog_names()) std::cout << n << "\n";
      }
      return 0;
    }
    if (cb->parsed()) {
      CatalogOptions copt;
      copt.allow_large = allow_large;
      copt.element_cap = element_cap;
      StructureCache c;
      c.catalog_name = build_name;
      c.entry = make_catalog(build_name, copt);
      c.stamps.balanced = c.stamps.lattice = true;  // enforced at construction
      if (!fast) {
        auto rep = check_lcm_garside(*c.entry.structure);
        c.stamps.lcm_garside = rep.pass;
        SupportCheckOptions so;
        so.seed = ctx.seed;
        so.max_length = ctx.length;
        so.threads = ctx.threads;
        auto sp = check_support_preserving(*c.entry.structure, so);
        c.stamps.support_preserving = sp.pass;
        c.stamps.support_mode = so.mode;
        c.stamps.support_seed = so.seed;
        c.stamps.support_samples = so.samples;
        c.stamps.support_length = so.max_length;
        if (c.entry.kind == "dual-sym" || c.entry.kind == "dual-exceptional")
          c.stamps.hypdual = check_hypdual(c.entry.structure->interval());
        if (!rep.pass || !sp.pass ||
            (c.stamps.hypdual && !*c.stamps.hypdual)) {
          json bad;
          bad["structure"] = build_name;
          bad["lcm_garside"] = rep.pass;
          bad["support_preserving"] = sp.pass;
          if (c.stamps.hypdual) bad["hypdual"] = *c.stamps.hypdual;
          std::cout << bad.dump(2) << "\n";
          return 1;
        }
      }
      const auto& gs = *c.entry.structure;
      if (!out_path.empty()) save_cache(c, Ctx::resolve_cache_path(out_path));
      if (ctx.json_out) {
        json j;
        j["name"] = c.catalog_name;
        j["simples"] = gs.num_simples();
        j["atoms"] = gs.num_atoms();
        j["delta_len"] = gs.length(gs.delta_simple());
        j["group_order"] = gs.group().order();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << c.catalog_name << ": " << gs.num_simples() << " simples, "
                  << gs.num_atoms() << " atoms, |Delta| = "
                  << gs.length(gs.delta_simple()) << ", |W| = "
                  << gs.group().order()
                  << (fast ? "" : ", verification passed") << "\n";
      }
      return 0;
    }

    const auto& gs = ctx.gs();

    if (cnf->parsed()) {
      Element x = parse_element(gs, w1);
      if (ctx.json_out)
        std::cout << element_json(x).dump(2) << "\n";
      else
        std::cout << x.str() << "\n";
      return 0;
    }
    if (clcm->parsed() || cgcd->parsed()) {
      Element a = parse_element(gs, w1), b = parse_element(gs, w2);
      if (!a.is_positive() || !b.is_positive())
        throw std::invalid_argument("lcm/gcd expects positive words");
      Element r = clcm->parsed()
                      ? (suffix_side ? join_pos_suff(a, b) : join_pos(a, b))
                      : (suffix_side ? meet_pos_suff(a, b) : meet_pos(a, b));
      std::cout << (ctx.json_out ? element_json(r).dump(2) : r.str()) << "\n";
      return 0;
    }
    if (cfr->parsed()) {
      auto fr = left_fraction(parse_element(gs, w1));
      if (ctx.json_out) {
        json j;
        j["denominator"] = element_json(fr.denominator);
        j["numerator"] = element_json(fr.numerator);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "a = " << fr.denominator.str()
                  << "\nb = " << fr.numerator.str() << "\n";
      }
      return 0;
    }
    if (csw->parsed()) {
      auto tr = swap_orbit(parse_element(gs, w1));
      if (ctx.json_out) {
        json j;
        j["preperiod"] = tr.preperiod;
        j["period"] = tr.period;
        j["recurrent"] = tr.element_at(tr.preperiod).str();
        j["conjugator"] = tr.to_recurrent.str();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "preperiod " << tr.preperiod << ", period " << tr.period
                  << "\nrecurrent: " << tr.element_at(tr.preperiod).str()
                  << "\nconjugator: " << tr.to_recurrent.str() << "\n";
      }
      return 0;
    }
    if (crho->parsed()) {
      int a = gs.atom_by_name(atom_arg);
      if (a < 0) throw std::invalid_argument("unknown atom '" + atom_arg + "'");
      Element x = parse_element(gs, w1);
      if (!x.is_positive()) throw std::invalid_argument("rho expects a positive word");
      auto rr = rho(gs, a, x);
      if (ctx.json_out) {
        json j;
        j["rho"] = word_str(gs, gs.word_of(rr.rho));
        json chain = json::array();
        for (int cpfx : rr.chain) chain.push_back(word_str(gs, gs.word_of(cpfx)));
        j["converging_prefixes"] = chain;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << word_str(gs, gs.word_of(rr.rho)) << "\n";
      }
      return 0;
    }
    if (cmc->parsed()) {
      Element x = parse_element(gs, w1);
      if (!x.is_positive()) throw std::invalid_argument("min-conj expects a positive word");
      json arr = json::array();
      for (int r : minimal_positive_conjugators(x)) {
        if (ctx.json_out)
          arr.push_back(word_str(gs, gs.word_of(r)));
        else
          std::cout << word_str(gs, gs.word_of(r)) << "\n";
      }
      if (ctx.json_out) std::cout << arr.dump(2) << "\n";
      return 0;
    }
    if (csup->parsed()) {
      DynBitset X = support(parse_element(gs, w1));
      std::cout << atom_set_str(gs, X) << "\n";
      return 0;
    }
    if (cpc->parsed()) {
      auto v = ctx.verified();
      auto h = parabolic_closure(v, parse_element(gs, w1));
      std::cout << (ctx.json_out ? handle_json(h).dump(2) : h.str()) << "\n";
      return 0;
    }
    if (cz->parsed()) {
      auto h = parse_handle(gs, handle1);
      if (h.is_trivial()) throw std::invalid_argument("empty atom set");
      if (ctx.json_out)
        std::cout << handle_json(h).dump(2) << "\n";
      else
        std::cout << "z = " << h.z().str() << "  (e = " << h.exponent() << ")\n";
      return 0;
    }
    if (cgraph->parsed()) {
      Element x = parse_element(gs, w1);
      if (!x.is_positive())
        throw std::invalid_argument("conj-graph expects a positive word");
      std::cout << positive_conjugates_graph(x).dot(gs);
      return 0;
    }
    if (cchk->parsed()) {
      bool pass = false;
      json detail;
      if (check_what == "balanced") {
        pass = is_balanced(gs.interval());
      } else if (check_what == "lattice") {
        pass = lattice_check(gs.interval());
      } else if (check_what == "hypdual") {
        pass = check_hypdual(gs.interval());
      } else if (check_what == "lcm-garside") {
        auto rep = check_lcm_garside(gs);
        pass = rep.pass;
        for (const auto& f : rep.failures)
          detail["failures"].push_back(
              {{"X", atom_set_str(gs, f.X)}, {"reason", f.reason}});
      } else if (check_what == "support-preserving") {
        SupportCheckOptions so;
        so.mode = mode;
        so.seed = ctx.seed;
        so.samples = samples;
        so.max_length = ctx.length;
        so.threads = ctx.threads;
        auto rep = check_support_preserving(gs, so);
        pass = rep.pass;
        detail["mode"] = rep.mode;
        detail["seed"] = rep.seed;
        if (rep.counterexample) {
          detail["counterexample"] = {
              {"x", rep.counterexample->x.str()},
              {"rho", rep.counterexample->rho >= 0
                          ? word_str(gs, gs.word_of(rep.counterexample->rho))
                          : "(chain certificate)"},
              {"supp_x", atom_set_str(gs, rep.counterexample->supp_x)},
              {"supp_image", atom_set_str(gs, rep.counterexample->supp_image)}};
        }
      } else if (check_what == "godelle") {
        Element d = parse_element(gs, godelle_arg);
        if (!d.is_positive() || d.sup() > 1)
          throw std::invalid_argument("godelle expects a simple element");
        int ds = d.is_identity() ? gs.identity_simple()
                                 : (d.inf() == 1 ? gs.delta_simple()
                                                 : d.factors()[0]);
        auto out = godelle_check(gs, ds);
        if (out == GodelleOutcome::not_balanced) {
          detail["reason"] = "not balanced";
          pass = false;
        } else {
          pass = out == GodelleOutcome::pass;
        }
      } else {
        throw std::invalid_argument("unknown check '" + check_what + "'");
      }
      detail["check"] = check_what;
      detail["pass"] = pass;
      std::cout << (ctx.json_out ? detail.dump(2)
                                 : check_what + (pass ? ": pass" : ": FAIL"))
                << "\n";
      return pass ? 0 : 1;
    }
    if (cint->parsed()) {
      auto v = ctx.verified();
      auto h1 = parse_handle(gs, handle1), h2 = parse_handle(gs, handle2);
      auto res = intersect(v, h1, h2, bound);
      json j = handle_json(res.value);
      j["exact"] = res.exact;
      std::cout << (ctx.json_out ? j.dump(2)
                                 : res.value.str() +
                                       (res.exact ? " (exact)" : " (lower bound)"))
                << "\n";
      return 0;
    }
    if (cadj->parsed()) {
      auto h1 = parse_handle(gs, handle1), h2 = parse_handle(gs, handle2);
      bool adj = adjacent(h1, h2);
      std::cout << (adj ? "adjacent" : "not adjacent") << "\n";
      return 0;
    }
    if (ccg->parsed()) {
      auto v = ctx.verified();
      auto g = curve_graph(v, cg_bound, cg_cliques);
      std::cout << (cg_format == "json" ? g.json() : g.dot());
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
