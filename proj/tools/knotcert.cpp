#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "knotcert/acceptance.hpp"
#include "knotcert/catalog.hpp"
#include "knotcert/classify.hpp"
#include "knotcert/hfk.hpp"
#include "knotcert/invariants.hpp"

using namespace knotcert;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct RunConfig {
  long long n_window = 6;
  long long q_bound = 50;
  int crossing_budget = 16;
  std::string format = "json";
  std::string out;
  std::string catalog_path;
  std::string hfk_path;
  std::string case_name;
  std::string name, pd, closure;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int cmd_verify(const RunConfig& cfg) {
  std::optional<Catalog> cat;
  std::optional<std::vector<HfkRow>> hfk;
  if (!cfg.catalog_path.empty()) cat = Catalog::from_file(cfg.catalog_path);
  if (!cfg.hfk_path.empty()) {
    try {
      hfk = parse_hfk_table(read_file(cfg.hfk_path));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(cfg.hfk_path + ": " + e.what());
    }
  }

  AcceptanceConfig ac;
  ac.n_window = cfg.n_window;
  ac.q_bound = cfg.q_bound;
  ac.crossing_budget = cfg.crossing_budget;
  ac.catalog = cat ? &*cat : nullptr;
  ac.hfk = hfk ? &*hfk : nullptr;
  auto results = run_acceptance(ac);

  bool all = true;
  for (const auto& r : results) {
    std::cerr << r.line() << "\n";
    all &= r.pass;
  }

  std::string text;
  if (cfg.format == "markdown") {
    std::ostringstream os;
    os << "# Verification report\n\n"
       << "n-window " << cfg.n_window << ", q-bound " << cfg.q_bound << ", crossing budget "
       << cfg.crossing_budget << "\n\n";
    for (const auto& r : results) {
      os << "## " << r.id << ". " << r.title << ": " << (r.pass ? "PASS" : "FAIL") << "\n\n";
      for (const auto& d : r.details) os << "    " << d << "\n";
      os << "\n";
    }
    os << (all ? "All checks passed.\n" : "Some checks failed.\n");
    text = os.str();
  } else {
    json j;
    j["config"] = {{"n_window", cfg.n_window},
                   {"q_bound", cfg.q_bound},
                   {"crossing_budget", cfg.crossing_budget}};
    j["checks"] = json::array();
    for (const auto& r : results)
      j["checks"].push_back({{"id", r.id},
                             {"title", r.title},
                             {"pass", r.pass},
                             {"seconds", r.seconds},
                             {"details", r.details}});
    json failing = json::array();
    for (const auto& r : results)
      if (!r.pass) failing.push_back(r.id);
    j["failing"] = failing;
    j["passed"] = all;
    text = j.dump(2) + "\n";
  }
  emit(text, cfg.out);
  return all ? kOk : kCheckFailed;
}

int cmd_invariants(const RunConfig& cfg) {
  int given = !cfg.name.empty() + !cfg.pd.empty() + !cfg.closure.empty();
  if (given != 1) throw InputError("give exactly one of --name, --pd, --closure");

  PDCode pd;
  std::optional<BraidWord> braid;
  json j;
  if (!cfg.name.empty()) {
    std::optional<Catalog> custom;
    if (!cfg.catalog_path.empty()) custom = Catalog::from_file(cfg.catalog_path);
    const Catalog& cat = custom ? *custom : Catalog::builtin();
    try {
      pd = cat.get(cfg.name);
    } catch (const std::out_of_range&) {
      throw InputError("unknown knot name " + cfg.name);
    }
    j["input"] = {{"name", cfg.name}};
  } else if (!cfg.pd.empty()) {
    try {
      pd = parse_pd(cfg.pd);
    } catch (const PDError& e) {
      throw InputError(std::string("bad PD code: ") + e.what());
    }
    j["input"] = {{"pd", cfg.pd}};
  } else {
    for (char c : cfg.closure)
      if (std::string("xXyY1").find(c) == std::string::npos)
        throw InputError("bad braid word " + cfg.closure + " (letters x X y Y)");
    braid = BraidWord::parse(cfg.closure);
    pd = braid_closure(*braid);
    j["input"] = {{"closure", cfg.closure}};
  }

  const int budget = cfg.crossing_budget;
  const int comps = pd.components();
  j["pd"] = emit_pd(pd);
  j["crossings"] = pd.crossings.size();
  j["components"] = comps;
  j["writhe"] = writhe(pd);
  json omitted = json::array();

  std::optional<LaurentPoly> V;
  try {
    V = jones(pd, budget);
    j["jones"] = V->str();
  } catch (const BudgetExceeded& e) {
    omitted.push_back({{"invariant", "jones"}, {"reason", e.what()}});
  }

  std::optional<LaurentPoly> A;
  if (comps == 1) {
    A = alexander_pd(pd);
    j["alexander"] = A->str();
  } else {
    j["alexander"] = alexander_minor(pd).str();
    j["alexander_note"] = "link: defined up to +-t^k";
  }

  if (V && A) {
    j["determinant"] = determinant(pd, budget);
  } else if (A) {
    j["determinant"] = A->abs_eval_at_minus_one();
    j["determinant_note"] = "from the Alexander polynomial only";
  } else if (V) {
    j["determinant"] = V->abs_eval_at_minus_one();
  }

  try {
    LaurentPoly P = homfly(pd, budget);
    j["homfly"] = P.str({"a", "z"});
    if (comps == 1) j["homfly_q"] = homfly_in_q(P).str({"a", "q"});
  } catch (const BudgetExceeded& e) {
    omitted.push_back({{"invariant", "homfly"}, {"reason", e.what()}});
  }

  if (braid) {
    j["braid"] = {{"word", braid->str()},
                  {"rho", rho(*braid).str()},
                  {"exponent_sum", exponent_sum(*braid)},
                  {"h1_from_trace", h1_from_trace(*braid)}};
    auto ca = alexander_closure(*braid);
    if (ca.knot) j["braid"]["burau_alexander"] = ca.poly.str();
  }
  j["omitted"] = omitted;

  std::string text;
  if (cfg.format == "markdown") {
    std::ostringstream os;
    os << "# Invariants\n\n";
    for (const auto& [k, v] : j.items()) {
      if (k == "omitted" || k == "braid" || k == "input") continue;
      os << "- " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    if (braid)
      for (const auto& [k, v] : j["braid"].items())
        os << "- braid " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& o : omitted)
      os << "- " << o["invariant"].get<std::string>()
         << ": omitted (" << o["reason"].get<std::string>() << ")\n";
    text = os.str();
  } else {
    text = j.dump(2) + "\n";
  }
  emit(text, cfg.out);
  return kOk;
}

int cmd_classify(const RunConfig& cfg) {
  Certificate cert;
  if (cfg.case_name == "unknot") cert = enumerate_unknot_case(cfg.n_window).cert;
  else if (cfg.case_name == "torus") cert = enumerate_torus_case(cfg.q_bound).cert;
  else if (cfg.case_name == "whitehead") cert = enumerate_whitehead_case().cert;
  else throw InputError("unknown case " + cfg.case_name);

  const std::string js = cert.to_json().dump(2) + "\n";
  const std::string md = cert.markdown();
  if (cfg.format == "markdown") {
    emit(md, cfg.out);
  } else {
    emit(js, cfg.out);
    // The narrative goes next to the JSON file.
    if (!cfg.out.empty()) emit(md, cfg.out + ".md");
  }
  return cert.status == "consistent" ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotcert: braid enumeration and knot invariant certificates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", cfg.format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    s->add_option("--out", cfg.out, "output file (stdout when empty)");
  };
  auto add_bounds = [&](CLI::App* s) {
    s->add_option("--n-window", cfg.n_window, "unknot case: n in [-w, w]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    s->add_option("--q-bound", cfg.q_bound, "torus case: bound on Q")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--crossing-budget", cfg.crossing_budget,
                  "largest diagram for state sums and HOMFLY")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  add_common(verify);
  add_bounds(verify);
  add_budget(verify);
  verify->add_option("--catalog", cfg.catalog_path, "knot catalog JSON replacing the builtin");
  verify->add_option("--hfk-table", cfg.hfk_path, "HFK table JSON replacing the builtin");

  auto* inv = app.add_subcommand("invariants", "Jones, Alexander, determinant and HOMFLY");
  add_common(inv);
  add_budget(inv);
  inv->add_option("--name", cfg.name, "catalog name, e.g. 5_2, T(2,5), P(-3,3,1), mirror(5_2)");
  inv->add_option("--pd", cfg.pd, "PD code, e.g. X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]");
  inv->add_option("--closure", cfg.closure, "3-braid word in x X y Y");
  inv->add_option("--catalog", cfg.catalog_path, "knot catalog JSON replacing the builtin");

  auto* cls = app.add_subcommand("classify", "enumerate one case and write its certificate");
  add_common(cls);
  add_bounds(cls);
  cls->add_option("--case", cfg.case_name, "unknot, torus or whitehead")
      ->required()
      ->check(CLI::IsMember({"unknot", "torus", "whitehead"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return cmd_verify(cfg);
    if (*inv) return cmd_invariants(cfg);
    if (*cls) return cmd_classify(cfg);
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kInputError;
}
