#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qshapo/shapovalov.hpp"
#include "qshapo/suites.hpp"

namespace qshapo::cli {

namespace fs = std::filesystem;

namespace {

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

fs::path cache_file(const fs::path& dir, int n, int cap) {
  return dir / ("serre-N" + std::to_string(n) + "-cap" + std::to_string(cap) + ".txt");
}

std::optional<std::string> read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_file(const fs::path& p, const std::string& text) {
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return false;
    out << text;
    if (!out) return false;
  }
  fs::rename(tmp, p, ec);
  return !ec;
}

Weight parse_weight(const std::string& text, int n) {
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  if (w.rank() != n)
    throw BadInput("weight '" + text + "' has " + std::to_string(w.rank()) + " entries, expected " + std::to_string(n));
  return w;
}

struct Common {
  std::string cache_dir;
  bool no_cache = false;
  int cap = 0;
};

void install_cache(const Common& c, std::ostream& err) {
  if (c.cap > 0) set_cap_limit(c.cap);
  if (c.no_cache) {
    set_system_builder({});
    return;
  }
  fs::path dir = resolve_cache_dir(c.cache_dir);
  set_system_builder([dir, &err](int n, int cap) { return load_or_build(dir, n, cap, err).system; });
}

}  // namespace

fs::path default_cache_dir() {
  if (const char* env = std::getenv("QSHAPO_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "qshapo";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "qshapo";
  return ".qshapo-cache";
}

fs::path resolve_cache_dir(const std::string& flag) {
  if (const char* env = std::getenv("QSHAPO_CACHE"); env && *env) return env;
  return flag.empty() ? default_cache_dir() : fs::path(flag);
}

CacheResult load_or_build(const fs::path& dir, int n, int cap, std::ostream& warn) {
  fs::path file = cache_file(dir, n, cap);
  std::string status = "built";
  if (auto text = read_file(file)) {
    std::istringstream head(*text);
    std::string magic;
    int version = -1;
    head >> magic >> version;
    if (magic == kRewriteMagic && version != kRewriteFormatVersion) {
      status = "rebuilt";
    } else {
      try {
        RewriteSystem rs = RewriteSystem::deserialize(*text);
        if (rs.rank() != n || rs.cap() != cap) throw std::invalid_argument("rank or cap does not match the file name");
        return {std::move(rs), "loaded", file};
      } catch (const std::exception& e) {
        warn << "warning: cache file " << file.string() << " is corrupt (" << e.what() << "); rebuilding\n";
        status = "rebuilt";
      }
    }
  }
  RewriteSystem rs = build_serre_system(n, cap);
  if (!write_file(file, rs.serialize()))
    warn << "warning: could not write cache file " << file.string() << "\n";
  return {std::move(rs), status, file};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Shapovalov elements for U_q(sl(N+1))", "qshapo"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--cache-dir", common.cache_dir, "Directory for completed rewrite systems");
  app.add_flag("--no-cache", common.no_cache, "Build rewrite systems in memory only");
  app.add_option("--cap", common.cap, "Largest word degree the rewrite system may be completed to")
      ->check(CLI::PositiveNumber);

  int n = 2, m = 1, samples = 4, p = 3, height = 8;
  std::uint64_t seed = 1;
  std::string lambda_text, method = "sum", format = "text", mode = "symbolic", suite = "hwv", root;

  CLI::App* theta = app.add_subcommand("theta", "Compute a Shapovalov element");
  theta->add_option("--n", n, "Rank N")->required()->check(CLI::PositiveNumber);
  theta->add_option("--m", m, "Multiplicity m")->check(CLI::PositiveNumber);
  theta->add_option("--method", method, "sum, det, inductive or power")
      ->check(CLI::IsMember({"sum", "det", "inductive", "power"}));
  theta->add_option("--lambda", lambda_text, "Weight as (lambda,alpha_1),...,(lambda,alpha_N)");
  theta->add_option("--root", root, "Window a,b for the root eps_a - eps_b (sum method)");
  theta->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  std::vector<std::string> names = suite_names();
  verify->add_option("--suite", suite, "Suite name")
      ->transform([](const std::string& s) { return canonical_suite(s); })
      ->check(CLI::IsMember(names));
  verify->add_option("--n", n, "Rank N")->required()->check(CLI::PositiveNumber);
  verify->add_option("--m", m, "Multiplicity m")->check(CLI::PositiveNumber);
  verify->add_option("--mode", mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
  verify->add_option("--samples", samples, "Number of sampled weights")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--lambda", lambda_text, "A single weight instead of samples");
  verify->add_option("--p", p, "Largest p for the F^{p+1} identities")->check(CLI::PositiveNumber);
  verify->add_option("--height", height, "Largest weight height for the PBW audit")->check(CLI::PositiveNumber);

  CLI::App* cache = app.add_subcommand("cache", "Build or load a completed rewrite system");
  int cache_cap = 8;
  cache->add_option("--n", n, "Rank N")->required()->check(CLI::PositiveNumber);
  cache->add_option("--cap", cache_cap, "Word-degree cap")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (cache->parsed()) {
      fs::path dir = resolve_cache_dir(common.cache_dir);
      CacheResult r = load_or_build(dir, n, cache_cap, err);
      std::size_t rules = r.system.rules().size();
      if (r.status == "loaded")
        out << "loaded from cache, " << rules << " rules\n";
      else
        out << r.status << ", " << rules << " rules, cached\n";
      out << "N=" << n << " cap=" << cache_cap << " file=" << r.file.string() << "\n";
      return kOk;
    }

    install_cache(common, err);
    std::optional<Weight> lambda;
    if (!lambda_text.empty()) lambda = parse_weight(lambda_text, n);

    if (theta->parsed()) {
      std::string text;
      auto emit_q = [&](const ThetaQ& t, const std::string& tag) {
        if (format == "json") return theta_json(t, n, m, tag);
        if (format == "latex") return theta_latex(t);
        return theta_text(t) + "\n";
      };
      auto emit_w = [&](const EvaluatedTheta& t, const std::string& tag) {
        if (format == "json") return theta_json(t, n, m, tag);
        if (format == "latex") return theta_latex(t);
        return theta_text(t) + "\n";
      };
      if (method == "sum") {
        if (m != 1) throw BadInput("the sum formula is the m = 1 element; use --method power or inductive");
        ShapoElement t = theta_sum(n);
        if (!root.empty()) {
          Weight ab = parse_weight(root, 2);
          t = theta_sum_window(n, ab[0], ab[1]);
        }
        if (lambda) {
          text = emit_q(to_numeric(evaluate(t, HighestWeight::numeric(*lambda))), t.tag);
        } else if (format == "json") {
          text = theta_json(t);
        } else if (format == "latex") {
          text = theta_latex(t);
        } else {
          text = theta_text(t) + "\n";
        }
      } else if (method == "det") {
        if (m != 1) throw BadInput("the determinant is the m = 1 element");
        if (lambda)
          text = emit_q(to_numeric(theta_det(n, HighestWeight::numeric(*lambda))), "det");
        else
          text = emit_w(theta_det(n, HighestWeight::symbolic_on_hyperplane(n, 1)), "det");
      } else {
        if (!lambda) throw BadInput("--method " + method + " needs --lambda");
        RootSystemA R(n);
        if (method == "power" && R.lambda_rho_pairing(*lambda, R.eta()) != m)
          throw BadInput("power: (lambda+rho, eta) must equal m = " + std::to_string(m));
        ThetaQ t = method == "inductive" ? theta_inductive(n, m, *lambda) : theta_power(n, m, *lambda);
        text = emit_q(t, method);
      }
      out << text;
      return kOk;
    }

    Report rep;
    if (suite == "hwv") {
      if (lambda)
        rep = verify_hwv_at(n, m, *lambda);
      else if (mode == "symbolic")
        rep = verify_hwv(n, m, true);
      else
        rep = verify_hwv(n, m, false, samples, seed);
    } else if (suite == "commutation") {
      rep = suite_commutation(n);
    } else if (suite == "index-sums") {
      rep = suite_index_sums(n);
    } else if (suite == "calculus") {
      rep = suite_calculus(n, seed);
    } else if (suite == "shift") {
      rep = suite_shift(n, p);
    } else if (suite == "doot") {
      rep = compare_doot(n, p, seed);
    } else if (suite == "inductive") {
      rep = suite_inductive(n, samples, seed);
    } else if (suite == "psi") {
      rep = suite_psi(n);
    } else if (suite == "powers") {
      rep = suite_powers(n, m, lambda ? std::vector<Weight>{*lambda} : hyperplane_sample(n, m, samples, seed));
    } else if (suite == "pbw") {
      rep = suite_pbw(n, height, std::max(8, height));
    }
    out << report_json(rep);
    return rep.ok() ? kOk : kCheckFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (needed cap " << e.needed() << ")\n";
    return kCapExhausted;
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

}  // namespace qshapo::cli
