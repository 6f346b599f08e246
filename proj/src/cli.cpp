#include "sphgeo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sphgeo/io.hpp"

namespace sg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << data;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::string quad_name(int i1, int i2, int j1, int j2) {
  std::ostringstream s;
  s << "(l_" << i1 << ", l_" << i2 << ", m_" << j1 << ", m_" << j2 << ")";
  return s.str();
}

int run_check(const CbicNet& net, double tol, std::uint64_t seed, int spot_checks, std::ostream& out,
              std::ostream& err) {
  bool ok = true;
  double on = 0.0;
  std::string on_name = "none";
  auto on_quadric = [&](const char* fam, int k, const HPoint& x) {
    const double r = std::max(std::abs(eval_normalized(net.B, x.coords())), std::abs(eval_normalized(net.C, x.coords())));
    if (r > on) {
      on = r;
      on_name = std::string(fam) + "_" + std::to_string(k);
    }
    if (r >= tol) {
      err << "FAIL line " << fam << "_" << k << " off the base curve, residual " << num(r) << "\n";
      ok = false;
    }
  };
  for (const auto& [i, x] : net.ell) on_quadric("l", i, x);
  for (const auto& [j, x] : net.m) on_quadric("m", j, x);

  double cop = 0.0;
  std::string cop_name = "none";
  auto quad = [&](int i1, int i2, int j1, int j2) -> double {
    return normalized_volume(std::vector<HPoint>{net.ell.at(i1), net.ell.at(i2), net.m.at(j1), net.m.at(j2)});
  };
  for (const auto& [i, li] : net.ell) {
    if (!net.ell.count(i + 1)) continue;
    for (const auto& [j, mj] : net.m) {
      if (!net.m.count(j + 1) || (i + j) % 2 != 0) continue;
      const double r = quad(i, i + 1, j, j + 1);
      if (r > cop) {
        cop = r;
        cop_name = quad_name(i, i + 1, j, j + 1);
      }
      if (r >= tol) {
        err << "FAIL quad " << quad_name(i, i + 1, j, j + 1) << " not circumscribed, residual " << num(r) << "\n";
        ok = false;
      }
    }
  }

  std::vector<std::pair<int, int>> corners;
  for (const auto& [i, li] : net.ell) {
    if (!net.ell.count(i + 3)) continue;
    for (const auto& [j, mj] : net.m) {
      if (net.m.count(j + 3) && (i + j) % 2 == 0) corners.emplace_back(i, j);
    }
  }
  double miq = 0.0;
  int done = 0;
  if (!corners.empty()) {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < spot_checks; ++k) {
      const auto [i, j] = corners[static_cast<std::size_t>(rng() % corners.size())];
      const double r = quad(i, i + 3, j, j + 3);
      miq = std::max(miq, r);
      ++done;
      if (r >= tol) {
        err << "FAIL Miquel quad " << quad_name(i, i + 3, j, j + 3) << " residual " << num(r) << "\n";
        ok = false;
      }
    }
  }
  out << "max_on_quadric " << num(on) << " at " << on_name << "\n";
  out << "max_coplanarity " << num(cop) << " at " << cop_name << "\n";
  out << "miquel_spot_checks " << done << " max " << num(miq) << "\n";
  out << (ok ? "OK" : "FAILED") << " tol " << num(tol) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incircular nets and sphere geometries"};
  app.require_subcommand(1);

  std::string gen_config, gen_out;
  auto* gen = app.add_subcommand("generate", "Generate a net dump from a scene configuration");
  gen->add_option("--config", gen_config, "Scene configuration (default stdin)");
  gen->add_option("--out", gen_out, "Net dump path (default stdout)");

  std::string chk_in;
  double chk_tol = 1e-8;
  std::uint64_t seed = 0;
  int spot = 16;
  auto* chk = app.add_subcommand("check", "Check the residuals of a net dump");
  chk->add_option("--in", chk_in, "Net dump (default stdin)");
  chk->add_option("--tol", chk_tol, "Residual threshold")->check(CLI::PositiveNumber);
  chk->add_option("--seed", seed, "Seed for the Miquel spot checks");
  chk->add_option("--spot-checks", spot, "Number of Miquel spot checks")->check(CLI::NonNegativeNumber);

  std::string rnd_config, rnd_in, rnd_out;
  auto* rnd = app.add_subcommand("render", "Render a configuration or net dump to SVG");
  auto* rc = rnd->add_option("--config", rnd_config, "Scene configuration");
  auto* ri = rnd->add_option("--in", rnd_in, "Net dump");
  rc->excludes(ri);
  rnd->add_option("--out", rnd_out, "SVG path (default stdout)");

  double ju = 0.0, jm = 0.0;
  auto* jac = app.add_subcommand("jacobi", "Evaluate sn, cn, dn and K");
  jac->add_option("--u", ju, "Argument")->required();
  jac->add_option("--m", jm, "Parameter m < 1")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      const SceneConfig cfg = parse_config(read_input(gen_config, in));
      const CbicNet net = generate(cfg.params);
      write_output(gen_out, dump_net(net, cfg), out);
      return 0;
    }
    if (chk->parsed()) {
      const NetDump d = load_net(read_input(chk_in, in));
      return run_check(d.net, chk_tol, seed, spot, out, err);
    }
    if (rnd->parsed()) {
      std::string text = read_input(rnd_in.empty() ? rnd_config : rnd_in, in);
      CbicNet net;
      RenderOptions opts;
      if (is_net_dump(text)) {
        NetDump d = load_net(text);
        net = std::move(d.net);
        opts = d.config.render;
      } else {
        const SceneConfig cfg = parse_config(text);
        net = generate(cfg.params);
        opts = cfg.render;
      }
      write_output(rnd_out, emit_svg(render_net(net, opts)), out);
      return 0;
    }
    if (jac->parsed()) {
      const SnCnDn f = jacobi_sn_cn_dn(ju, jm);
      char buf[160];
      std::snprintf(buf, sizeof(buf), "sn %.17g\ncn %.17g\ndn %.17g\n", f.sn, f.cn, f.dn);
      out << buf;
      if (jm >= 0.0) {
        std::snprintf(buf, sizeof(buf), "K %.17g\n", complete_K(jm));
        out << buf;
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace sg
