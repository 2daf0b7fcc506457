#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "symtrop/acceptance.hpp"
#include "symtrop/json_io.hpp"
#include "symtrop/tropical.hpp"

using namespace symtrop;

namespace {

json cone_output(const Cone& c, const std::vector<Partition>& labels) {
  json out = cone_json(c);
  json pretty = json::array();
  for (const auto& row : c.inequalities())
    pretty.push_back(inequality_str(row, labels));
  out["facets_pretty"] = pretty;
  return out;
}

std::vector<Partition> index_labels(int dim) {
  std::vector<Partition> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back(Partition({i}));
  return labels;
}

int print_report(const Report& rep) {
  std::cout << report_str(rep);
  return report_ok(rep) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the superdominance order, tropicalized "
               "Vandermonde cells and even-symmetric SOS dual cones"};
  app.require_subcommand(1);

  int d = 0, deg = 0, k = 0, kmax = 4;
  bool even = false, dot = false, pretty = false;
  std::string lam_s, mu_s, kind, path, which;

  auto* sc_partitions = app.add_subcommand("partitions", "List partitions of d in revlex order");
  sc_partitions->add_option("d", d)->required()->check(CLI::Range(0, 40));
  sc_partitions->add_flag("--even", even, "Even partitions only");

  auto* sc_hasse = app.add_subcommand("hasse", "Cover relations of the superdominance order");
  sc_hasse->add_option("d", d)->required()->check(CLI::Range(1, 14));
  sc_hasse->add_flag("--dot", dot, "Emit a DOT digraph");

  auto* sc_superdom = app.add_subcommand("superdom", "Decide lambda >= mu");
  sc_superdom->add_option("lambda", lam_s)->required();
  sc_superdom->add_option("mu", mu_s)->required();

  auto* sc_binomial = app.add_subcommand(
      "binomial", "Decide p_lambda >= p_mu on nonnegative points; search a witness otherwise");
  sc_binomial->add_option("lambda", lam_s)->required();
  sc_binomial->add_option("mu", mu_s)->required();

  auto* sc_tropn = app.add_subcommand("trop-n", "Tropicalized Vandermonde cell");
  sc_tropn->add_option("d", d)->required()->check(CLI::Range(2, 12));

  auto* sc_tropbp = app.add_subcommand("trop-bp", "Tropical dual of the even nonnegative limit cone");
  sc_tropbp->add_option("d", d)->required()->check(CLI::Range(2, 6));

  auto* sc_tropbsos = app.add_subcommand("trop-bsos", "Tropical dual of the even SOS limit cone");
  sc_tropbsos->add_option("degree", deg, "Even degree 2d")->required();

  auto* sc_tk = app.add_subcommand("tk", "Level-k relaxation cone of degree 2d");
  sc_tk->add_option("degree", deg, "Even degree 2d")->required();
  sc_tk->add_option("k", k)->required()->check(CLI::Range(1, 6));

  auto* sc_tau = app.add_subcommand("tau", "Stabilization level of the hierarchy");
  sc_tau->add_option("d", d)->required()->check(CLI::Range(2, 6));
  sc_tau->add_option("--kmax", kmax)->check(CLI::Range(1, 8));

  auto* sc_pencil = app.add_subcommand("pencil", "Limit Gram pencil (B4, B6, B8, B10, S4)");
  sc_pencil->add_option("kind", kind)->required();
  sc_pencil->add_flag("--pretty", pretty, "Human-readable matrices");

  auto* sc_psd = app.add_subcommand("psd", "Exact PSD test of a rational symmetric matrix");
  sc_psd->add_option("matrix", path, "JSON array of rows")->required();

  auto* sc_certify = app.add_subcommand("certify", "Verify a stored certificate");
  sc_certify->add_option("which", which)->required()
      ->check(CLI::IsMember({"quartic", "decic", "sos4-rays"}));

  app.add_subcommand("verify-all", "Run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_partitions->parsed()) {
      json out = json::array();
      auto list = even ? enum_even_partitions(d)
                       : std::vector<Partition>(enum_partitions(d));
      for (const auto& p : list) out.push_back(partition_json(p));
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (sc_hasse->parsed()) {
      if (dot) {
        std::cout << hasse_dot(d);
        return 0;
      }
      json out = json::array();
      for (const auto& [a, b] : hasse(d))
        out.push_back({{"upper", partition_json(a)}, {"lower", partition_json(b)}});
      std::cout << out.dump(2) << "\n";
      return 0;
    }
    if (sc_superdom->parsed()) {
      bool yes = superdominates(Partition::parse(lam_s), Partition::parse(mu_s));
      std::cout << (yes ? "true" : "false") << "\n";
      return yes ? 0 : 1;
    }
    if (sc_binomial->parsed()) {
      Partition lam = Partition::parse(lam_s), mu = Partition::parse(mu_s);
      if (binomial_inequality_holds(lam, mu)) {
        std::cout << "valid\n";
        return 0;
      }
      auto w = binomial_violation_witness(lam, mu);
      json out = {{"valid", false}};
      if (w) {
        json pt = json::array();
        for (const Rat& x : *w) pt.push_back(rat_str(x));
        out["witness"] = pt;
      }
      std::cout << out.dump(2) << "\n";
      return 1;
    }
    if (sc_tropn->parsed()) {
      std::cout << cone_output(trop_vandermonde(d), index_labels(d)).dump(2) << "\n";
      return 0;
    }
    if (sc_tropbp->parsed()) {
      std::cout << cone_output(trop_bp_dual(d), even_coords(d)).dump(2) << "\n";
      return 0;
    }
    if (sc_tropbsos->parsed() || sc_tk->parsed()) {
      if (deg % 2 != 0 || deg < 4 || deg > 12)
        throw CLI::ValidationError("degree", "expected an even degree between 4 and 12");
      int half = deg / 2;
      Cone c = sc_tk->parsed() ? t_k_cone(half, k)
                               : trop_of_sos(build_pencil("B" + std::to_string(deg)));
      std::cout << cone_output(c, even_coords(half)).dump(2) << "\n";
      return 0;
    }
    if (sc_tau->parsed()) {
      auto t = stabilization_tau(d, kmax);
      json out = {{"certified", t.certified}, {"tau", t.tau}, {"kmax", kmax}};
      std::cout << out.dump(2) << "\n";
      return t.certified ? 0 : 1;
    }
    if (sc_pencil->parsed()) {
      GramPencil p = build_pencil(kind);
      if (pretty)
        std::cout << pencil_pretty(p);
      else
        std::cout << pencil_json(p).dump(2) << "\n";
      return 0;
    }
    if (sc_psd->parsed()) {
      std::ifstream in(path);
      if (!in) throw std::invalid_argument("cannot open " + path);
      json j;
      in >> j;
      auto m = RationalSymMatrix::from(matrix_from_json(j));
      bool psd = is_psd(m);
      json out = {{"psd", psd}};
      json elem = json::array();
      for (const Rat& e : charpoly_elementary(m)) elem.push_back(rat_str(e));
      out["spectrum_elementary"] = elem;
      std::cout << out.dump(2) << "\n";
      return psd ? 0 : 1;
    }
    if (sc_certify->parsed()) {
      if (which == "quartic") return print_report(verify_quartic());
      if (which == "decic") return print_report(verify_decic());
      return print_report(verify_sos4_extreme_rays());
    }
    // verify-all
    int failures = 0;
    for (const auto& c : acceptance::run_all()) {
      std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      if (!c.pass) ++failures;
    }
    return failures ? 1 : 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
