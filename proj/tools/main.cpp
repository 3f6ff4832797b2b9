#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

struct LatticeArgs {
  std::string gram;
  std::string file;
  std::string vector;
  std::string vectors;
  std::string n;
  long bound = 20;
};

lw::Lattice input_lattice(const LatticeArgs& a) {
  if (!a.file.empty()) return lw::cli::load_lattice_document(a.file);
  if (a.gram.empty()) throw lw::cli::UsageError("one of --gram or --file is required");
  return lw::cli::parse_lattice(a.gram);
}

lw::Int parse_int(const std::string& s, const char* what) {
  lw::Int x;
  if (s.empty() || x.set_str(s, 10) != 0) throw lw::cli::UsageError(std::string("invalid integer for ") + what);
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice computations for involutions of K3^[2]-type manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print the canonical JSON report");

  auto* classify = app.add_subcommand("classify", "Recompute the four involution classes");

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "Operations on a user lattice");
  lattice->require_subcommand(1);
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--gram", la.gram, "Gram matrix as JSON, or U, U2, E8, Lambda, Mukai24, AlgMukai");
    sub->add_option("--file", la.file, "LatticeDocument JSON file");
  };
  auto* snf = lattice->add_subcommand("snf", "Smith normal form of the Gram matrix");
  auto* disc = lattice->add_subcommand("disc", "Discriminant group and q-values");
  auto* complement = lattice->add_subcommand("complement", "Orthogonal complement of vectors");
  auto* div = lattice->add_subcommand("div", "Divisibility of a vector");
  auto* represent = lattice->add_subcommand("represent", "Primitive vectors of a given norm (rank 2)");
  auto* signature = lattice->add_subcommand("signature", "Signature of the form");
  auto* det = lattice->add_subcommand("det", "Determinant of the Gram matrix");
  for (auto* sub : {snf, disc, complement, div, represent, signature, det}) add_input(sub);
  complement->add_option("--vectors,--vector", la.vectors, "JSON vector or array of vectors")->required();
  div->add_option("--vector", la.vector, "JSON vector or a named Lambda vector (e1..f3, delta)")->required();
  represent->add_option("-n", la.n, "Target norm")->required()->allow_extra_args(false);
  represent->add_option("--bound", la.bound, "Box bound for forms without an exact solver");

  std::string mr, ma, ms;
  auto* mukai = app.add_subcommand("mukai", "Invariant lattice of (v^perp)^phi for v = (r, aH, s)");
  mukai->add_option("r", mr)->required();
  mukai->add_option("a", ma)->required();
  mukai->add_option("s", ms)->required();

  long t = 0;
  auto* beauville = app.add_subcommand("beauville", "Fixed-surface invariants from the trace t");
  beauville->add_option("t", t)->required();

  auto* fixed = app.add_subcommand("fixed-locus", "Classes of Weierstrass-point divisors");

  int j = 0;
  auto* fibre = app.add_subcommand("fibre", "Walls and chambers for class J");
  fibre->add_option("J", j)->required()->check(CLI::Range(1, 4));

  long trank = 21;
  auto* hodge = app.add_subcommand("hodge-orders", "Orders N with phi(N) dividing the transcendental rank");
  hodge->add_option("rank", trank, "Transcendental rank")->capture_default_str();

  long bound = 0;
  auto* impossible = app.add_subcommand("impossibility", "U(2) and class-4 impossibility sweeps");
  impossible->add_option("--bound", bound, "Coordinate bound (default 10 or LATTICEWORKS_BOUND)");
  auto* verify = app.add_subcommand("verify-all", "Run every acceptance check");
  verify->add_option("--bound", bound, "Sweep bound (default 10 or LATTICEWORKS_BOUND)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    lw::cli::Report report;
    const long sweep = bound > 0 ? bound : lw::cli::enumeration_bound(10);
    if (*classify) {
      report = lw::cli::cmd_classify();
    } else if (*snf) {
      report = lw::cli::cmd_lattice_snf(input_lattice(la));
    } else if (*disc) {
      report = lw::cli::cmd_lattice_disc(input_lattice(la));
    } else if (*complement) {
      report = lw::cli::cmd_lattice_complement(input_lattice(la), lw::cli::parse_vectors(la.vectors));
    } else if (*div) {
      report = lw::cli::cmd_lattice_div(input_lattice(la), lw::cli::parse_vector(la.vector));
    } else if (*represent) {
      const long box = represent->count("--bound") ? la.bound : lw::cli::enumeration_bound(la.bound);
      report = lw::cli::cmd_lattice_represent(input_lattice(la), parse_int(la.n, "-n"), box);
    } else if (*signature) {
      report = lw::cli::cmd_lattice_signature(input_lattice(la));
    } else if (*det) {
      report = lw::cli::cmd_lattice_det(input_lattice(la));
    } else if (*mukai) {
      report = lw::cli::cmd_mukai(parse_int(mr, "r"), parse_int(ma, "a"), parse_int(ms, "s"));
    } else if (*beauville) {
      report = lw::cli::cmd_beauville(t);
    } else if (*fixed) {
      report = lw::cli::cmd_fixed_locus();
    } else if (*fibre) {
      report = lw::cli::cmd_fibre(j);
    } else if (*hodge) {
      report = lw::cli::cmd_hodge_orders(trank);
    } else if (*impossible) {
      report = lw::cli::cmd_impossibility(sweep);
    } else if (*verify) {
      report = lw::cli::cmd_verify_all(sweep);
    }
    std::cout << (json ? lw::cli::dump_json(report) : lw::cli::render_text(report));
    return report.pass ? 0 : 1;
  } catch (const lw::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const lw::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
