#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "latticeworks/lattice.hpp"

namespace lw::cli {

using Json = nlohmann::json;

struct Report {
  std::string check;
  bool pass = false;
  Json data = Json::object();
  std::vector<std::string> citations;
};

/// Malformed input (bad JSON, unknown label, wrong shape). Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Report& r);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Report& r);
std::string render_text(const Report& r);

Json int_json(const Int& x);
Json vector_json(const IntVector& v);
Json matrix_json(const IntMatrix& m);
std::string rational_string(const Rat& x);

/// Either a JSON Gram matrix or one of U, U2, E8, Lambda, Mukai24, AlgMukai.
Lattice parse_lattice(const std::string& text);
/// A LatticeDocument file: {"gram": [[...]], "label": "..."}.
Lattice load_lattice_document(const std::string& path);
/// A JSON integer array or a named vector of Lambda (e1..f3, delta).
IntVector parse_vector(const std::string& text);
/// A JSON array of integer arrays, or a single integer array.
std::vector<IntVector> parse_vectors(const std::string& text);

/// `fallback` unless LATTICEWORKS_BOUND holds a positive integer.
long enumeration_bound(long fallback);

Report cmd_classify();
Report cmd_lattice_snf(const Lattice& l);
Report cmd_lattice_disc(const Lattice& l);
Report cmd_lattice_complement(const Lattice& l, const std::vector<IntVector>& vectors);
Report cmd_lattice_div(const Lattice& l, const IntVector& v);
Report cmd_lattice_represent(const Lattice& l, const Int& n, long bound);
Report cmd_lattice_signature(const Lattice& l);
Report cmd_lattice_det(const Lattice& l);
Report cmd_mukai(const Int& r, const Int& a, const Int& s);
Report cmd_beauville(long t);
Report cmd_fixed_locus();
Report cmd_fibre(int j);
Report cmd_hodge_orders(long transcendental_rank);
Report cmd_impossibility(long bound);
Report cmd_verify_all(long bound);

}  // namespace lw::cli
