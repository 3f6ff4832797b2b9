#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "commands.hpp"

using namespace lw;
using namespace lw::cli;

TEST_CASE("classify report") {
  const Report r = cmd_classify();
  CHECK(r.pass);
  const Json& rows = r.data["rows"];
  REQUIRE(rows.size() == 4);
  const char* names[] = {"U", "U(2)", "<2>+<-2>", "<2>+<-2>"};
  const int fibres[] = {2, 1, 4, 2};
  for (int j = 0; j < 4; ++j) {
    CHECK(rows[j]["invariant_lattice"] == names[j]);
    CHECK(rows[j]["fibre_size"] == fibres[j]);
  }
  CHECK(rows[0]["g_divisibility"].is_null());
  CHECK(rows[2]["g_divisibility"] == 2);
  CHECK(rows[3]["g_divisibility"] == 1);
}

TEST_CASE("json output is canonical and stable") {
  const std::string a = dump_json(cmd_classify());
  const std::string b = dump_json(cmd_classify());
  CHECK(a == b);
  const Json j = Json::parse(a);
  CHECK(j["status"] == "pass");
  CHECK(j["check"] == "classify");
  CHECK(j.contains("citations"));
  // keys are sorted
  CHECK(a.find("\"check\"") < a.find("\"citations\""));
  CHECK(a.find("\"citations\"") < a.find("\"data\""));
  CHECK(a.find("\"data\"") < a.find("\"status\""));
}

TEST_CASE("lattice subcommands") {
  const Report disc = cmd_lattice_disc(parse_lattice("[[0,2],[2,0]]"));
  CHECK(disc.data["group"] == Json::array({2, 2}));
  CHECK(disc.data["q_values"] == Json::array({"0", "0", "1"}));

  const Report div = cmd_lattice_div(parse_lattice("Lambda"), parse_vector("delta"));
  CHECK(div.data["divisibility"] == 2);

  const Report rep = cmd_lattice_represent(parse_lattice("[[2,0],[0,-2]]"), -10, 20);
  CHECK(rep.data["vectors"] == Json::parse("[[2,-3],[2,3]]"));
  CHECK(rep.data["complete"] == true);

  const Report snf = cmd_lattice_snf(parse_lattice("U2"));
  CHECK(snf.pass);
  CHECK(snf.data["divisors"] == Json::array({2, 2}));

  CHECK(cmd_lattice_det(parse_lattice("E8")).data["det"] == 1);
  CHECK(cmd_lattice_signature(parse_lattice("Mukai24")).data["signature"] == Json::array({4, 20}));
  CHECK(cmd_lattice_det(parse_lattice("AlgMukai")).data["det"] == -2);

  const Report comp = cmd_lattice_complement(parse_lattice("U"), parse_vectors("[1,1]"));
  CHECK(comp.data["basis"] == Json::parse("[[1,-1]]"));
}

TEST_CASE("rationals render as p/q") {
  CHECK(rational_string(Rat(3, 2)) == "3/2");
  CHECK(rational_string(Rat(-2, 4)) == "-1/2");
  CHECK(rational_string(Rat(4, 2)) == "2");
  CHECK(int_json(Int("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_lattice("[[1,0"), UsageError);
  CHECK_THROWS_AS(parse_lattice("Nope"), UsageError);
  CHECK_THROWS_AS(parse_lattice("[[0,1],[1]]"), UsageError);
  CHECK_THROWS_WITH_AS(parse_lattice("[[1,0],[0,2]]"), "not even", MathError);
  CHECK_THROWS_AS(parse_vector("[1,\"x\"]"), UsageError);
  CHECK_THROWS_AS(cmd_lattice_div(parse_lattice("U"), parse_vector("[1,2,3]")), UsageError);
}

TEST_CASE("lattice documents") {
  const std::string path = "lattice_document_test.json";
  {
    std::ofstream out(path);
    out << R"({"gram": [[2, 1], [1, 2]], "label": "A2"})";
  }
  const Lattice l = load_lattice_document(path);
  CHECK(l.label() == "A2");
  CHECK(l.determinant() == 3);
  {
    std::ofstream out(path);
    out << R"({"label": "A2"})";
  }
  CHECK_THROWS_AS(load_lattice_document(path), UsageError);
  std::remove(path.c_str());
}

TEST_CASE("mukai, beauville, fixed locus, fibres, hodge") {
  const Report m = cmd_mukai(2, 1, 0);
  CHECK(m.pass);
  CHECK(m.data["invariant_lattice"] == "U");
  CHECK(cmd_mukai(1, 0, -1).data["invariant_lattice"] == "<2>+<-2>");
  CHECK_THROWS_AS(cmd_mukai(1, 0, 1), MathError);

  const Report b = cmd_beauville(-17);
  CHECK(b.pass);
  CHECK(b.data["k_squared"] == 288);
  CHECK(b.data["chi"] == 37);
  CHECK(b.data["euler"] == 156);
  CHECK(b.data["moduli_dim"] == 19);

  const Report f = cmd_fixed_locus();
  CHECK(f.pass);
  CHECK(f.data["class_count"] == 16);

  const int counts[4][3] = {{1, 0, 2}, {0, 0, 1}, {1, 2, 4}, {1, 0, 2}};
  for (int j = 1; j <= 4; ++j) {
    const Report w = cmd_fibre(j);
    CHECK(w.pass);
    CHECK(w.data["counts"] == Json::array({counts[j - 1][0], counts[j - 1][1], counts[j - 1][2]}));
  }
  CHECK(cmd_hodge_orders(21).data["orders"] == Json::array({1, 2}));
}

TEST_CASE("impossibility and verify-all") {
  CHECK(cmd_impossibility(6).pass);
  const Report all = cmd_verify_all(6);
  CHECK(all.pass);
  CHECK(all.data["criteria"].size() == 9);
}

TEST_CASE("text rendering") {
  const std::string text = render_text(cmd_beauville(-17));
  CHECK(text.rfind("beauville: PASS\n", 0) == 0);
  CHECK(text.find("k_squared: 288") != std::string::npos);
}
