#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd =
      std::string(LIEDERIV_CLI_PATH) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(LIEDERIV_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/liederiv_test_") + name;
}

} // namespace

TEST_CASE("validate: exit 0 on a valid algebra, 1 with violations listed") {
  const RunResult ok = run("validate --algebra " + data("sl2.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"ok\": true") != std::string::npos);

  const RunResult bad = run("validate --algebra " + data("bad_sl2.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"ok\": false") != std::string::npos);
  CHECK(bad.out.find("\"residual\"") != std::string::npos);
  CHECK(bad.out.find("\"h\"") != std::string::npos);
}

TEST_CASE("embed: sl3_paper writes the solved map and exits 0") {
  const std::string out = tmp_path("sl3.json");
  const RunResult r = run("embed --preset sl3_paper --out " + out);
  CHECK(r.exit_code == 0);
  const std::string payload = slurp(out);
  CHECK(payload.find("\"e_a\": \"-d/dx1\"") != std::string::npos);
  CHECK(payload.find("\"e_b\": \"-x1*d/dx2\"") != std::string::npos);
  CHECK(payload.find("\"rank\": 2") != std::string::npos);
  CHECK(payload.find("\"kernel_dim\": 0") != std::string::npos);
  CHECK(payload.find("\"tilde_codim\": 2") != std::string::npos);
}

TEST_CASE("embed: negative and error exits") {
  const RunResult heis = run("embed --preset heisenberg");
  CHECK(heis.exit_code == 1); // non-trivial kernel is a mathematical negative
  CHECK(heis.out.find("\"kernel_dim\": 2") != std::string::npos);

  const RunResult borel = run("embed --preset borel2", /*keep_stderr=*/true);
  CHECK(borel.exit_code == 2);
  CHECK(borel.out.find("error:") != std::string::npos);

  const RunResult jet = run("embed --preset borel2 --jet 3");
  CHECK(jet.exit_code == 1); // truncated construction exists but kills e
}

TEST_CASE("embed is deterministic byte-for-byte") {
  const RunResult a = run("embed --preset sl_n --preset-param 3");
  const RunResult b = run("embed --preset sl_n --preset-param 3");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("verify and tilde run on a stored result") {
  const std::string out = tmp_path("sl3_verify.json");
  REQUIRE(run("embed --preset sl3_paper --out " + out).exit_code == 0);
  const RunResult v = run("verify --result " + out);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("\"homomorphism_ok\": true") != std::string::npos);
  CHECK(v.out.find("\"rank\": 2") != std::string::npos);

  const RunResult t = run("tilde --result " + out);
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("\"codim\": 2") != std::string::npos);
  CHECK(t.out.find("\"trivial_intersection\": true") != std::string::npos);

  const RunResult th = run("tilde --preset heisenberg");
  CHECK(th.exit_code == 1);
  CHECK(th.out.find("\"trivial_intersection\": false") != std::string::npos);
}

TEST_CASE("variety: equations whose evaluation at the L1 point vanishes") {
  const std::string eqs = tmp_path("sl2_eqs.txt");
  const RunResult r = run("variety --algebra " + data("sl2.json") + " --k 1 --eqs-out " + eqs);
  CHECK(r.exit_code == 0);
  const std::string text = slurp(eqs);
  CHECK(text.find("# closure equations") != std::string::npos);
  CHECK(text.find("a_1_1") != std::string::npos);

  const RunResult j = run("variety --algebra " + data("sl2.json") + " --k 1 --json");
  CHECK(j.exit_code == 0);
  CHECK(j.out.find("\"closure\"") != std::string::npos);
}

TEST_CASE("check-point: subalgebra point versus open complement") {
  const RunResult borel = run("check-point --point " + data("point_borel.json"));
  CHECK(borel.exit_code == 0);
  CHECK(borel.out.find("\"closed\": true") != std::string::npos);
  CHECK(borel.out.find("\"in_Mk\": true") != std::string::npos);
  CHECK(borel.out.find("\"in_M0k\": false") != std::string::npos);

  const RunResult ef = run("check-point --point " + data("point_ef.json"));
  CHECK(ef.exit_code == 1);
  CHECK(ef.out.find("\"closed\": false") != std::string::npos);
}

TEST_CASE("check-family: positive and negative families, embedding branch") {
  const RunResult ab = run("check-family --family " + data("family_abelian.json"));
  CHECK(ab.exit_code == 0);
  CHECK(ab.out.find("\"theorem1_ii_holds\": true") != std::string::npos);

  const RunResult heis = run("check-family --family " + data("family_heisenberg.json") + " --embed");
  CHECK(heis.exit_code == 0);
  CHECK(heis.out.find("\"kernel_dim\": 0") != std::string::npos);
  CHECK(heis.out.find("\"rank\": 2") != std::string::npos);
}

TEST_CASE("embed accepts a problem file and validates its algebra eagerly") {
  const std::string prob = tmp_path("heis_problem.json");
  REQUIRE(run("preset --name heisenberg --problem --out " + prob).exit_code == 0);
  const RunResult r = run("embed --problem " + prob);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"rank\": 1") != std::string::npos);

  // a Jacobi-violating algebra inside a problem is rejected at load
  const std::string bad = tmp_path("bad_problem.json");
  std::ofstream(bad) << "{\"algebra\": " << slurp(data("bad_sl2.json"))
                     << ", \"L1\": [[\"1\", \"0\", \"0\"], [\"0\", \"0\", \"1\"]],"
                     << " \"complement\": [\"e\"]}";
  const RunResult rb = run("embed --problem " + bad, /*keep_stderr=*/true);
  CHECK(rb.exit_code == 2);
  CHECK(rb.out.find("Jacobi") != std::string::npos);
}

TEST_CASE("preset: list and dump") {
  const RunResult list = run("preset --list");
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("sl3_paper") != std::string::npos);
  CHECK(list.out.find("heisenberg") != std::string::npos);

  const RunResult dump = run("preset --name sl_n --preset-param 2 --problem");
  CHECK(dump.exit_code == 0);
  CHECK(dump.out.find("\"complement\": [\n    \"E12\"\n  ]") != std::string::npos);
}

TEST_CASE("render: phi lines and LaTeX") {
  const std::string out = tmp_path("sl3_render.json");
  REQUIRE(run("embed --preset sl3_paper --out " + out).exit_code == 0);
  const RunResult text = run("render --in " + out);
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("phi(e_b) = -x1*d/dx2") != std::string::npos);

  const RunResult latex = run("render --in " + out + " --latex");
  CHECK(latex.exit_code == 0);
  CHECK(latex.out.find("\\varphi(h_a) &= -2x_1\\partial_{x_1}-x_2\\partial_{x_2}") !=
        std::string::npos);

  const RunResult latex2 = run("embed --preset sl3_paper --latex");
  CHECK(latex2.exit_code == 0);
  CHECK(latex2.out == latex.out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("embed", true).exit_code == 2);
  CHECK(run("validate --algebra /nonexistent.json", true).exit_code == 2);
  CHECK(run("preset --name nope", true).exit_code == 2);
}

TEST_CASE("diagnostics respect LIEDERIV_COLOR") {
  const RunResult plain = run("embed", true);
  CHECK(plain.out.find("\033[31m") == std::string::npos);
  const std::string cmd = "LIEDERIV_COLOR=always " + std::string(LIEDERIV_CLI_PATH) + " embed 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  CHECK(out.find("\033[31m") != std::string::npos);
}
