// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse or usage error,
// 3 guard violation (input outside what the chosen algorithm accepts).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tutte/algorithms.hpp"
#include "tutte/critical.hpp"
#include "tutte/random.hpp"
#include "tutte/reductions.hpp"

namespace {

using namespace tutte;
using json = nlohmann::json;

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;

struct Input {
  std::string path;
  std::string text;
  std::string digest;
};

std::string fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

Input load(const std::string& path) {
  Input in{path, {}, {}};
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    in.text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    require(static_cast<bool>(f), Errc::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    in.text = ss.str();
  }
  in.digest = fnv1a(in.text);
  return in;
}

enum class Format { Matrix, Graph, Cnf, Csp, Poly, Inequations };

/// Guesses the format from the first significant line.
Format detect(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#' || tok == "c") continue;
    if (tok == "p") return Format::Cnf;
    if (tok == "csp") return Format::Csp;
    if (tok == "tutte") return Format::Poly;
    if (tok == "ineq") return Format::Inequations;
    int count = 1;
    while (ls >> tok) ++count;
    if (count == 4) return Format::Matrix;
    if (count == 2) return Format::Graph;
    fail(Errc::ParseError, "cannot tell the input format from its first line");
  }
  fail(Errc::ParseError, "empty input");
}

FqMatrix load_matrix(const Input& in) {
  std::istringstream ss(in.text);
  switch (detect(in.text)) {
    case Format::Matrix: return read_matrix(ss);
    case Format::Graph: {
      const auto g = read_graph(ss);
      return graphic_matroid(g.k, g.edges);
    }
    default: fail(Errc::ParseError, "expected a matrix or graph file");
  }
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(path);
  require(static_cast<bool>(f), Errc::ParseError, "cannot write '" + path + "'");
  f << body;
}

void write_report(const std::string& path, const json& rep) {
  if (path.empty()) return;
  write_output(path, rep.dump(2) + "\n");
}

json counters(const AlgorithmStats& st, TutteAlgorithm algo) {
  json c;
  if (algo == TutteAlgorithm::General) c["visited"] = st.lexgen_visited;
  if (algo == TutteAlgorithm::Wt2) {
    c["adds"] = st.wt2.ops.adds;
    c["mults"] = st.wt2.ops.mults;
    c["machine_integers"] = st.wt2.machine_integers;
  }
  return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- verbs -------------------------------------------------------------------

struct Common {
  int threads = 1;
  std::string report;
};

int cmd_compute(const std::string& input, const std::string& algo_name, const std::string& out,
                const Common& common) {
  const auto in = load(input);
  const auto mat = load_matrix(in);
  const auto algo = parse_algorithm(algo_name);
  AlgorithmStats st;
  const auto t0 = std::chrono::steady_clock::now();
  const auto tau = compute_tau(mat, algo, common.threads, &st);
  const double wall = seconds_since(t0);
  std::ostringstream body;
  write_poly(body, tau_to_tutte(tau, true));
  write_output(out, body.str());
  write_report(common.report, {{"command", "compute"},
                               {"algorithm", algorithm_name(algo)},
                               {"input", in.path},
                               {"input_digest", in.digest},
                               {"wall_seconds", wall},
                               {"counters", counters(st, algo)},
                               {"output", out.empty() ? "-" : out}});
  return 0;
}

int cmd_eval(const std::string& input, const std::string& x, const std::string& y) {
  const auto in = load(input);
  std::istringstream ss(in.text);
  const auto tp = read_poly(ss);
  std::cout << to_string(evaluate(tp, parse_bigint(x), parse_bigint(y))) << '\n';
  return 0;
}

int cmd_verify(const std::string& input, int d, const std::string& algo_name, const std::string& poly_path,
               const Common& common) {
  const auto in = load(input);
  const LinearCode code(load_matrix(in));
  const auto t0 = std::chrono::steady_clock::now();
  CriticalReport rep;
  if (!poly_path.empty()) {
    const auto pin = load(poly_path);
    std::istringstream ss(pin.text);
    rep = verify_critical_with(code, d, read_poly(ss), "given:" + poly_path);
  } else {
    rep = verify_critical(code, d, parse_algorithm(algo_name), common.threads);
  }
  const double wall = seconds_since(t0);
  std::cout << (rep.pass ? "PASS" : "FAIL") << " q=" << rep.q << " d=" << rep.d << " k=" << rep.k
            << " count=" << to_string(rep.count) << " tutte=" << to_string(rep.evaluation) << '\n';
  write_report(common.report, {{"command", "verify-critical"},
                               {"algorithm", rep.algorithm},
                               {"input", in.path},
                               {"input_digest", in.digest},
                               {"wall_seconds", wall},
                               {"verdicts",
                                {{"pass", rep.pass},
                                 {"full_support_count", to_string(rep.count)},
                                 {"tutte_evaluation", to_string(rep.evaluation)}}}});
  return rep.pass ? 0 : kExitMismatch;
}

struct ReduceOptions {
  std::string chain = "arity2";
  unsigned q = 0;
  unsigned ext = 1;
  int group = 1;
  std::string emit = "matrix";
  std::string out;
};

int cmd_reduce(const std::string& input, const ReduceOptions& o, const Common& common) {
  const auto in = load(input);
  std::istringstream ss(in.text);
  CspInstance csp;
  switch (detect(in.text)) {
    case Format::Cnf: csp = cnf_to_bipartite_csp(read_cnf(ss)); break;
    case Format::Csp: csp = read_csp(ss); break;
    default: fail(Errc::ParseError, "reduce expects a CNF or CSP file");
  }
  if (o.group > 1) csp = aggregate_vars(csp, o.group);
  require(o.q >= 2, Errc::InvalidArgument, "--q is required");
  const auto [p, e] = prime_power(o.q);
  std::ostringstream body;
  json rep{{"command", "reduce"}, {"chain", o.chain}, {"input", in.path}, {"input_digest", in.digest}};
  if (o.chain == "arity2") {
    const FieldCtx f(p, e);
    const auto hom = modular_to_homogeneous(csp_to_special_modular(csp, o.q - 1), f);
    if (o.emit == "system") {
      write_inequations(body, hom);
    } else {
      const auto g = inequations_to_generator(hom);
      body << "# sat = (-1)^k T(1 - q, 0) = " << o.q - 1 << " * |SAT(input)|\n";
      write_matrix(body, g);
      rep["k"] = g.k();
      rep["m"] = g.m();
    }
    rep["count_factor"] = o.q - 1;
  } else if (o.chain == "sum") {
    const FieldCtx base(p, e);
    const FieldCtx big = extension_field(base, static_cast<int>(o.ext));
    const auto red = csp_to_sum_inequations(csp, big);
    if (o.emit == "system") {
      write_inequations(body, red.system);
    } else if (o.emit == "normalizer") {
      write_inequations(body, red.normalizer);
    } else {
      const auto kg = generator_with_kernel(red.system, base);
      body << "# kernel " << kg.kernel_dim << ": |SAT(system)| = " << big.q() << "^" << kg.kernel_dim
           << " * (-1)^k T(1 - " << o.q << "^" << o.ext << ", 0)\n";
      write_matrix(body, kg.basis);
      rep["k"] = kg.basis.k();
      rep["m"] = kg.basis.m();
      rep["kernel_dim"] = kg.kernel_dim;
    }
  } else {
    fail(Errc::InvalidArgument, "unknown chain '" + o.chain + "' (arity2, sum)");
  }
  write_output(o.out, body.str());
  write_report(common.report, rep);
  return 0;
}

struct GenOptions {
  std::string family = "random-general";
  unsigned q = 2;
  int k = 3;
  int m = 6;
  int clauses = 4;
  int dmax = 2;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenOptions& o) {
  Rng rng(o.seed);
  std::ostringstream body;
  const auto [p, e] = prime_power(o.q);
  if (o.family == "graphic") {
    write_graph(body, random_connected_graph(o.k + 1, o.m, rng));
  } else if (o.family == "random-wt2") {
    write_matrix(body, random_weight2(FieldCtx(p, e), o.k, o.m, rng));
  } else if (o.family == "random-general") {
    write_matrix(body, random_general(FieldCtx(p, e), o.k, o.m, rng));
  } else if (o.family == "cnf") {
    write_cnf(body, random_cnf(o.k, o.clauses, 3, rng));
  } else if (o.family == "csp") {
    write_csp(body, random_bipartite_csp(o.k, o.k, o.dmax, o.clauses, rng));
  } else {
    fail(Errc::InvalidArgument, "unknown family '" + o.family + "'");
  }
  write_output(o.out, body.str());
  return 0;
}

struct BenchOptions {
  std::string family = "graphic";
  std::string algo;
  unsigned q = 2;
  int k = 8;
  int m = 0;
  int reps = 1;
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchOptions& o, const Common& common) {
  const auto [p, e] = prime_power(o.q);
  const FieldCtx f(p, e);
  const int m = o.m > 0 ? o.m : 2 * o.k + 2;
  std::string algo_name = o.algo;
  if (algo_name.empty()) algo_name = o.family == "random-general" ? "general" : "wt2";
  const auto algo = parse_algorithm(algo_name);
  Rng rng(o.seed);
  std::cout << "family,algo,q,k,m,rep,seconds,adds,mults,visited\n";
  for (int r = 0; r < o.reps; ++r) {
    FqMatrix mat = o.family == "graphic"      ? random_graphic(o.k, m, rng)
                   : o.family == "random-wt2" ? random_weight2(f, o.k, m, rng)
                   : o.family == "random-general"
                       ? random_general(f, o.k, m, rng)
                       : (fail(Errc::InvalidArgument, "unknown family '" + o.family + "'"), FqMatrix(f, 0, 0));
    AlgorithmStats st;
    const auto t0 = std::chrono::steady_clock::now();
    compute_tau(mat, algo, common.threads, &st);
    const double wall = seconds_since(t0);
    std::cout << o.family << ',' << algo_name << ',' << mat.ctx().q() << ',' << mat.k() << ',' << mat.m() << ','
              << r << ',' << wall << ',' << st.wt2.ops.adds << ',' << st.wt2.ops.mults << ','
              << st.lexgen_visited << '\n';
  }
  return 0;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::InvalidArgument: return kExitParse;
    default: return kExitGuard;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tutte polynomials of linear matroids over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--report", common.report, "write a JSON run report to this path");

  std::string input, out, algo = "general", x, y, poly;
  int d = 1;

  auto* compute = app.add_subcommand("compute", "write the Tutte polynomial of a matrix or graph");
  compute->add_option("input", input, "matrix or graph file ('-' for stdin)")->required();
  compute->add_option("--algo", algo, "def, general or wt2")->check(CLI::IsMember({"def", "general", "wt2"}));
  compute->add_option("--out", out, "output path (default stdout)");

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial file at integers");
  eval->add_option("poly", input, "polynomial file")->required();
  eval->add_option("--x", x, "x value")->required();
  eval->add_option("--y", y, "y value")->required();

  auto* verify = app.add_subcommand("verify-critical", "compare full-support counts with T(1-q^d, 0)");
  verify->add_option("input", input, "matrix or graph file")->required();
  verify->add_option("--d", d, "tuple length")->check(CLI::PositiveNumber);
  verify->add_option("--algo", algo, "def, general or wt2")->check(CLI::IsMember({"def", "general", "wt2"}));
  verify->add_option("--poly", poly, "use this polynomial file instead of computing one");

  ReduceOptions ro;
  auto* reduce = app.add_subcommand("reduce", "turn a CNF or bipartite CSP into a generator matrix");
  reduce->add_option("input", input, "CNF (DIMACS) or CSP file")->required();
  reduce->add_option("--chain", ro.chain, "arity2 (two-variable inequations) or sum (sum-inequations)")
      ->check(CLI::IsMember({"arity2", "sum"}));
  reduce->add_option("--q", ro.q, "field order (arity2) or base field order (sum)")->required();
  reduce->add_option("--ext", ro.ext, "extension degree for sum")->check(CLI::PositiveNumber);
  reduce->add_option("--group", ro.group, "aggregate variables in groups of this size")->check(CLI::PositiveNumber);
  reduce->add_option("--emit", ro.emit, "matrix, system or normalizer")
      ->check(CLI::IsMember({"matrix", "system", "normalizer"}));
  reduce->add_option("--out", ro.out, "output path (default stdout)");

  GenOptions go;
  auto* gen = app.add_subcommand("gen", "write a seeded random instance");
  gen->add_option("--family", go.family, "graphic, random-wt2, random-general, cnf or csp")
      ->check(CLI::IsMember({"graphic", "random-wt2", "random-general", "cnf", "csp"}));
  gen->add_option("--q", go.q, "field order");
  gen->add_option("--k", go.k, "rank, or variables per side for cnf and csp")->check(CLI::PositiveNumber);
  gen->add_option("--m", go.m, "columns or edges")->check(CLI::NonNegativeNumber);
  gen->add_option("--clauses", go.clauses, "clauses or constraints")->check(CLI::NonNegativeNumber);
  gen->add_option("--dmax", go.dmax, "largest CSP domain")->check(CLI::PositiveNumber);
  gen->add_option("--seed", go.seed, "RNG seed");
  gen->add_option("--out", go.out, "output path (default stdout)");

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "time an algorithm on seeded random inputs (CSV)");
  bench->add_option("--family", bo.family, "graphic, random-wt2 or random-general")
      ->check(CLI::IsMember({"graphic", "random-wt2", "random-general"}));
  bench->add_option("--algo", bo.algo, "def, general or wt2")->check(CLI::IsMember({"def", "general", "wt2"}));
  bench->add_option("--q", bo.q, "field order (graphic inputs are binary)");
  bench->add_option("--k", bo.k, "rank")->check(CLI::PositiveNumber);
  bench->add_option("--m", bo.m, "columns (default 2k + 2)")->check(CLI::NonNegativeNumber);
  bench->add_option("--reps", bo.reps, "repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bo.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (*compute) return cmd_compute(input, algo, out, common);
    if (*eval) return cmd_eval(input, x, y);
    if (*verify) return cmd_verify(input, d, algo, poly, common);
    if (*reduce) return cmd_reduce(input, ro, common);
    if (*gen) return cmd_gen(go);
    if (*bench) return cmd_bench(bo, common);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
