// graver: command-line front end for the graver library.
//
// Exit status: 0 success / verified, 1 verification failed, 2 usage or
// parse error. "-" stands for standard input or output wherever a file is
// expected.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "graver/graver.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw graver::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw graver::error("cannot write '" + path + "'");
  out << text;
}

std::string dump(const graver::io::json& j) { return j.dump(2) + "\n"; }

graver::IntMatrix load_matrix(const std::string& path) {
  return graver::io::matrix_from_json(graver::io::parse_json(read_text(path)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graver bases, n-fold products, Graver complexity and K_{3,m} certificates"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::string out_path = "-";
  unsigned n = 1;
  unsigned m = 4;
  std::string cert_path;
  bool require_chaining = false;

  auto* nfold = app.add_subcommand("nfold", "print the n-fold product A^(n)");
  nfold->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  nfold->add_option("-n", n, "number of blocks")->required()->check(CLI::PositiveNumber);

  auto* graver_cmd = app.add_subcommand("graver", "compute the Graver basis");
  graver_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  graver_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* circuits_cmd = app.add_subcommand("circuits", "enumerate the circuits");
  circuits_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  circuits_cmd->add_option("--out", out_path, "output file (default: stdout)");

  auto* complexity_cmd = app.add_subcommand("complexity", "compute the Graver complexity g(A)");
  complexity_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();

  auto* cert = app.add_subcommand("cert", "K_{3,m} lower-bound certificates");
  cert->require_subcommand(1);
  auto* gen = cert->add_subcommand("gen", "generate the certificate for K_{3,m}");
  gen->add_option("-m", m, "m >= 4")->required();
  gen->add_option("--out", out_path, "output file (default: stdout)");
  auto* verify = cert->add_subcommand("verify", "verify a certificate file");
  verify->add_option("file", cert_path, "certificate JSON file, or - for stdin")->required();
  verify->add_flag("--chain", require_chaining,
                   "also require the inductive shape (last circuit and odd last coefficient)");

  auto* bound = app.add_subcommand("bound", "print 17*2^(m-3)-7");
  bound->add_option("-m", m, "m >= 4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*nfold) {
      write_text("-", dump(graver::io::matrix_to_json(graver::nfold_product(load_matrix(matrix_path), n))));
    } else if (*graver_cmd) {
      const auto g = graver::graver_basis(load_matrix(matrix_path));
      write_text(out_path, dump(graver::io::graver_basis_to_json(g)));
    } else if (*circuits_cmd) {
      const auto a = load_matrix(matrix_path);
      write_text(out_path, dump(graver::io::circuits_to_json(a, graver::circuits(a))));
    } else if (*complexity_cmd) {
      std::cout << graver::graver_complexity(load_matrix(matrix_path)) << "\n";
    } else if (*gen) {
      write_text(out_path,
                 dump(graver::io::certificate_to_json(graver::kthree::generate_certificate(m))));
    } else if (*verify) {
      const auto c =
          graver::io::certificate_from_json(graver::io::parse_json(read_text(cert_path)));
      const auto report = graver::kthree::verify_certificate(c, {require_chaining});
      for (const auto& r : report.results()) {
        std::cout << graver::kthree::to_string(r.status) << "  " << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
      }
      if (report.ok()) {
        std::cout << "certificate verified: g(" << c.m << ") >= " << c.claimed_bound << "\n";
        return kOk;
      }
      std::cerr << "certificate rejected; failed checks:";
      for (const auto& name : report.failed_checks()) std::cerr << " " << name;
      std::cerr << "\n";
      return kRejected;
    } else if (*bound) {
      std::cout << graver::kthree::bound_formula(m) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}
