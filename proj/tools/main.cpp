#include <CLI11.hpp>

#include "canrep/repfile.hpp"
#include "canrep/schofield.hpp"
#include "canrep/verify.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace canrep;

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInvalidInput = 2;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<long long> parse_weight_list(const std::string& s) {
  std::vector<long long> p;
  for (const std::string& part : split_list(s)) {
    try {
      size_t used = 0;
      p.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidInput("--p: '" + part + "' is not an integer");
    }
  }
  return p;
}

std::vector<Rat> parse_lambda_list(const std::string& s) {
  std::vector<Rat> lambda;
  for (const std::string& part : split_list(s)) {
    const auto q = rat_from_string(part);
    if (!q) throw InvalidInput("--lambda: '" + part + "' is not a rational");
    lambda.push_back(*q);
  }
  return lambda;
}

// --lambda is optional for up to three arms, where the normalization
// lambda_2 = 0, lambda_3 = 1 pins every value down.
CanonicalAlgebra build_algebra(const std::string& p_flag,
                               const std::string& lambda_flag) {
  Weights w;
  try {
    w = make_weights(parse_weight_list(p_flag));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("--p: ") + e.what());
  }
  std::vector<Rat> lambda;
  if (!lambda_flag.empty()) {
    lambda = parse_lambda_list(lambda_flag);
  } else if (w.arms() == 2) {
    lambda = {Rat(0)};
  } else if (w.arms() == 3) {
    lambda = {Rat(0), Rat(1)};
  } else {
    throw InvalidInput("--lambda is required for more than three arms");
  }
  try {
    return CanonicalAlgebra(std::move(w), std::move(lambda));
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

Rep load_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_rep(buf.str());
  } catch (const RepFileError& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInput(out_path + ": cannot write");
  out << text;
}

// The window spec of a module that is bit-exactly a constructor output,
// if any; lets `schofield` pick the structured basis automatically.
std::optional<RegularSpec> detect_window(const Rep& m) {
  for (int arm = 1; arm <= m.alg.arms(); ++arm) {
    const int p = static_cast<int>(m.alg.weights().p[arm - 1]);
    for (int a = 1; a <= p; ++a)
      for (int l = 1; l < p; ++l) {
        const RegularSpec s{arm, a, l};
        const Rep built = regular_exceptional(m.alg, s);
        if (built.dims == m.dims && built.mats == m.mats) return s;
      }
  }
  return std::nullopt;
}

int cmd_algebra(const std::string& p_flag, const std::string& lambda_flag,
                const std::vector<std::string>& bounds,
                const std::string& out_path) {
  const CanonicalAlgebra alg = build_algebra(p_flag, lambda_flag);
  std::string text = emit_algebra(alg);
  std::ostringstream extra;
  extra << "euler_characteristic=" << rat_to_string(
               euler_characteristic(alg.weights()))
        << "\nwild=" << (is_wild(alg.weights()) ? "true" : "false") << "\n";
  for (const std::string& b : bounds) {
    const auto det = lattice_from_string(alg.weights(), b);
    if (!det) throw InvalidInput("--bound: '" + b + "' is not a;x1,...,xt");
    extra << "translation_bound(" << lattice_to_string(*det)
          << ")=" << translation_bound({*det}) << "\n";
  }
  write_output(out_path, text + extra.str());
  return kOk;
}

int cmd_module_regular(const std::string& p_flag,
                       const std::string& lambda_flag, int arm, int a, int l,
                       const std::string& out_path) {
  const CanonicalAlgebra alg = build_algebra(p_flag, lambda_flag);
  Rep m = [&] {
    try {
      return regular_exceptional(alg, {arm, a, l});
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
  }();
  write_output(out_path, emit_rep(m));
  return kOk;
}

int cmd_module_rank1(const std::string& p_flag, const std::string& lambda_flag,
                     const std::string& r_flag, int n,
                     const std::string& out_path) {
  const CanonicalAlgebra alg = build_algebra(p_flag, lambda_flag);
  std::vector<int> r;
  for (long long v : parse_weight_list(r_flag)) r.push_back(static_cast<int>(v));
  Rep m = [&] {
    try {
      return rank_one(alg, {r, n});
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
  }();
  write_output(out_path, emit_rep(m));
  return kOk;
}

int cmd_ext(const std::string& x_path, const std::string& y_path,
            bool cocycles) {
  const Rep x = load_rep(x_path);
  const Rep y = load_rep(y_path);
  if (!(x.alg == y.alg))
    throw InvalidInput("the two modules live over different algebras");
  const auto [h, e] = [&] {
    try {
      return hom_ext(x, y);
    } catch (const std::invalid_argument& err) {
      throw InvalidInput(err.what());
    }
  }();
  std::printf("hom=%lld ext=%lld\n", h, e);
  if (cocycles && e > 0) {
    const UBasis classes = ext_basis_from_u(generic_u_basis(x, y));
    for (size_t k = 0; k < classes.vectors.size(); ++k) {
      std::printf("class %zu:\n", k);
      for (int id = 0; id < x.alg.arrow_count(); ++id) {
        const Mat& f = classes.vectors[k][id];
        if (f.empty_shape() || f.is_zero()) continue;
        std::printf("  %s:\n", x.alg.arrow_label(id).c_str());
        for (int row = 0; row < f.rows(); ++row) {
          std::string line = "   ";
          for (int col = 0; col < f.cols(); ++col)
            line += " " + rat_to_string(f.at(row, col));
          std::printf("%s\n", line.c_str());
        }
      }
    }
  }
  return kOk;
}

int cmd_kron(int n, const std::string& side, int k) {
  const KroneckerRep m = [&] {
    try {
      return side == "preproj" ? exceptional_preprojective(n, k)
                               : exceptional_preinjective(n, k);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
  }();
  std::printf("v=%d u=%d\n", m.v, m.u);
  for (int a = 0; a < m.n; ++a) {
    std::printf("A_%d:\n", a + 1);
    for (int r = 0; r < m.mats[a].rows(); ++r) {
      std::string line;
      for (int c = 0; c < m.mats[a].cols(); ++c) {
        if (c) line += " ";
        line += rat_to_string(m.mats[a].at(r, c));
      }
      std::printf("  %s\n", line.c_str());
    }
  }
  return kOk;
}

void print_report(const InductionRecord& rec) {
  auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
  std::printf("pair: n=%lld\n", rec.n);
  std::printf("basis: %s\n", rec.basis_kind == UBasisKind::structured
                                 ? "structured"
                                 : "generic");
  std::printf("relations: %s\n", flag(rec.report.relations));
  std::printf("exceptional: %s\n", flag(rec.report.exceptional));
  std::printf("dims additive: %s\n", flag(rec.report.dims_additive));
  std::printf("rank additive: %s\n", flag(rec.report.rank_additive));
  std::printf("coefficient audit: %s\n", flag(rec.report.coefficients.ok()));
  if (rec.report.acceptability)
    std::printf("acceptability audit: %s\n",
                flag(rec.report.acceptability->ok()));
}

int cmd_schofield(const std::string& x_path, const std::string& y_path,
                  const std::string& side, int k, const std::string& window,
                  const std::string& emit, const std::string& out_path) {
  const Rep x = load_rep(x_path);
  const Rep y = load_rep(y_path);
  if (!(x.alg == y.alg))
    throw InvalidInput("the two modules live over different algebras");

  std::optional<RegularSpec> spec;
  if (!window.empty()) {
    const auto parts = parse_weight_list(window);
    if (parts.size() != 3) throw InvalidInput("--window expects arm,a,l");
    spec = RegularSpec{static_cast<int>(parts[0]), static_cast<int>(parts[1]),
                       static_cast<int>(parts[2])};
  } else {
    spec = detect_window(x);
  }

  const InductionRecord rec = [&] {
    try {
      const long long n = ext_dim(x, y);
      if (n < 1 || n > 64)
        throw std::invalid_argument("extension dimension " +
                                    std::to_string(n) +
                                    " does not admit an induction step");
      const KroneckerRep theta =
          side == "preproj"
              ? exceptional_preprojective(static_cast<int>(n), k)
              : exceptional_preinjective(static_cast<int>(n), k);
      return induction_step(x, y, theta, spec);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
  }();

  print_report(rec);
  write_output(out_path, emit == "latex" ? latex_matrices(rec.m)
                                         : emit_rep(rec.m));
  const bool ok = rec.report.ok() && rec.report.coefficients.ok();
  return ok ? kOk : kVerificationFailure;
}

int cmd_audit(const std::string& m_path, bool acceptability) {
  const Rep m = load_rep(m_path);
  bool ok = true;
  const RelationReport rel = check_relations(m);
  if (!rel.ok()) {
    ok = false;
    std::printf("relations: FAIL (%zu of %d)\n", rel.failures.size(),
                m.alg.relation_count());
  } else {
    std::printf("relations: pass\n");
  }
  const CoefficientReport coeff = coefficient_audit(m);
  if (coeff.ok()) {
    std::printf("coefficient audit: pass\n");
  } else {
    ok = false;
    std::printf("coefficient audit: FAIL (%zu entries)\n",
                coeff.offenders.size());
    for (const CoefficientOffender& o : coeff.offenders)
      std::printf("  %s[%d][%d] = %s\n", m.alg.arrow_label(o.arrow).c_str(),
                  o.row, o.col, rat_to_string(o.value).c_str());
  }
  if (acceptability) {
    const AcceptabilityReport acc = acceptability_audit(m);
    auto flag = [](bool b) { return b ? "pass" : "FAIL"; };
    std::printf("acceptability: first arrows %s, binary arrows %s, arm-2 "
                "paths %s, center paths %s, interior paths %s%s\n",
                flag(acc.c1), flag(acc.c2), flag(acc.c3), flag(acc.c4),
                flag(acc.c5),
                acc.applied_to_rank_zero ? " (rank zero module)" : "");
    if (!acc.ok()) ok = false;
  }
  return ok ? kOk : kVerificationFailure;
}

int cmd_verify_suite(const std::string& p_flag, const std::string& lambda_flag,
                     const std::vector<int>& only, const std::vector<int>& skip,
                     const std::string& self_path) {
  const CanonicalAlgebra alg = build_algebra(p_flag, lambda_flag);
  const CanonicalAlgebra pinned = CanonicalAlgebra(make_weights({2, 3, 7}),
                                                   {Rat(0), Rat(1)});
  if (!(alg == pinned))
    throw InvalidInput(
        "the verification suite is pinned to weights 2,3,7 with the "
        "normalized parameters");

  std::vector<int> ids;
  for (int id : all_check_ids()) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end())
      continue;
    if (std::find(skip.begin(), skip.end(), id) != skip.end()) continue;
    ids.push_back(id);
  }
  if (ids.empty()) throw InvalidInput("no checks selected");

  size_t workers = 1;
  if (const char* env = std::getenv("CANREP_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v < 1) throw InvalidInput("CANREP_WORKERS must be a positive integer");
    workers = static_cast<size_t>(v);
  }
  workers = std::min(workers, ids.size());

  std::vector<CheckResult> results(ids.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < ids.size(); i = next.fetch_add(1))
      results[i] = run_check(ids[i], self_path);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (size_t i = 0; i < workers; ++i) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }

  bool all_pass = true;
  for (const CheckResult& r : results) {
    std::printf("%s\n", format_check_line(r).c_str());
    all_pass = all_pass && r.pass;
  }
  size_t passed = 0;
  for (const CheckResult& r : results)
    if (r.pass) ++passed;
  std::printf("passed %zu of %zu\n", passed, results.size());
  return all_pass ? kOk : kVerificationFailure;
}

std::string self_executable(const char* argv0) {
  char buf[4096];
  const ssize_t len = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
  if (len > 0) {
    buf[len] = '\0';
    return buf;
  }
  return argv0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with modules over canonical algebras"};
  app.require_subcommand(1);

  std::string p_flag, lambda_flag, out_path;
  std::vector<std::string> bounds;

  auto* algebra = app.add_subcommand("algebra", "describe an algebra");
  algebra->add_option("--p", p_flag, "weights, comma separated")->required();
  algebra->add_option("--lambda", lambda_flag, "parameters for arms 2..t");
  algebra->add_option("--bound", bounds,
                      "determinant a;x1,...,xt to bound the translation of");
  algebra->add_option("--out", out_path, "write the descriptor here");

  auto* module = app.add_subcommand("module", "build a module");
  module->require_subcommand(1);
  int arm = 0, spec_a = 0, spec_l = 0, rank1_n = 0;
  std::string r_flag;
  auto* regular = module->add_subcommand("regular", "window module");
  regular->add_option("--p", p_flag)->required();
  regular->add_option("--lambda", lambda_flag);
  regular->add_option("--arm", arm)->required();
  regular->add_option("--a", spec_a)->required();
  regular->add_option("--l", spec_l)->required();
  regular->add_option("--out", out_path);
  auto* rank1 = module->add_subcommand("rank1", "rank-one module");
  rank1->add_option("--p", p_flag)->required();
  rank1->add_option("--lambda", lambda_flag);
  rank1->add_option("--r", r_flag, "drop positions, comma separated")
      ->required();
  rank1->add_option("--n", rank1_n)->required();
  rank1->add_option("--out", out_path);

  std::string x_path, y_path;
  bool cocycles = false;
  auto* ext = app.add_subcommand("ext", "hom and ext of a pair");
  ext->add_option("--x", x_path)->required();
  ext->add_option("--y", y_path)->required();
  ext->add_flag("--cocycles", cocycles, "print ext class representatives");

  int kron_n = 0, kron_k = 0;
  std::string side = "preproj";
  auto* kron = app.add_subcommand("kron", "exceptional kronecker module");
  kron->add_option("--n", kron_n)->required();
  kron->add_option("--side", side)->check(CLI::IsMember({"preproj", "preinj"}));
  kron->add_option("--k", kron_k)->required();

  std::string window, emit_format;
  auto* schofield = app.add_subcommand("schofield", "one induction step");
  schofield->add_option("--x", x_path)->required();
  schofield->add_option("--y", y_path)->required();
  schofield->add_option("--kron-side", side)
      ->check(CLI::IsMember({"preproj", "preinj"}));
  schofield->add_option("--kron-k", kron_k)->required();
  schofield->add_option("--window", window, "arm,a,l window of x (detected "
                                            "automatically when omitted)");
  schofield->add_option("--emit", emit_format)
      ->check(CLI::IsMember({"rep", "latex"}));
  schofield->add_option("--out", out_path);

  std::string m_path;
  bool acceptability = false;
  auto* audit = app.add_subcommand("audit", "entry audits of a module");
  audit->add_option("--m", m_path)->required();
  audit->add_flag("--acceptability", acceptability);

  std::vector<int> only, skip;
  auto* verify = app.add_subcommand("verify-suite", "run the checks");
  verify->add_option("--p", p_flag)->required();
  verify->add_option("--lambda", lambda_flag);
  verify->add_option("--only", only, "check ids to run")->delimiter(',');
  verify->add_option("--skip", skip, "check ids to leave out")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (algebra->parsed())
      return cmd_algebra(p_flag, lambda_flag, bounds, out_path);
    if (regular->parsed())
      return cmd_module_regular(p_flag, lambda_flag, arm, spec_a, spec_l,
                                out_path);
    if (rank1->parsed())
      return cmd_module_rank1(p_flag, lambda_flag, r_flag, rank1_n, out_path);
    if (ext->parsed()) return cmd_ext(x_path, y_path, cocycles);
    if (kron->parsed()) return cmd_kron(kron_n, side, kron_k);
    if (schofield->parsed())
      return cmd_schofield(x_path, y_path, side, kron_k, window, emit_format,
                           out_path);
    if (audit->parsed()) return cmd_audit(m_path, acceptability);
    if (verify->parsed())
      return cmd_verify_suite(p_flag, lambda_flag, only, skip,
                              self_executable(argv[0]));
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kInvalidInput;
  }
  return kInvalidInput;
}
