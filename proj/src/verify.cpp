#include "canrep/verify.hpp"

#include "canrep/repfile.hpp"
#include "canrep/schofield.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace canrep {

namespace {

namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

CanonicalAlgebra wild_algebra() {
  return CanonicalAlgebra(make_weights({2, 3, 7}), {Rat(0), Rat(1)});
}

// Every window spec the constructor accepts over one star.
std::vector<RegularSpec> all_window_specs(const Weights& w) {
  std::vector<RegularSpec> specs;
  for (int arm = 1; arm <= w.arms(); ++arm) {
    const int p = static_cast<int>(w.p[arm - 1]);
    for (int a = 1; a <= p; ++a)
      for (int l = 1; l < p; ++l) specs.push_back({arm, a, l});
  }
  return specs;
}

// Small constructor outputs with every vertex dimension at most three.
std::vector<Rep> small_pool(const CanonicalAlgebra& alg) {
  std::vector<Rep> pool;
  for (int arm = 1; arm <= alg.arms(); ++arm)
    for (int a = 1; a <= alg.weights().p[arm - 1]; ++a)
      pool.push_back(regular_exceptional(alg, {arm, a, 1}));
  const std::vector<std::vector<int>> rs = {
      {0, 0, 0}, {1, 1, 1}, {1, 2, 6}, {0, 1, 2}};
  for (const auto& r : rs)
    for (int n = 0; n <= 2; ++n) pool.push_back(rank_one(alg, {r, n}));
  return pool;
}

Outcome check_wildness() {
  const Weights wild = make_weights({2, 3, 7});
  const Weights tame1 = make_weights({3, 3, 3});
  const Weights tame2 = make_weights({2, 2, 2, 2});
  if (euler_characteristic(wild) != rat_frac(-1, 42) || !is_wild(wild))
    return {false, "chi(2,3,7) is not -1/42"};
  if (euler_characteristic(tame1) != 0 || is_wild(tame1))
    return {false, "chi(3,3,3) is not 0"};
  if (euler_characteristic(tame2) != 0 || is_wild(tame2))
    return {false, "chi(2,2,2,2) is not 0"};
  return {true, "chi(2,3,7) = -1/42; chi(3,3,3) = chi(2,2,2,2) = 0"};
}

Outcome check_regular_constructors() {
  const CanonicalAlgebra alg = wild_algebra();
  int count = 0;
  for (const RegularSpec& s : all_window_specs(alg.weights())) {
    const Rep m = regular_exceptional(alg, s);
    ++count;
    std::ostringstream at;
    at << "window arm " << s.arm << " a=" << s.a << " l=" << s.l;
    if (!check_relations(m).ok()) return {false, at.str() + ": relations fail"};
    if (rep_rank(m) != 0) return {false, at.str() + ": rank is not 0"};
    if (!is_exceptional(m)) return {false, at.str() + ": not exceptional"};
    if (!coefficient_audit(m).ok())
      return {false, at.str() + ": coefficient audit fails"};
  }
  return {true, std::to_string(count) +
                    " window modules pass relations, exceptionality, rank "
                    "zero and the coefficient audit"};
}

Outcome check_rank_one_constructors() {
  const CanonicalAlgebra alg = wild_algebra();
  std::set<Rat> allowed = {Rat(0), Rat(1)};
  for (const Rat& l : alg.lambdas()) allowed.insert(l);
  int count = 0;
  for (int r1 = 0; r1 < 2; ++r1)
    for (int r2 = 0; r2 < 3; ++r2)
      for (int r3 = 0; r3 < 7; ++r3)
        for (int n = 0; n <= 2; ++n) {
          const Rep m = rank_one(alg, {{r1, r2, r3}, n});
          ++count;
          std::ostringstream at;
          at << "rank-one r=(" << r1 << "," << r2 << "," << r3 << ") n=" << n;
          if (!check_relations(m).ok())
            return {false, at.str() + ": relations fail"};
          if (rep_rank(m) != 1) return {false, at.str() + ": rank is not 1"};
          if (!is_exceptional(m)) return {false, at.str() + ": not exceptional"};
          for (const Mat& f : m.mats)
            for (int r = 0; r < f.rows(); ++r)
              for (int c = 0; c < f.cols(); ++c)
                if (!allowed.count(f.at(r, c)))
                  return {false, at.str() + ": entry " +
                                     rat_to_string(f.at(r, c)) +
                                     " outside {0, 1, lambda_i}"};
        }
  return {true, std::to_string(count) +
                    " rank-one modules pass relations, exceptionality and "
                    "the entry palette"};
}

Outcome check_kronecker() {
  for (int n = 2; n <= 4; ++n) {
    const auto dims = kronecker_dims(n, 7);
    for (int k = 0; k <= 4; ++k)
      for (const bool preproj : {true, false}) {
        const KroneckerRep m = preproj ? exceptional_preprojective(n, k)
                                       : exceptional_preinjective(n, k);
        std::ostringstream at;
        at << (preproj ? "preprojective" : "preinjective") << " n=" << n
           << " k=" << k;
        const long long hi = dims[k + 1], lo = dims[k];
        const long long v = preproj ? hi : lo, u = preproj ? lo : hi;
        if (m.v != v || m.u != u)
          return {false, at.str() + ": dimensions disagree with the recurrence"};
        for (const Mat& a : m.mats)
          for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c)
              if (a.at(r, c) != 0 && a.at(r, c) != 1)
                return {false, at.str() + ": entry outside {0, 1}"};
        if (!binary_disjoint_support(m))
          return {false, at.str() + ": overlapping arrow supports"};
        if (kronecker_hom_ext(m, m) != std::pair<long long, long long>{1, 0})
          return {false, at.str() + ": not exceptional"};
      }
  }
  return {true, "30 representations match the dimension recurrence with 0-1 "
                "disjoint matrices and self hom-ext (1,0)"};
}

Outcome check_hom_ext_model() {
  const CanonicalAlgebra alg = wild_algebra();
  const std::vector<Rep> pool = small_pool(alg);
  for (const Rep& m : pool)
    if (hom_ext(m, m) != std::pair<long long, long long>{1, 0})
      return {false, "a constructor output is not exceptional"};

  std::mt19937 rng(5);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 20; ++i) {
    const Rep& x = pool[pick(rng)];
    const Rep& y = pool[pick(rng)];
    if (!image_delta_inside_u(x, y))
      return {false, "a coboundary escapes the admissible subspace"};
  }

  for (int a = 2; a <= 7; ++a) {
    const Rep s = regular_exceptional(alg, {3, a, 1});
    const Rep prev = regular_exceptional(alg, {3, a - 1, 1});
    if (ext_dim(s, prev) != 1)
      return {false, "tube extension dimension is not 1 at a=" +
                         std::to_string(a)};
  }
  return {true, "20 random pairs keep im(delta) inside U; all constructor "
                "outputs exceptional; tube extensions one-dimensional"};
}

Outcome check_tensor_blowup() {
  const CanonicalAlgebra alg = wild_algebra();
  const std::vector<Rep> pool = small_pool(alg);
  std::mt19937 rng(6);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> factor(1, 3);
  for (int i = 0; i < 10; ++i) {
    const Rep& x = pool[pick(rng)];
    const Rep& y = pool[pick(rng)];
    const int u = factor(rng), v = factor(rng);
    const long long direct = ext_dim(tensor_power(x, u), tensor_power(y, v));
    const long long predicted = u * v * ext_dim(x, y);
    if (direct != predicted) {
      std::ostringstream o;
      o << "blow-up u=" << u << " v=" << v << " gives " << direct
        << ", expected " << predicted;
      return {false, o.str()};
    }
  }
  return {true, "10 blown-up pairs match u*v times the base extension "
                "dimension"};
}

Outcome check_structured_bases() {
  const CanonicalAlgebra alg = wild_algebra();
  const std::vector<RegularSpec> windows = {
      {3, 2, 3}, {3, 2, 6}, {3, 7, 3}, {1, 2, 1}, {2, 2, 2}};
  const std::vector<RankOneSpec> ys = {
      {{1, 1, 1}, 0}, {{0, 0, 0}, 1}, {{1, 2, 6}, 0}};
  int count = 0;
  for (const RegularSpec& s : windows)
    for (const RankOneSpec& rs : ys) {
      const Rep x = regular_exceptional(alg, s);
      const Rep y = rank_one(alg, rs);
      const UBasis b = structured_u_basis(x, s, y);
      const UBasis g = generic_u_basis(x, y);
      std::ostringstream at;
      at << "window arm " << s.arm << " a=" << s.a << " l=" << s.l;
      if (b.vectors.size() != g.vectors.size())
        return {false, at.str() + ": structured and solver counts differ"};
      if (!b.entries.ok())
        return {false, at.str() + ": " + b.entries.offenders.front()};
      if (!b.vectors.empty()) {
        const Mat joint = hstack(u_basis_columns(b), u_basis_columns(g));
        if (rank(joint) != static_cast<int>(b.vectors.size()))
          return {false, at.str() + ": spans differ"};
      }
      ++count;
    }
  return {true, std::to_string(count) +
                    " window/rank-one pairs: counts, spans and entry "
                    "palettes agree"};
}

Outcome check_induction_pipeline() {
  const CanonicalAlgebra alg = wild_algebra();
  std::vector<Rep> pool;
  std::vector<std::optional<RegularSpec>> windows;
  for (int a = 1; a <= 7; ++a)
    for (int l = 1; l <= 3; ++l) {
      pool.push_back(regular_exceptional(alg, {3, a, l}));
      windows.push_back(RegularSpec{3, a, l});
    }
  for (const RegularSpec& s :
       std::vector<RegularSpec>{{1, 1, 1}, {2, 1, 1}, {2, 2, 2}}) {
    pool.push_back(regular_exceptional(alg, s));
    windows.push_back(s);
  }
  const std::vector<RankOneSpec> rs = {
      {{0, 0, 0}, 0}, {{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0},
      {{1, 1, 1}, 0}, {{1, 2, 3}, 0}, {{1, 2, 6}, 0}, {{0, 0, 3}, 0},
      {{1, 1, 1}, 1}, {{0, 0, 0}, 1}};
  for (const RankOneSpec& r : rs) {
    pool.push_back(rank_one(alg, r));
    windows.push_back(std::nullopt);
  }

  const auto hits = find_orthogonal_pairs(pool);
  if (hits.size() < 3)
    return {false, "fewer than 3 orthogonal exceptional pairs found"};

  int structured = 0, audited = 0;
  for (const auto& h : hits) {
    const InductionRecord rec =
        induction_step(pool[h.x_index], pool[h.y_index],
                       exceptional_preprojective(static_cast<int>(h.n), 1),
                       windows[h.x_index]);
    std::ostringstream at;
    at << "pair (" << h.x_index << ", " << h.y_index << ")";
    if (!rec.report.ok())
      return {false, at.str() + ": relations, exceptionality or additivity "
                                "fail on the middle term"};
    if (rec.basis_kind == UBasisKind::structured) ++structured;
    if (rep_rank(rec.m) <= 4) {
      ++audited;
      if (!rec.report.coefficients.ok())
        return {false, at.str() + ": middle term fails the coefficient audit"};
    }
  }
  std::ostringstream o;
  o << hits.size() << " orthogonal pairs drive full induction steps ("
    << structured << " with structured bases); all " << audited
    << " middle terms of rank at most 4 pass the coefficient audit";
  return {true, o.str()};
}

Outcome check_translation_bound() {
  const Weights w = make_weights({2, 3, 7});
  const LatticeElement target = add(lattice_c(w), dualizing_element(w));
  bool formula_ok = true;
  std::string first;
  int violations = 0;
  for (long long a = -2; a <= 1; ++a)
    for (long long x1 = 0; x1 < 2; ++x1)
      for (long long x2 = 0; x2 < 3; ++x2)
        for (long long x3 = 0; x3 < 7; ++x3) {
          const LatticeElement det = normal_form(w, a, {x1, x2, x3});
          const long long bound = translation_bound({det});
          if (bound != 2 - a) formula_ok = false;
          for (long long n = bound + 1; n <= bound + 20; ++n) {
            const LatticeElement probe = sub(target, tau_shift(det, n));
            if (is_nonnegative(probe)) {
              ++violations;
              if (first.empty()) {
                std::ostringstream o;
                o << "determinant " << lattice_to_string(det) << " has bound "
                  << bound << " yet n=" << n << " leaves "
                  << lattice_to_string(probe) << " nonnegative";
                first = o.str();
              }
            }
          }
        }
  if (!formula_ok) return {false, "bound formula disagrees"};
  if (violations == 0)
    return {true, "all 168 determinants stay negative for 20 shifts past "
                  "the bound"};

  // Locate where the zero determinant actually clears, for the record.
  const LatticeElement det0 = lattice_zero(w);
  long long clears = -1;
  for (long long n0 = 1; n0 <= 200 && clears < 0; ++n0) {
    bool clean = true;
    for (long long n = n0; n <= n0 + 40; ++n)
      if (is_nonnegative(sub(target, tau_shift(det0, n)))) clean = false;
    if (clean) clears = n0;
  }
  std::ostringstream o;
  o << first << " (" << violations
    << " violations; the zero determinant clears only from n=" << clears
    << ")";
  return {false, o.str()};
}

Outcome check_euler_calibration() {
  const CanonicalAlgebra alg = wild_algebra();
  const std::vector<Rep> pool = small_pool(alg);
  std::mt19937 rng(10);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 10; ++i) {
    const Rep& n = pool[pick(rng)];
    for (VertexId v = 0; v < alg.vertex_count(); ++v) {
      const Rep p = projective_rep(alg, v);
      if (euler_form(alg, p.dims, n.dims) != n.dims[v])
        return {false, "projective pairing misses dim at vertex " +
                           alg.vertex_label(v)};
    }
  }
  for (const Rep& x : pool)
    for (const Rep& y : pool) {
      const auto [h, e] = hom_ext(x, y);
      if (h - e != euler_form(alg, x.dims, y.dims))
        return {false, "hom minus ext differs from the euler form on a "
                       "constructor pair"};
    }
  std::ostringstream o;
  o << "projective pairings recover dimensions at all "
    << alg.vertex_count() << " vertices; hom minus ext matches the form on "
    << pool.size() * pool.size() << " pairs";
  return {true, o.str()};
}

CanonicalAlgebra random_algebra(std::mt19937& rng) {
  switch (rng() % 4) {
    case 0:
      return CanonicalAlgebra(make_weights({2, 3, 7}), {Rat(0), Rat(1)});
    case 1:
      return CanonicalAlgebra(make_weights({3, 3, 3}), {Rat(0), Rat(1)});
    case 2:
      return CanonicalAlgebra(make_weights({2, 3, 5}),
                              {Rat(0), rat_frac(1, 2)});
    default:
      return CanonicalAlgebra(make_weights({2, 2, 2, 2}),
                              {Rat(0), Rat(1), Rat(3)});
  }
}

Rep random_constructor_rep(std::mt19937& rng) {
  const CanonicalAlgebra alg = random_algebra(rng);
  auto base = [&]() -> Rep {
    if (rng() % 2 == 0) {
      const int arm = 1 + static_cast<int>(rng() % alg.arms());
      const int p = static_cast<int>(alg.weights().p[arm - 1]);
      const int a = 1 + static_cast<int>(rng() % p);
      const int l = 1 + static_cast<int>(rng() % (p - 1));
      return regular_exceptional(alg, {arm, a, l});
    }
    std::vector<int> r;
    for (int i = 1; i <= alg.arms(); ++i)
      r.push_back(static_cast<int>(rng() % alg.weights().p[i - 1]));
    return rank_one(alg, {r, static_cast<int>(rng() % 3)});
  };
  Rep m = base();
  switch (rng() % 3) {
    case 0:
      return m;
    case 1:
      return tensor_power(m, 2);
    default:
      return direct_sum(m, base());
  }
}

struct CliRun {
  int code = -1;
  std::string out;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliRun run_cli(const std::string& cli, const std::string& args,
               const fs::path& dir) {
  const fs::path out = dir / "stdout.txt";
  const std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() +
                          "\" 2> \"" + (dir / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  CliRun r;
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  r.out = read_file(out);
  return r;
}

Outcome check_file_format(const std::string& cli) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Rep m = random_constructor_rep(rng);
    const Rep back = parse_rep(emit_rep(m));
    if (!(back.alg == m.alg) || back.dims != m.dims || back.mats != m.mats)
      return {false, "round-trip changed representation " + std::to_string(i)};
  }
  if (cli.empty())
    return {false, "100 round-trips pass but no command line binary was "
                   "supplied for the exit-code checks"};

  const fs::path dir =
      fs::temp_directory_path() /
      ("canrep-verify-" + std::to_string(static_cast<long long>(getpid())));
  fs::create_directories(dir);
  Outcome result{true, ""};
  auto fail = [&](const std::string& why, const CliRun& r) {
    result = {false, why + " (exit " + std::to_string(r.code) + ")"};
  };

  const CanonicalAlgebra alg = wild_algebra();
  const Rep good = rank_one(alg, {{1, 1, 1}, 0});
  {
    std::ofstream f(dir / "a.rep");
    f << emit_rep(good);
  }
  std::vector<Mat> g;
  for (VertexId v = 0; v < alg.vertex_count(); ++v) {
    Mat id = Mat::identity(good.dims[v]);
    if (v == alg.vertex_zero())
      for (int r = 0; r < id.rows(); ++r) id.at(r, r) = 2;
    g.push_back(id);
  }
  {
    std::ofstream f(dir / "scaled.rep");
    f << emit_rep(base_change(good, g));
  }
  {
    std::ofstream f(dir / "broken.rep");
    f << "{ \"algebra\": ";
  }

  const std::string a = (dir / "a.rep").string();
  CliRun r = run_cli(cli, "ext --x \"" + a + "\" --y \"" + a + "\"", dir);
  if (r.code != 0 || r.out.find("hom=1 ext=0") == std::string::npos)
    fail("ext on a valid pair should exit 0 with hom=1 ext=0", r);

  if (result.pass) {
    r = run_cli(cli, "audit --m \"" + (dir / "scaled.rep").string() + "\"",
                dir);
    if (r.code != 1)
      fail("audit on off-palette entries should exit 1", r);
  }
  if (result.pass) {
    r = run_cli(cli, "ext --x \"" + (dir / "broken.rep").string() +
                         "\" --y \"" + a + "\"",
                dir);
    if (r.code != 2) fail("a malformed file should exit 2", r);
  }
  if (result.pass) {
    r = run_cli(cli, "module rank1 --p 2,3,1 --r 0,0,0 --n 0", dir);
    if (r.code != 2) fail("an invalid weight sequence should exit 2", r);
  }
  if (result.pass) {
    r = run_cli(cli, "verify-suite --p 2,3,5", dir);
    if (r.code != 2) fail("verify-suite on unsupported weights should exit 2",
                          r);
  }
  fs::remove_all(dir);
  if (result.pass)
    result.detail = "100 round-trips are exact; exit codes 0, 1 and 2 behave "
                    "per contract";
  return result;
}

struct CheckSpec {
  int id;
  const char* name;
  double budget_seconds;  // 0 disables the budget
};

const CheckSpec kChecks[] = {
    {1, "wildness gate", 0},
    {2, "regular window constructors", 10},
    {3, "rank-one constructors", 30},
    {4, "kronecker constructors", 5},
    {5, "hom-ext model", 0},
    {6, "tensor blow-up", 0},
    {7, "structured bases", 0},
    {8, "induction pipeline", 120},
    {9, "translation bound", 0},
    {10, "euler form calibration", 0},
    {11, "file format and exit codes", 0},
};

Outcome dispatch(int id, const std::string& cli) {
  switch (id) {
    case 1: return check_wildness();
    case 2: return check_regular_constructors();
    case 3: return check_rank_one_constructors();
    case 4: return check_kronecker();
    case 5: return check_hom_ext_model();
    case 6: return check_tensor_blowup();
    case 7: return check_structured_bases();
    case 8: return check_induction_pipeline();
    case 9: return check_translation_bound();
    case 10: return check_euler_calibration();
    case 11: return check_file_format(cli);
    default: throw std::invalid_argument("unknown check id");
  }
}

}  // namespace

const std::vector<int>& all_check_ids() {
  static const std::vector<int> ids = [] {
    std::vector<int> v;
    for (const CheckSpec& c : kChecks) v.push_back(c.id);
    return v;
  }();
  return ids;
}

std::string check_name(int id) {
  for (const CheckSpec& c : kChecks)
    if (c.id == id) return c.name;
  throw std::invalid_argument("unknown check id");
}

CheckResult run_check(int id, const std::string& cli_path) {
  const CheckSpec* spec = nullptr;
  for (const CheckSpec& c : kChecks)
    if (c.id == id) spec = &c;
  if (!spec) throw std::invalid_argument("unknown check id");

  CheckResult r;
  r.id = id;
  r.name = spec->name;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = dispatch(id, cli_path);
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("threw: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  if (spec->budget_seconds > 0 && r.seconds > spec->budget_seconds) {
    r.pass = false;
    r.detail += " [exceeded the " +
                std::to_string(static_cast<int>(spec->budget_seconds)) +
                " s budget]";
  }
  return r;
}

std::string format_check_line(const CheckResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r.seconds);
  std::string line = std::string(r.pass ? "[PASS]" : "[FAIL]") + " " +
                     (r.id < 10 ? "0" : "") + std::to_string(r.id) + " " +
                     r.name + " (" + buf + " s)";
  if (!r.detail.empty()) line += "\n       " + r.detail;
  return line;
}

}  // namespace canrep
