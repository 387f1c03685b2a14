// mmt: command-line front end for the norm, tensor-norm, witness, bounds and
// Strassen modules. JSON by default; --format csv for tabular reports.
//
// Exit codes: 0 ok, 1 an invariant check failed, 2 usage or parse error,
// 3 unsupported norm request.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "mmt/bounds.hpp"
#include "mmt/errors.hpp"
#include "mmt/io.hpp"
#include "mmt/matnorm.hpp"
#include "mmt/random.hpp"
#include "mmt/strassen.hpp"
#include "mmt/tensornorm.hpp"
#include "mmt/witness.hpp"

namespace {

using mmt::Json;

constexpr int kOk = 0, kInvariant = 1, kUsage = 2, kUnsupported = 3;

struct Globals {
  std::uint64_t seed = 42;
  std::size_t restarts = 100;
  std::size_t sweeps = 500;
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
  double kg_upper = mmt::GrothendieckConstantConfig::proven_upper(mmt::Field::real);
  std::size_t cap = 20;

  mmt::AscentConfig ascent() const {
    mmt::AscentConfig a;
    a.restarts = restarts;
    a.max_sweeps = sweeps;
    a.tol = tol;
    a.seed = seed;
    a.norm.enumeration_cap = cap;
    return a;
  }
  mmt::NormOptions norm() const { return {cap}; }
  mmt::GrothendieckConstantConfig kg() const { return {mmt::Field::real, kg_upper}; }
};

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size() || v <= 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw mmt::ParseError("bad size '" + tok + "' in list '" + csv + "'", 0);
    }
  }
  if (out.empty()) throw mmt::ParseError("empty size list", 0);
  return out;
}

std::vector<mmt::Exponent> parse_exponents(const std::string& csv) {
  std::vector<mmt::Exponent> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(mmt::Exponent::parse(tok));
  return out;
}

// Output sink: --out file or stdout, with the resolved config embedded.
class Report {
 public:
  Report(const Globals& g, std::string command, Json args) : g_(g) {
    config_["command"] = std::move(command);
    config_["args"] = std::move(args);
    config_["seed"] = g.seed;
    config_["restarts"] = g.restarts;
    config_["sweeps"] = g.sweeps;
    config_["tol"] = g.tol;
    config_["format"] = g.format;
    config_["kg_upper"] = g.kg_upper;
    config_["enumeration_cap"] = g.cap;
  }

  bool csv() const { return g_.format == "csv"; }

  void json(Json result) const {
    Json doc;
    doc["config"] = config_;
    doc["result"] = std::move(result);
    emit(doc.dump(2) + "\n");
  }

  void table(const std::string& header, const std::vector<std::string>& rows) const {
    std::string text = "# config: " + config_.dump() + "\n" + header + "\n";
    for (const auto& r : rows) text += r + "\n";
    emit(text);
  }

 private:
  void emit(const std::string& text) const {
    if (g_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(g_.out, std::ios::binary);
    if (!f) throw mmt::ParseError("cannot write '" + g_.out + "'", 0);
    f << text;
  }

  const Globals& g_;
  Json config_;
};

std::string join(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) {
    if (!s.empty()) s += ',';
    s += c;
  }
  return s;
}

std::string num(double v) { return mmt::format_double(v); }

int cmd_norm(const Globals& g, const std::string& file, const std::string& ps, const std::string& qs, bool lower) {
  const auto m = mmt::read_matrix_file(file);
  const auto p = mmt::Exponent::parse(ps), q = mmt::Exponent::parse(qs);
  mmt::NormResult r;
  if (mmt::has_exact_path(m, p, q, g.norm())) {
    r = mmt::pq_norm_exact(m, p, q, g.norm());
  } else if (p.is_infinite() && q.is_one() && m.is_real() && lower) {
    r = mmt::infty_one_norm_heuristic(m, g.restarts, g.seed);
  } else if (lower) {
    r = mmt::pq_norm_lower_heuristic(m, p, q, g.restarts, g.seed);
  } else {
    r = mmt::pq_norm_exact(m, p, q, g.norm());  // throws with guidance
  }
  Report rep(g, "norm", Json{{"file", file}, {"p", p.to_string()}, {"q", q.to_string()}, {"lower_bound", lower}});
  if (rep.csv()) {
    rep.table("value,kind,p,q", {join({num(r.value), mmt::to_string(r.kind), p.to_string(), q.to_string()})});
  } else {
    rep.json(mmt::to_json(r));
  }
  return kOk;
}

int cmd_tnorm(const Globals& g, const std::vector<std::size_t>& dims, const std::vector<std::string>& exps) {
  const mmt::Dims d{dims.at(0), dims.at(1), dims.at(2)};
  const auto e = mmt::ExponentTriple::parse(exps.at(0), exps.at(1), exps.at(2));
  const auto rep_data = mmt::sandwich(d, e, g.kg(), g.ascent());
  Report rep(g, "tnorm", Json{{"dims", mmt::dims_to_json(d)}, {"triple", mmt::triple_to_json(e)}});
  if (rep.csv()) {
    rep.table("l,m,n,p,q,r,lower,estimate,upper",
              {join({std::to_string(d.l), std::to_string(d.m), std::to_string(d.n), e.p.to_string(), e.q.to_string(),
                     e.r.to_string(), num(rep_data.lower), num(rep_data.estimate.value), num(rep_data.upper)})});
  } else {
    rep.json(mmt::to_json(rep_data));
  }
  return rep_data.holds ? kOk : kInvariant;
}

int cmd_kg(const Globals& g, const std::vector<std::string>& files, std::size_t l, const std::string& cert_path) {
  std::vector<mmt::DenseMatrix> ms;
  for (const auto& f : files) ms.push_back(mmt::read_matrix_file(f));
  const auto est = mmt::kg_lower_bound(ms, l, g.ascent());
  if (!cert_path.empty()) {
    std::ofstream f(cert_path, std::ios::binary);
    if (!f) throw mmt::ParseError("cannot write '" + cert_path + "'", 0);
    f << mmt::to_json(*est.certificate).dump(2) << "\n";
  }
  Report rep(g, "kg", Json{{"files", files}, {"l", l}, {"certificate_path", cert_path}});
  if (rep.csv()) {
    rep.table("l,value,certificate", {join({std::to_string(l), num(est.value), cert_path})});
  } else {
    Json j = mmt::to_json(est);
    j["certificate_path"] = cert_path;
    rep.json(std::move(j));
  }
  return kOk;
}

int cmd_sharpness(const Globals& g, const std::vector<std::size_t>& sizes, const std::string& exps) {
  const auto ex = parse_exponents(exps);
  std::vector<mmt::SharpnessReport> rows;
  for (auto l : sizes)
    for (auto m : sizes)
      for (auto n : sizes)
        for (const auto& p : ex)
          for (const auto& q : ex)
            for (const auto& r : ex) rows.push_back(mmt::sharpness_check({l, m, n}, {p, q, r}));
  bool all = true;
  for (const auto& r : rows) all = all && r.equal;
  Report rep(g, "sharpness", Json{{"sizes", sizes}, {"exponents", exps}});
  if (rep.csv()) {
    std::vector<std::string> lines;
    for (const auto& r : rows)
      lines.push_back(join({std::to_string(r.dims.l), std::to_string(r.dims.m), std::to_string(r.dims.n),
                            r.triple.p.to_string(), r.triple.q.to_string(), r.triple.r.to_string(), num(r.lhs),
                            num(r.rhs), num(r.relerr), r.equal ? "1" : "0"}));
    rep.table("l,m,n,p,q,r,lhs,rhs,relerr,equal", lines);
  } else {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(mmt::to_json(r));
    rep.json(Json{{"all_equal", all}, {"rows", std::move(arr)}});
  }
  return all ? kOk : kInvariant;
}

int cmd_identity(const Globals& g, const std::vector<std::size_t>& dims, const std::vector<std::string>& exps) {
  const mmt::Dims d{dims.at(0), dims.at(1), dims.at(2)};
  const auto e = mmt::ExponentTriple::parse(exps.at(0), exps.at(1), exps.at(2));
  const double closed = mmt::identity_quotient_closed_form(d, e);
  const double direct = mmt::identity_quotient_direct(d, e);
  const double relerr = std::abs(closed - direct) / direct;
  const bool ok = relerr <= 1e-12;
  Report rep(g, "identity", Json{{"dims", mmt::dims_to_json(d)}, {"triple", mmt::triple_to_json(e)}});
  if (rep.csv()) {
    rep.table("l,m,n,p,q,r,branch,closed_form,direct,relerr",
              {join({std::to_string(d.l), std::to_string(d.m), std::to_string(d.n), e.p.to_string(), e.q.to_string(),
                     e.r.to_string(), std::to_string(mmt::identity_branch(e)), num(closed), num(direct),
                     num(relerr)})});
  } else {
    rep.json(Json{{"branch", mmt::identity_branch(e)},
                  {"closed_form", closed},
                  {"direct", direct},
                  {"relerr", relerr},
                  {"equal", ok}});
  }
  return ok ? kOk : kInvariant;
}

int cmd_diverge(const Globals& g, const std::string& kase, const std::string& param,
                const std::vector<std::size_t>& sizes) {
  const mmt::DivergenceSpec spec{mmt::parse_divergence_case(kase), mmt::Exponent::parse(param)};
  mmt::validate(spec);
  std::vector<mmt::DivergencePoint> pts;
  std::vector<double> qs;
  bool floors = true;
  for (auto n : sizes) {
    pts.push_back(mmt::divergence_experiment(spec, n, g.norm()));
    qs.push_back(pts.back().quotient);
    floors = floors && pts.back().floor_holds;
  }
  const double growth = mmt::divergence_growth(spec).to_double();
  std::optional<double> slope;
  if (sizes.size() >= 3) slope = mmt::loglog_slope(sizes, qs);
  const bool slope_ok = !slope || *slope >= growth - mmt::kSlopeTolerance;
  Report rep(g, "diverge", Json{{"case", kase}, {"param", spec.param.to_string()}, {"sizes", sizes}});
  if (rep.csv()) {
    std::vector<std::string> lines;
    for (const auto& p : pts) lines.push_back(join({kase, std::to_string(p.n), num(p.quotient), num(p.floor)}));
    rep.table("case,n,quotient,predicted_floor", lines);
  } else {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(mmt::to_json(p));
    Json j{{"case", kase},
           {"triple", mmt::triple_to_json(mmt::divergence_exponents(spec))},
           {"growth", mmt::divergence_growth(spec).to_string()},
           {"points", std::move(arr)},
           {"floors_hold", floors}};
    if (slope) {
      j["slope"] = *slope;
      j["slope_ok"] = slope_ok;
    }
    rep.json(std::move(j));
  }
  return floors && slope_ok ? kOk : kInvariant;
}

int cmd_unique(const Globals& g, const std::vector<std::string>& exps, const std::vector<std::size_t>& sizes) {
  const auto e = mmt::ExponentTriple::parse(exps.at(0), exps.at(1), exps.at(2));
  const auto v = mmt::uniqueness_verdict(e, sizes, g.norm());
  const bool bounded = v.kind == mmt::UniquenessVerdict::Kind::bounded_candidate;
  Report rep(g, "unique", Json{{"triple", mmt::triple_to_json(e)}, {"sizes", sizes}});
  if (rep.csv()) {
    rep.table("p,q,r,verdict,construction,growth,slope",
              {join({e.p.to_string(), e.q.to_string(), e.r.to_string(), bounded ? "bounded-candidate" : "diverges",
                     v.construction, bounded ? "" : v.growth.to_string(), bounded ? "" : num(v.slope)})});
  } else {
    rep.json(mmt::to_json(v));
  }
  return bounded || (v.floors_hold && v.slope_ok) ? kOk : kInvariant;
}

int cmd_strassen_bench(const Globals& g, const std::vector<std::size_t>& sizes, std::size_t cutoff) {
  std::vector<std::string> lines;
  Json arr = Json::array();
  bool ok = true;
  for (auto n : sizes) {
    mmt::Rng rng(mmt::sub_seed(g.seed, n));
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    mmt::Matrix<double> a(n, n), b(n, n);
    for (auto& x : a.data()) x = u(rng);
    for (auto& x : b.data()) x = u(rng);
    const auto r = mmt::strassen_recursive(a, b, cutoff);
    const auto c = mmt::naive_multiply(a, b);
    double diff = 0.0, ref = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      diff += (r.c.data()[k] - c.data()[k]) * (r.c.data()[k] - c.data()[k]);
      ref += c.data()[k] * c.data()[k];
    }
    const double rel = ref == 0.0 ? std::sqrt(diff) : std::sqrt(diff / ref);
    ok = ok && rel <= 1e-8;
    const std::uint64_t naive = static_cast<std::uint64_t>(n) * n * n;
    lines.push_back(join({std::to_string(n), std::to_string(cutoff), std::to_string(r.mult_count),
                          std::to_string(naive), num(rel)}));
    arr.push_back(Json{{"n", n},
                       {"cutoff", cutoff},
                       {"mult_count_strassen", r.mult_count},
                       {"mult_count_naive", naive},
                       {"max_rel_err", rel}});
  }
  Report rep(g, "strassen bench", Json{{"sizes", sizes}, {"cutoff", cutoff}});
  if (rep.csv()) {
    rep.table("n,cutoff,mult_count_strassen,mult_count_naive,max_rel_err", lines);
  } else {
    rep.json(std::move(arr));
  }
  return ok ? kOk : kInvariant;
}

int cmd_strassen_verify(const Globals& g, const std::string& file, const std::vector<std::size_t>& dims) {
  mmt::RankDecomposition d = mmt::strassen_decomposition();
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw mmt::ParseError("cannot open '" + file + "'", 0);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw mmt::ParseError(std::string("invalid JSON: ") + e.what(), 0);
    }
    d = mmt::decomposition_from_json(j);
  }
  const auto chk = mmt::verify_rank_decomposition(d, dims.at(0), dims.at(1), dims.at(2));
  Report rep(g, "strassen verify", Json{{"file", file}, {"dims", dims}});
  if (rep.csv()) {
    rep.table("terms,valid,max_error", {join({std::to_string(d.terms.size()), chk.valid ? "1" : "0",
                                              num(chk.max_error)})});
  } else {
    rep.json(Json{{"terms", d.terms.size()}, {"valid", chk.valid}, {"max_error", chk.max_error}});
  }
  return chk.valid ? kOk : kInvariant;
}

int cmd_strassen_omega(const Globals& g, std::size_t n, std::uint64_t r) {
  const double w = mmt::omega_upper(n, r);
  Report rep(g, "strassen omega", Json{{"n", n}, {"rank", r}});
  if (rep.csv()) {
    rep.table("n,rank,omega_upper", {join({std::to_string(n), std::to_string(r), num(w)})});
  } else {
    rep.json(Json{{"n", n}, {"rank", r}, {"omega_upper", w}});
  }
  return kOk;
}

int cmd_sweep(const Globals& g, std::size_t count, std::size_t max_dim, const std::string& exps) {
  const auto ex = parse_exponents(exps);
  mmt::Rng rng(mmt::sub_seed(g.seed, 0x5eed));
  std::uniform_int_distribution<std::size_t> dim(1, max_dim), pick(0, ex.size() - 1);
  std::vector<mmt::SandwichReport> reps;
  bool ok = true;
  for (std::size_t k = 0; k < count; ++k) {
    const mmt::Dims d{dim(rng), dim(rng), dim(rng)};
    const mmt::ExponentTriple e{ex[pick(rng)], ex[pick(rng)], ex[pick(rng)]};
    reps.push_back(mmt::sandwich(d, e, g.kg(), g.ascent()));
    ok = ok && reps.back().holds;
  }
  Report rep(g, "sweep", Json{{"count", count}, {"max_dim", max_dim}, {"exponents", exps}});
  if (rep.csv()) {
    std::vector<std::string> lines;
    for (const auto& r : reps)
      lines.push_back(join({std::to_string(r.dims.l), std::to_string(r.dims.m), std::to_string(r.dims.n),
                            r.triple.p.to_string(), r.triple.q.to_string(), r.triple.r.to_string(), num(r.lower),
                            num(r.estimate.value), num(r.upper)}));
    rep.table("l,m,n,p,q,r,lower,estimate,upper", lines);
  } else {
    Json arr = Json::array();
    for (const auto& r : reps) {
      arr.push_back(Json{{"dims", mmt::dims_to_json(r.dims)},
                         {"triple", mmt::triple_to_json(r.triple)},
                         {"lower", r.lower},
                         {"estimate", r.estimate.value},
                         {"source", r.estimate.source},
                         {"upper", r.upper},
                         {"holds", r.holds}});
    }
    rep.json(std::move(arr));
  }
  return ok ? kOk : kInvariant;
}

int cmd_witness(const Globals& g, const std::string& kind, std::size_t rows, std::size_t cols) {
  const auto m = mmt::make_witness({mmt::parse_witness_tag(kind), rows, cols});
  Report rep(g, "witness", Json{{"kind", kind}, {"rows", rows}, {"cols", cols}});
  if (rep.csv()) {
    std::ostringstream os;
    mmt::write_matrix_csv(os, m);
    std::string body = os.str();
    if (!body.empty() && body.back() == '\n') body.pop_back();
    rep.table("# " + kind + " " + std::to_string(rows) + "x" + std::to_string(cols), {body});
  } else {
    rep.json(mmt::matrix_to_json(mmt::DenseMatrix::from_integers(m)));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix operator norms, tensor-norm certificates and Strassen checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "random restarts per search")->capture_default_str();
  app.add_option("--sweeps", g.sweeps, "max sweeps per ascent")->capture_default_str();
  app.add_option("--tol", g.tol, "relative ascent tolerance")->capture_default_str();
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--kg-upper", g.kg_upper, "Grothendieck constant used by upper bounds")->capture_default_str();
  app.add_option("--cap", g.cap, "largest side enumerated exactly")->capture_default_str();

  std::function<int()> run;

  auto* norm = app.add_subcommand("norm", "matrix (p,q)-norm of a CSV or JSON matrix");
  std::string norm_file, norm_p, norm_q;
  bool norm_lower = false;
  norm->add_option("file", norm_file)->required();
  norm->add_option("p", norm_p)->required();
  norm->add_option("q", norm_q)->required();
  norm->add_flag("--lower-bound", norm_lower, "fall back to a certified lower bound when no exact route exists");
  norm->callback([&] { run = [&] { return cmd_norm(g, norm_file, norm_p, norm_q, norm_lower); }; });

  auto* tnorm = app.add_subcommand("tnorm", "sandwich report for the (p,q,r)-norm of mu_{l,m,n}");
  std::vector<std::size_t> tn_dims(3);
  std::vector<std::string> tn_exps(3);
  tnorm->add_option("l", tn_dims[0])->required();
  tnorm->add_option("m", tn_dims[1])->required();
  tnorm->add_option("n", tn_dims[2])->required();
  tnorm->add_option("p", tn_exps[0])->required();
  tnorm->add_option("q", tn_exps[1])->required();
  tnorm->add_option("r", tn_exps[2])->required();
  tnorm->callback([&] { run = [&] { return cmd_tnorm(g, tn_dims, tn_exps); }; });

  auto* kg = app.add_subcommand("kg", "Grothendieck-constant lower bound from matrices");
  std::vector<std::string> kg_files;
  std::size_t kg_l = 2;
  std::string kg_cert;
  kg->add_option("files", kg_files)->required();
  kg->add_option("-l,--l", kg_l, "vector dimension")->capture_default_str();
  kg->add_option("--certificate", kg_cert, "write the best (X,M,Y) certificate here");
  kg->callback([&] { run = [&] { return cmd_kg(g, kg_files, kg_l, kg_cert); }; });

  auto* sharp = app.add_subcommand("sharpness", "equality of the comparison inequality on extremal witnesses");
  std::string sh_sizes = "1,2,3,4", sh_exps = "1,3/2,2,3,inf";
  sharp->add_option("--sizes", sh_sizes)->capture_default_str();
  sharp->add_option("--exponents", sh_exps)->capture_default_str();
  sharp->callback([&] { run = [&] { return cmd_sharpness(g, parse_sizes(sh_sizes), sh_exps); }; });

  auto* ident = app.add_subcommand("identity", "identity-triple quotient, closed form vs direct");
  std::vector<std::size_t> id_dims(3);
  std::vector<std::string> id_exps(3);
  ident->add_option("l", id_dims[0])->required();
  ident->add_option("m", id_dims[1])->required();
  ident->add_option("n", id_dims[2])->required();
  ident->add_option("p", id_exps[0])->required();
  ident->add_option("q", id_exps[1])->required();
  ident->add_option("r", id_exps[2])->required();
  ident->callback([&] { run = [&] { return cmd_identity(g, id_dims, id_exps); }; });

  auto* div = app.add_subcommand("diverge", "Hadamard divergence sequence");
  std::string dv_case = "I", dv_param = "inf", dv_sizes = "2,4,8,16,32";
  div->add_option("--case", dv_case, "I, I-conjugate, II, II-conjugate, II-r2")->capture_default_str();
  div->add_option("--param", dv_param, "q for case I, r for case II")->capture_default_str();
  div->add_option("--sizes", dv_sizes)->capture_default_str();
  div->callback([&] { run = [&] { return cmd_diverge(g, dv_case, dv_param, parse_sizes(dv_sizes)); }; });

  auto* uniq = app.add_subcommand("unique", "bounded-candidate or measured divergence for (p,q,r)");
  std::vector<std::string> un_exps(3);
  std::string un_sizes = "2,4,8,16,32";
  uniq->add_option("p", un_exps[0])->required();
  uniq->add_option("q", un_exps[1])->required();
  uniq->add_option("r", un_exps[2])->required();
  uniq->add_option("--sizes", un_sizes)->capture_default_str();
  uniq->callback([&] { run = [&] { return cmd_unique(g, un_exps, parse_sizes(un_sizes)); }; });

  auto* st = app.add_subcommand("strassen", "seven-product multiplication and rank checks");
  st->require_subcommand(1);
  auto* bench = st->add_subcommand("bench", "recursive product vs schoolbook");
  std::string sb_sizes = "1,2,4,8,16,32,64,128,256";
  std::size_t sb_cutoff = 1;
  bench->add_option("--sizes", sb_sizes)->capture_default_str();
  bench->add_option("--cutoff", sb_cutoff)->capture_default_str();
  bench->callback([&] { run = [&] { return cmd_strassen_bench(g, parse_sizes(sb_sizes), sb_cutoff); }; });
  auto* verify = st->add_subcommand("verify", "check a rank decomposition against mu_{l,m,n}");
  std::string sv_file, sv_dims = "2,2,2";
  verify->add_option("--file", sv_file, "decomposition JSON; default is the built-in seven-term one");
  verify->add_option("--dims", sv_dims)->capture_default_str();
  verify->callback([&] { run = [&] { return cmd_strassen_verify(g, sv_file, parse_sizes(sv_dims)); }; });
  auto* omega = st->add_subcommand("omega", "exponent bound log r / log n");
  std::size_t so_n = 2;
  std::uint64_t so_r = 7;
  omega->add_option("--n", so_n)->capture_default_str();
  omega->add_option("--rank", so_r)->capture_default_str();
  omega->callback([&] { run = [&] { return cmd_strassen_omega(g, so_n, so_r); }; });

  auto* sweep = app.add_subcommand("sweep", "sandwich reports over random (dims, triple) pairs");
  std::size_t sw_count = 50, sw_max = 4;
  std::string sw_exps = "1,3/2,2,3,inf";
  sweep->add_option("--count", sw_count)->capture_default_str();
  sweep->add_option("--max-dim", sw_max)->capture_default_str();
  sweep->add_option("--exponents", sw_exps)->capture_default_str();
  sweep->callback([&] { run = [&] { return cmd_sweep(g, sw_count, sw_max, sw_exps); }; });

  auto* wit = app.add_subcommand("witness", "emit E, C, R, J, IPad or Hadamard");
  std::string w_kind;
  std::size_t w_rows = 0, w_cols = 0;
  wit->add_option("kind", w_kind)->required();
  wit->add_option("rows", w_rows)->required();
  wit->add_option("cols", w_cols);
  wit->callback([&] { run = [&] { return cmd_witness(g, w_kind, w_rows, w_cols == 0 ? w_rows : w_cols); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run ? run() : kUsage;
  } catch (const mmt::UnsupportedNormError& e) {
    std::cerr << "unsupported: " << e.what() << "\n(norm: pass --lower-bound for a certified lower bound)\n";
    return kUnsupported;
  } catch (const mmt::SandwichViolation& e) {
    std::cerr << "invariant failed: " << e.what() << "\n";
    return kInvariant;
  } catch (const mmt::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n(raise --cap, or pass --lower-bound to norm)\n";
    return kUnsupported;
  } catch (const mmt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: missing argument\n";
    return kUsage;
  }
}
