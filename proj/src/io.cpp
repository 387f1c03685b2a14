#include "mmt/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "mmt/errors.hpp"

namespace mmt {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_cell(std::string_view cell, std::size_t line) {
  cell = trim(cell);
  if (cell.empty()) throw ParseError("empty cell", line);
  if (cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    throw ParseError("not a number: '" + std::string(cell) + "'", line);
  }
  if (!std::isfinite(v)) throw ParseError("non-finite entry", line);
  return v;
}

}  // namespace

DenseMatrix read_matrix_csv(std::istream& in) {
  std::vector<double> values;
  std::size_t cols = 0, rows = 0, lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t count = 0, start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      values.push_back(parse_cell(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start),
                                  lineno));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("expected " + std::to_string(cols) + " columns, found " + std::to_string(count), lineno);
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("no matrix rows found", lineno);
  return DenseMatrix::real(rows, cols, values);
}

void write_matrix_csv(std::ostream& out, const DenseMatrix& m) {
  if (!m.is_real()) throw UnsupportedNormError("CSV output holds real matrices only; use JSON for complex");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m.real_at(i, j));
    }
    out << '\n';
  }
}

Json matrix_to_json(const DenseMatrix& m) {
  Json j;
  j["field"] = to_string(m.field());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json re = Json::array(), im = Json::array();
  for (const auto& v : m.entries()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j["entries"] = std::move(re);
  if (!m.is_real()) j["entries_im"] = std::move(im);
  return j;
}

DenseMatrix matrix_from_json(const Json& j) {
  try {
    const std::size_t rows = j.at("rows").get<std::size_t>(), cols = j.at("cols").get<std::size_t>();
    const auto re = j.at("entries").get<std::vector<double>>();
    const std::string field = j.value("field", std::string("real"));
    if (re.size() != rows * cols) throw ParseError("entries length does not match rows*cols", 0);
    if (field == "real" && !j.contains("entries_im")) return DenseMatrix::real(rows, cols, re);
    if (field != "real" && field != "complex") throw ParseError("field must be real or complex", 0);
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("entries_im")) im = j.at("entries_im").get<std::vector<double>>();
    if (im.size() != re.size()) throw ParseError("entries_im length does not match entries", 0);
    std::vector<Scalar> z(re.size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = {re[k], im[k]};
    return DenseMatrix::complex(rows, cols, std::move(z));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad matrix JSON: ") + e.what(), 0);
  }
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  if (!json) return read_matrix_csv(in);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return matrix_from_json(j);
}

Json exponent_to_json(const Exponent& e) { return e.to_string(); }

Json triple_to_json(const ExponentTriple& e) {
  return Json::array({e.p.to_string(), e.q.to_string(), e.r.to_string()});
}

Json dims_to_json(const Dims& d) { return Json::array({d.l, d.m, d.n}); }

namespace {

Json vector_to_json(const std::vector<Scalar>& v) {
  bool real = true;
  for (const auto& x : v) real = real && x.imag() == 0.0;
  Json out = Json::array();
  for (const auto& x : v) {
    if (real) {
      out.push_back(x.real());
    } else {
      out.push_back(Json::array({x.real(), x.imag()}));
    }
  }
  return out;
}

}  // namespace

Json to_json(const NormResult& r) {
  Json j;
  j["value"] = r.value;
  j["kind"] = to_string(r.kind);
  j["path"] = to_string(r.path);
  j["p"] = exponent_to_json(r.p);
  j["q"] = exponent_to_json(r.q);
  if (r.certificate) j["certificate"] = vector_to_json(*r.certificate);
  return j;
}

Json to_json(const FeasibleTriple& t) {
  return Json{{"X", matrix_to_json(t.x())}, {"M", matrix_to_json(t.m())}, {"Y", matrix_to_json(t.y())}};
}

Json to_json(const TensorNormEstimate& e) {
  Json j;
  j["dims"] = dims_to_json(e.dims);
  j["triple"] = triple_to_json(e.triple);
  j["value"] = e.value;
  j["source"] = e.source;
  if (e.certificate) j["certificate"] = to_json(*e.certificate);
  j["seed"] = e.seed;
  j["restarts"] = e.restarts_used;
  j["iterations"] = e.iterations;
  if (e.unsound_value) j["unsound_value"] = *e.unsound_value;
  return j;
}

Json to_json(const SharpnessReport& r) {
  return Json{{"dims", dims_to_json(r.dims)}, {"triple", triple_to_json(r.triple)}, {"witnesses", r.witnesses},
              {"lhs", r.lhs},                 {"rhs", r.rhs},                       {"relerr", r.relerr},
              {"equal", r.equal}};
}

Json to_json(const SandwichReport& r) {
  return Json{{"dims", dims_to_json(r.dims)}, {"triple", triple_to_json(r.triple)}, {"lower", r.lower},
              {"estimate", to_json(r.estimate)}, {"upper", r.upper},                {"holds", r.holds}};
}

Json to_json(const DivergencePoint& p) {
  return Json{{"n", p.n}, {"quotient", p.quotient}, {"predicted_floor", p.floor}, {"exact", p.exact},
              {"floor_holds", p.floor_holds}};
}

Json to_json(const UniquenessVerdict& v) {
  Json j;
  j["input"] = triple_to_json(v.input);
  j["canonical"] = triple_to_json(v.canonical);
  const bool bounded = v.kind == UniquenessVerdict::Kind::bounded_candidate;
  j["verdict"] = bounded ? "bounded-candidate" : "diverges";
  if (!bounded) {
    j["construction"] = v.construction;
    j["evaluated_triple"] = triple_to_json(v.evaluated);
    j["growth"] = v.growth.to_string();
    j["slope"] = v.slope;
    j["slope_ok"] = v.slope_ok;
    j["floors_hold"] = v.floors_hold;
    Json pts = Json::array();
    for (const auto& p : v.points) pts.push_back(to_json(p));
    j["points"] = std::move(pts);
  }
  return j;
}

Json to_json(const RankDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back(Json{{"weight", t.weight}, {"u", t.u}, {"v", t.v}, {"w", t.w}});
  return Json{{"terms", std::move(terms)}};
}

RankDecomposition decomposition_from_json(const Json& j) {
  try {
    RankDecomposition d;
    for (const auto& t : j.at("terms")) {
      d.terms.push_back({t.value("weight", 1.0), t.at("u").get<std::vector<double>>(),
                         t.at("v").get<std::vector<double>>(), t.at("w").get<std::vector<double>>()});
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad decomposition JSON: ") + e.what(), 0);
  }
}

}  // namespace mmt
