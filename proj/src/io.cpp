#include "semihilb/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace semihilb {

namespace {

double finite_number(const Json& v, const char* what) {
  if (!v.is_number()) throw Error(ErrorCode::ParseError, std::string(what) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw Error(ErrorCode::ParseError, std::string(what) + ": non-finite value");
  return d;
}

/// Non-finite doubles are written as strings so the JSON stays valid.
Json number_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double number_from_json(const Json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
  }
  if (!v.is_number()) throw Error(ErrorCode::ParseError, "expected a number");
  return v.get<double>();
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

Json matrix_to_json(const CMatrix& m, const std::string& name) {
  Json j;
  j["name"] = name;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

CMatrix matrix_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "matrix: expected an object");
    const auto rows = j.at("rows").get<long long>();
    const auto cols = j.at("cols").get<long long>();
    const Json& data = j.at("data");
    if (rows < 0 || cols < 0 || !data.is_array() || static_cast<long long>(data.size()) != rows) {
      throw Error(ErrorCode::ParseError, "matrix: data shape does not match rows");
    }
    CMatrix m(rows, cols);
    for (long long i = 0; i < rows; ++i) {
      const Json& row = data[i];
      if (!row.is_array() || static_cast<long long>(row.size()) != cols) {
        throw Error(ErrorCode::ParseError, "matrix: data shape does not match cols");
      }
      for (long long k = 0; k < cols; ++k) {
        const Json& e = row[k];
        if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "matrix: entries must be [re, im] pairs");
        m(i, k) = cplx(finite_number(e[0], "matrix entry"), finite_number(e[1], "matrix entry"));
      }
    }
    return m;
  });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  return guarded([&] { return Json::parse(text); });
}

CMatrix read_matrix_file(const std::string& path) { return matrix_from_json(read_json_file(path)); }

void write_matrix_file(const std::string& path, const CMatrix& m, const std::string& name) {
  write_text_file(path, matrix_to_json(m, name).dump(2) + "\n");
}

Json params_to_json(const BoundParams& p) {
  return Json{{"alpha_re", p.alpha.real()}, {"alpha_im", p.alpha.imag()}, {"beta", p.beta}, {"r", p.r},
              {"mu", p.mu}, {"lam", p.lam}, {"p", p.p}, {"q", p.q}};
}

BoundParams params_from_json(const Json& j) {
  return guarded([&] {
    BoundParams p;
    p.alpha = cplx(j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>());
    p.beta = j.at("beta").get<double>();
    p.r = j.at("r").get<double>();
    p.mu = j.at("mu").get<double>();
    p.lam = j.at("lam").get<double>();
    p.p = j.at("p").get<double>();
    p.q = j.at("q").get<double>();
    return p;
  });
}

Json report_to_json(const BoundReport& r) {
  Json im = Json::object();
  for (const auto& [k, v] : r.intermediates) im[k] = number_to_json(v);
  return Json{{"inequality_id", r.inequality_id},
              {"lhs", number_to_json(r.lhs)},
              {"rhs", number_to_json(r.rhs)},
              {"slack", number_to_json(r.slack)},
              {"rel_slack", number_to_json(r.rel_slack)},
              {"intermediates", std::move(im)},
              {"hypotheses_ok", r.hypotheses_ok},
              {"advisory", !r.hypotheses_ok},
              {"params", params_to_json(r.params)}};
}

Json case_to_json(const CaseRecord& c) {
  Json ops = Json::object();
  for (const auto& [name, m] : c.instance.operands) ops[name] = matrix_to_json(m, name);
  Json im = Json::object();
  for (const auto& [k, v] : c.intermediates) im[k] = number_to_json(v);
  return Json{{"inequality_id", c.inequality_id},
              {"trial", c.trial},
              {"A", matrix_to_json(c.weight, "A")},
              {"operands", std::move(ops)},
              {"scalars", c.instance.scalars},
              {"params", params_to_json(c.instance.params)},
              {"lhs", number_to_json(c.lhs)},
              {"rhs", number_to_json(c.rhs)},
              {"rel_slack", number_to_json(c.rel_slack)},
              {"hypotheses_ok", c.hypotheses_ok},
              {"intermediates", std::move(im)}};
}

CaseRecord case_from_json(const Json& j) {
  return guarded([&] {
    CaseRecord c;
    c.inequality_id = j.at("inequality_id").get<std::string>();
    c.trial = j.at("trial").get<std::uint64_t>();
    c.weight = matrix_from_json(j.at("A"));
    for (const auto& [name, m] : j.at("operands").items()) c.instance.operands[name] = matrix_from_json(m);
    c.instance.scalars = j.at("scalars").get<std::vector<double>>();
    c.instance.params = params_from_json(j.at("params"));
    c.lhs = number_from_json(j.at("lhs"));
    c.rhs = number_from_json(j.at("rhs"));
    c.rel_slack = number_from_json(j.at("rel_slack"));
    c.hypotheses_ok = j.at("hypotheses_ok").get<bool>();
    if (j.contains("intermediates")) {
      for (const auto& [k, v] : j.at("intermediates").items()) c.intermediates[k] = number_from_json(v);
    }
    return c;
  });
}

Json campaign_to_json(const CampaignReport& c) {
  Json cases = Json::array();
  for (const auto& v : c.violation_cases) cases.push_back(case_to_json(v));
  Json audits = Json::object();
  for (const auto& [k, v] : c.audit_violations) audits[k] = v;
  return Json{{"inequality_id", c.inequality_id},
              {"trials", c.trials},
              {"violations", c.violations},
              {"advisory", c.advisory},
              {"min_rel_slack", number_to_json(c.min_rel_slack)},
              {"mean_rel_slack", number_to_json(c.mean_rel_slack)},
              {"sharpest_case", case_to_json(c.sharpest_case)},
              {"seed", c.seed},
              {"audit_violations", std::move(audits)},
              {"violation_cases", std::move(cases)}};
}

CampaignReport campaign_from_json(const Json& j) {
  return guarded([&] {
    CampaignReport c;
    c.inequality_id = j.at("inequality_id").get<std::string>();
    c.trials = j.at("trials").get<std::uint64_t>();
    c.violations = j.at("violations").get<std::uint64_t>();
    c.advisory = j.at("advisory").get<std::uint64_t>();
    c.min_rel_slack = number_from_json(j.at("min_rel_slack"));
    c.mean_rel_slack = number_from_json(j.at("mean_rel_slack"));
    c.sharpest_case = case_from_json(j.at("sharpest_case"));
    c.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("audit_violations").items()) c.audit_violations[k] = v.get<std::uint64_t>();
    for (const auto& v : j.at("violation_cases")) c.violation_cases.push_back(case_from_json(v));
    return c;
  });
}

Json campaigns_to_json(const std::vector<CampaignReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(campaign_to_json(r));
  return arr;
}

}  // namespace semihilb
