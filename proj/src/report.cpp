#include "permfix/report.hpp"

#include <stdexcept>

namespace permfix {

Json to_json(const BigInt& value) { return value.get_str(); }

Json to_json(const Rational& value) {
  return Json{{"num", value.get_num().get_str()}, {"den", value.get_den().get_str()}};
}

Json to_json(const Real& value) { return value.to_string(); }

Json to_json(const MomentValue& value) {
  return std::visit([](const auto& v) { return to_json(v); }, value);
}

Json to_json(const Partition& lambda) { return Json(lambda.parts()); }

Json to_json(const ExactDistribution& dist) {
  Json probs = Json::array();
  for (const Rational& p : dist.prob) probs.push_back(to_json(p));
  return Json{{"probabilities", probs}, {"total", to_json(dist.total())}};
}

Json to_json(const MomentReport& report) {
  Json params{{"n", report.n}};
  if (report.x) params["x"] = to_json(report.x->cycles());
  if (report.model == MomentModel::kICycleWalk) {
    params["i"] = report.i;
    params["k"] = report.k;
    if (report.c) params["c"] = *report.c;
  }
  Json rows = Json::array();
  for (const MomentEntry& e : report.moments) {
    Json row{{"r", e.r}, {"value", to_json(e.value)}, {"reference", to_json(e.reference)}};
    if (std::holds_alternative<Rational>(e.value) && std::holds_alternative<Rational>(e.reference)) {
      row["difference"] = to_json(Rational(std::get<Rational>(e.value) - std::get<Rational>(e.reference)));
    } else {
      const unsigned prec = std::holds_alternative<Real>(e.reference) ? std::get<Real>(e.reference).precision()
                                                                     : std::get<Real>(e.value).precision();
      auto as_real = [prec](const MomentValue& v) {
        return std::visit([prec](const auto& x) { return Real(x, prec); }, v);
      };
      row["difference"] = to_json(as_real(e.value) - as_real(e.reference));
    }
    row["formula"] = e.formula;
    rows.push_back(std::move(row));
  }
  return Json{{"model", to_string(report.model)},
              {"params", params},
              {"poisson_mean", to_json(report.poisson_mean)},
              {"moments", rows}};
}

Json to_json(const ShapeCheckReport& report) {
  Json rows = Json::array();
  for (const ShapeCheckRow& row : report.rows) {
    rows.push_back(Json{{"shape", to_json(row.shape)},
                        {"exact", to_json(row.exact)},
                        {"count", row.count},
                        {"z", row.z}});
  }
  return Json{{"n", report.n},
              {"r", report.r},
              {"samples", report.samples},
              {"seed", report.seed},
              {"exact_total", to_json(report.exact_total)},
              {"chi_square", report.chi_square},
              {"degrees_of_freedom", report.degrees_of_freedom},
              {"max_abs_z", report.max_abs_z},
              {"shapes", rows}};
}

Rational rational_from_json(const Json& value) {
  Rational out(BigInt(value.at("num").get<std::string>()), BigInt(value.at("den").get<std::string>()));
  out.canonicalize();
  return out;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_value(const MomentValue& value) {
  if (const auto* q = std::get_if<Rational>(&value)) return to_string(*q);
  return std::get<Real>(value).to_string();
}

}  // namespace permfix
