#include "leolab/serialize.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace leolab {

using nlohmann::json;

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

json operator_to_json(const Operator& op) {
  const int n = op.dim();
  json re = json::array(), im = json::array();
  for (int i = 0; i < n; ++i) {
    json rrow = json::array(), irow = json::array();
    for (int j = 0; j < n; ++j) {
      rrow.push_back(op(i, j).real());
      irow.push_back(op(i, j).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  json j = {{"dim", n}, {"re", std::move(re)}, {"im", std::move(im)}};
  if (!op.label().empty()) j["label"] = op.label();
  return j;
}

Operator operator_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("operator_from_json: need {dim, re, im}");
  const int n = j.at("dim").get<int>();
  if (n <= 0) throw std::invalid_argument("operator_from_json: dim must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n)
    throw std::invalid_argument("operator_from_json: row count does not match dim");
  Operator op(n, j.value("label", std::string{}));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(re[i].size()) != n || static_cast<int>(im[i].size()) != n)
      throw std::invalid_argument("operator_from_json: column count does not match dim");
    for (int k = 0; k < n; ++k)
      op(i, k) = cplx(re[i][k].get<double>(), im[i][k].get<double>());
  }
  if (!op.all_finite())
    throw std::invalid_argument("operator_from_json: non-finite entry");
  return op;
}

void operator_to_csv(const Operator& op, std::ostream& out) {
  const int n = op.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ',';
      out << format_float(op(i, j).real()) << ',' << format_float(op(i, j).imag());
    }
    out << '\n';
  }
}

}  // namespace leolab
