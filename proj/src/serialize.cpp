#include "oraclegram/serialize.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "oraclegram/errors.hpp"

namespace oraclegram {

namespace {

std::string to_decimal(const mpz_class& z) { return z.get_str(); }

mpz_class parse_decimal(const json& j) {
  try {
    return mpz_class(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw json::type_error::create(302, "expected a decimal integer string", &j);
  }
}

json gamma_to_json(const MatrixXz& gamma) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < gamma.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < gamma.cols(); ++j)
      row.push_back(static_cast<long>(gamma(i, j).get_si()));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixXz gamma_from_json(const json& j) {
  const auto rows = j.get<std::vector<std::vector<long>>>();
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.front().size());
  MatrixXz out(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c)
      throw json::type_error::create(302, "ragged matrix rows", &j);
    for (Eigen::Index k = 0; k < c; ++k) out(i, k) = rows[i][k];
  }
  return out;
}

FunctionSet function_set_from_json(const json& j) {
  const int m = j.at("m").get<int>();
  const int n = j.at("n").get<int>();
  std::vector<FunctionTable> members;
  for (const json& row : j.at("functions"))
    members.push_back(make_function(m, n, row.get<std::vector<int>>()));
  return FunctionSet(std::move(members));
}

}  // namespace

void to_json(json& j, const AnalysisRecord& r) {
  j = json{{"k", r.k},
           {"m", r.m},
           {"n", r.n},
           {"gamma", gamma_to_json(r.gamma)},
           {"det", to_decimal(r.determinant)},
           {"distinguishable", r.distinguishable},
           {"classical_witness",
            r.classical_witness ? json(*r.classical_witness) : json(nullptr)},
           {"totally_indistinguishable", r.totally_indistinguishable}};
}

void from_json(const json& j, AnalysisRecord& r) {
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<int>();
  r.n = j.at("n").get<int>();
  r.gamma = gamma_from_json(j.at("gamma"));
  r.determinant = parse_decimal(j.at("det"));
  r.distinguishable = j.at("distinguishable").get<bool>();
  const json& witness = j.at("classical_witness");
  r.classical_witness =
      witness.is_null() ? std::nullopt : std::optional<int>(witness.get<int>());
  r.totally_indistinguishable = j.at("totally_indistinguishable").get<bool>();
}

void to_json(json& j, const MultiCallReport& r) {
  j = json{{"c", r.c},
           {"det", to_decimal(r.determinant)},
           {"distinguishable", r.distinguishable},
           {"dominant", r.strictly_dominant},
           {"delta_min", r.delta_min},
           {"sufficient_bound", r.sufficient_bound}};
}

void from_json(const json& j, MultiCallReport& r) {
  r.c = j.at("c").get<int>();
  r.determinant = parse_decimal(j.at("det"));
  r.distinguishable = j.at("distinguishable").get<bool>();
  r.strictly_dominant = j.at("dominant").get<bool>();
  r.delta_min = j.at("delta_min").get<int>();
  r.sufficient_bound = j.at("sufficient_bound").get<int>();
}

void to_json(json& j, const SpectrumReport& r) {
  json lines = json::array();
  for (const SpectrumReport::Line& line : r.eigenvalues) {
    json value;
    if (const mpq_class* exact = std::get_if<mpq_class>(&line.value))
      value = exact->get_str();
    else
      value = std::get<double>(line.value);
    lines.push_back(json{{"value", std::move(value)}, {"multiplicity", line.multiplicity}});
  }
  j = json{{"eigenvalues", std::move(lines)}, {"det", to_decimal(r.determinant)}};
}

void from_json(const json& j, SpectrumReport& r) {
  r.eigenvalues.clear();
  for (const json& line : j.at("eigenvalues")) {
    SpectrumReport::Line out;
    const json& value = line.at("value");
    if (value.is_string()) {
      mpq_class q(value.get<std::string>());
      q.canonicalize();
      out.value = q;
    } else {
      out.value = value.get<double>();
    }
    out.multiplicity = line.at("multiplicity").get<int>();
    r.eigenvalues.push_back(std::move(out));
  }
  r.determinant = parse_decimal(j.at("det"));
}

void to_json(json& j, const ColumnProfile& p) {
  j = json{{"n1", p.n1}, {"n2", p.n2}, {"n3", p.n3}, {"n4", p.n4}};
}

void from_json(const json& j, ColumnProfile& p) {
  p.n1 = j.at("n1").get<int>();
  p.n2 = j.at("n2").get<int>();
  p.n3 = j.at("n3").get<int>();
  p.n4 = j.at("n4").get<int>();
}

void to_json(json& j, const Characterize4Record& r) {
  j = json{{"profile", r.profile},
           {"formula_det", to_decimal(r.formula_det)},
           {"direct_det", to_decimal(r.direct_det)},
           {"distinguishable", r.distinguishable}};
}

void from_json(const json& j, Characterize4Record& r) {
  r.profile = j.at("profile").get<ColumnProfile>();
  r.formula_det = parse_decimal(j.at("formula_det"));
  r.direct_det = parse_decimal(j.at("direct_det"));
  r.distinguishable = j.at("distinguishable").get<bool>();
}

void to_json(json& j, const TifGraph& g) {
  json coords = json::array();
  for (const auto& [x, y] : g.coords) coords.push_back(json::array({x, y}));
  json edges = json::array();
  for (const TifEdge& e : g.edges)
    edges.push_back(json{{"j", e.j},
                         {"jp", e.jp},
                         {"axis", std::string(1, axis_letter(e.axis))}});
  j = json{{"k", g.k}, {"coords", std::move(coords)}, {"edges", std::move(edges)}};
}

void to_json(json& j, const CycleResult& c) {
  json axes = json::array();
  for (Axis a : c.axes) axes.push_back(std::string(1, axis_letter(a)));
  j = json{{"vertices", c.vertices}, {"axes", std::move(axes)}};
}

void to_json(json& j, const M2TifVerdict& v) {
  j = json{{"distinguishable", v.distinguishable},
           {"witness", v.witness},
           {"witness_det", to_decimal(v.witness_det)},
           {"full_det", to_decimal(v.full_det)}};
}

void to_json(json& j, const TifEnumeration& e) {
  json sets = json::array();
  for (const FunctionSet& s : e.sets) sets.push_back(s);
  j = json{{"count", e.sets.size()},
           {"complete", e.complete},
           {"examined", e.examined},
           {"sets", std::move(sets)}};
}

FunctionSet load_function_set(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    return function_set_from_json(parsed);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FunctionSet load_function_set(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_function_set(buffer.str());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace oraclegram

namespace nlohmann {

void adl_serializer<oraclegram::FunctionSet>::to_json(
    json& j, const oraclegram::FunctionSet& s) {
  json rows = json::array();
  for (const oraclegram::FunctionTable& f : s) rows.push_back(f.values());
  j = json{{"m", s.domain_size()},
           {"n", s.range_size()},
           {"functions", std::move(rows)}};
}

oraclegram::FunctionSet adl_serializer<oraclegram::FunctionSet>::from_json(
    const json& j) {
  return oraclegram::function_set_from_json(j);
}

}  // namespace nlohmann
