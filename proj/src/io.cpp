#include "gnl/io.hpp"

#include <fstream>
#include <set>

#include "gnl/errors.hpp"

namespace gnl::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InputError(std::string(what) + " must be a decimal string");
}

ExpVec exp_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("exponent vector must be an array");
  ExpVec e;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("exponents must be non-negative integers");
    e.push_back(v.get<std::uint64_t>());
  }
  return e;
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InputError("not a rational number: '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

BigInt parse_bigint(const std::string& s) {
  BigInt z;
  if (s.empty() || z.set_str(s, 10) != 0) throw InputError("not an integer: '" + s + "'");
  return z;
}

Json to_json(const StructureConstants& L) {
  Json brackets = Json::array();
  for (const auto& [ij, val] : L.table()) {
    Json terms = Json::array();
    for (const auto& [k, q] : val) terms.push_back({{"k", L.label(k)}, {"c", q.get_str()}});
    brackets.push_back({{"i", L.label(ij.first)}, {"j", L.label(ij.second)}, {"terms", terms}});
  }
  return {{"dim", L.dim()}, {"basis", L.labels()}, {"brackets", brackets}};
}

StructureConstants algebra_from_json(const Json& j) {
  return guarded("algebra", [&]() -> StructureConstants {
    const auto& basis = field(j, "basis");
    if (!basis.is_array()) throw InputError("'basis' must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& b : basis) {
      if (!b.is_string()) throw InputError("basis labels must be strings");
      labels.push_back(b.get<std::string>());
    }
    if (j.contains("dim") && j.at("dim") != labels.size()) throw InputError("'dim' does not match the basis length");
    StructureConstants L(labels);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (!j.contains("brackets")) return L;
    for (const auto& br : field(j, "brackets")) {
      const std::size_t i = L.require_index(as_string(field(br, "i"), "label"));
      const std::size_t k = L.require_index(as_string(field(br, "j"), "label"));
      SparseVec val;
      for (const auto& t : field(br, "terms")) {
        const std::size_t target = L.require_index(as_string(field(t, "k"), "label"));
        const Rational q = parse_rational(as_string(field(t, "c"), "coefficient"));
        val[target] += q;
      }
      if (i == k) {
        L.set_bracket(i, k, val);  // rejects nonzero [b, b]
        continue;
      }
      const auto key = std::minmax(i, k);
      if (!seen.insert(key).second) {
        // A second entry for the same pair must agree with the first.
        SparseVec expect = L.bracket_basis(i, k);
        std::erase_if(val, [](const auto& kv) { return kv.second == 0; });
        if (expect != val) {
          throw InputError("inconsistent duplicate bracket for (" + L.label(i) + ", " + L.label(k) + ")");
        }
        continue;
      }
      L.set_bracket(i, k, val);
    }
    return L;
  });
}

Json to_json(const StructureConstants& L, const Grading& G) {
  Json degrees = Json::object();
  for (std::size_t i = 0; i < L.dim(); ++i) degrees[L.label(i)] = G.degree(i);
  return {{"d", G.vars()}, {"degrees", degrees}};
}

Grading grading_from_json(const Json& j, const StructureConstants& L) {
  return guarded("grading", [&]() -> Grading {
    const std::size_t d = field(j, "d").get<std::size_t>();
    const auto& degs = field(j, "degrees");
    if (!degs.is_object()) throw InputError("'degrees' must map labels to degree vectors");
    std::vector<std::optional<ExpVec>> slots(L.dim());
    for (const auto& [label, vec] : degs.items()) {
      const std::size_t i = L.require_index(label);
      if (slots[i]) throw InputError("label '" + label + "' graded twice");
      slots[i] = exp_from_json(vec);
    }
    std::vector<ExpVec> degrees;
    for (std::size_t i = 0; i < L.dim(); ++i) {
      if (!slots[i]) throw InputError("label '" + L.label(i) + "' has no degree");
      degrees.push_back(*slots[i]);
    }
    return Grading(d, std::move(degrees));
  });
}

Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"c", c.get_str()}});
  return {{"d", p.vars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
  return guarded("polynomial", [&]() -> MultiPoly {
    MultiPoly p(field(j, "d").get<std::size_t>());
    for (const auto& t : field(j, "terms")) {
      p.add_term(exp_from_json(field(t, "e")), parse_bigint(as_string(field(t, "c"), "coefficient")));
    }
    return p;
  });
}

Json factors_to_json(const FactorList& f) {
  Json arr = Json::array();
  for (const auto& fac : f) arr.push_back({{"e", fac.exponent}, {"m", fac.multiplicity}});
  return {{"factors", arr}};
}

std::pair<FactorList, std::size_t> factors_from_json(const Json& j) {
  return guarded("factors", [&]() -> std::pair<FactorList, std::size_t> {
    FactorList out;
    std::size_t d = 0;
    for (const auto& f : field(j, "factors")) {
      Factor fac{exp_from_json(field(f, "e")), 1};
      const auto& m = field(f, "m");
      if (!m.is_number_integer() || m.get<long long>() < 1) throw InputError("factor multiplicity must be >= 1");
      fac.multiplicity = m.get<std::uint64_t>();
      if (d == 0) d = fac.exponent.size();
      out.push_back(std::move(fac));
    }
    if (d == 0) d = j.value("d", std::size_t{1});
    check_factors(out, d);
    return {out, d};
  });
}

Json to_json(const family::Dims& d) {
  return {{"d1", d.d1}, {"d2", d.d2}, {"d3", d.d3}, {"z", d.z}, {"z2", d.z2}, {"d2_0", d.d2_0}, {"d2_1", d.d2_1}};
}

Json to_json(const BettiVector& b) { return {{"betti", b.b}, {"total", b.total}}; }

Json to_json(const verify::Verdict& v, bool with_timing) {
  Json j = {{"n", v.n}, {"holds", v.holds}, {"length", v.length.get_str()}, {"bound", v.bound.get_str()}};
  if (with_timing) j["elapsed_ms"] = v.elapsed.count();
  return j;
}

Json to_json(const verify::Report& r, bool with_timing) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v, with_timing));
  return {{"tool_version", r.tool_version},
          {"claim", r.claim},
          {"range", {r.from, r.to}},
          {"verdicts", verdicts},
          {"pass", r.pass}};
}

verify::Report report_from_json(const Json& j) {
  return guarded("report", [&]() -> verify::Report {
    verify::Report r;
    r.tool_version = field(j, "tool_version").get<std::string>();
    r.claim = field(j, "claim").get<std::string>();
    const auto& range = field(j, "range");
    r.from = range.at(0).get<std::uint64_t>();
    r.to = range.at(1).get<std::uint64_t>();
    for (const auto& v : field(j, "verdicts")) {
      verify::Verdict out;
      out.n = field(v, "n").get<std::uint64_t>();
      out.holds = field(v, "holds").get<bool>();
      out.length = parse_bigint(field(v, "length").get<std::string>());
      out.bound = parse_bigint(field(v, "bound").get<std::string>());
      out.elapsed = std::chrono::milliseconds(v.value("elapsed_ms", 0));
      r.verdicts.push_back(std::move(out));
    }
    r.pass = field(j, "pass").get<bool>();
    return r;
  });
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace gnl::io
