#include "tautilt/objects.hpp"

#include <cctype>

#include "json.hpp"

namespace tautilt {

Rep module_from_arrows(const AlgebraPtr& a, std::vector<int> dims, const std::map<std::string, Mat>& arrows) {
  if (static_cast<int>(dims.size()) != a->rank()) throw InputError("dimension vector has wrong length");
  for (int d : dims)
    if (d < 0) throw InputError("negative dimension");
  std::vector<Mat> acts;
  std::size_t used = 0;
  for (int g : a->generators()) {
    const auto& e = a->basis(g);
    auto it = arrows.find(e.label);
    if (it == arrows.end()) {
      acts.emplace_back(dims[e.target], dims[e.source]);
      continue;
    }
    ++used;
    if (it->second.rows() != static_cast<std::size_t>(dims[e.target]) ||
        it->second.cols() != static_cast<std::size_t>(dims[e.source]))
      throw InputError("arrow " + e.label + " needs a " + std::to_string(dims[e.target]) + "x" +
                       std::to_string(dims[e.source]) + " matrix");
    acts.push_back(it->second);
  }
  if (used != arrows.size()) throw InputError("unknown arrow name in module input");
  try {
    return from_generators(a, std::move(dims), acts);
  } catch (const std::invalid_argument& ex) {
    throw InputError(std::string("not a module: ") + ex.what());
  }
}

namespace {

Scalar scalar_of(const nlohmann::json& v) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) return Scalar::parse(v.get<std::string>());
  throw InputError("matrix entries must be integers or rational strings");
}

Rep module_of(const AlgebraPtr& a, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims")) throw InputError("module needs \"dims\"");
  const auto dims = j.at("dims").get<std::vector<int>>();
  std::map<std::string, Mat> arrows;
  if (j.contains("arrows"))
    for (const auto& [name, rows] : j.at("arrows").items()) {
      const std::size_t r = rows.size();
      const std::size_t cols = r ? rows[0].size() : 0;
      Mat m(r, cols);
      for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != cols) throw InputError("ragged matrix for arrow " + name);
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_of(rows[i][k]);
      }
      // a 0 x n or n x 0 block is written []
      if (r == 0) continue;
      arrows.emplace(name, std::move(m));
    }
  return module_from_arrows(a, dims, arrows);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Shifted named(ModuleCategory& c, const std::string& term) {
  std::string t = term;
  int shift = 0;
  if (t.size() > 3 && t.back() == ']') {
    const auto open = t.rfind('[');
    if (open == std::string::npos) throw InputError("bad shift in " + term);
    try {
      shift = std::stoi(t.substr(open + 1, t.size() - open - 2));
    } catch (const std::exception&) {
      throw InputError("bad shift in " + term);
    }
    t = trim(t.substr(0, open));
  }
  if (t.size() < 4 || t[1] != '(' || t.back() != ')') throw InputError("expected P(i), I(i) or S(i), got " + term);
  int v = 0;
  try {
    v = std::stoi(t.substr(2, t.size() - 3)) - 1;
  } catch (const std::exception&) {
    throw InputError("bad vertex in " + term);
  }
  if (v < 0 || v >= c.rank()) throw InputError("vertex out of range in " + term);
  switch (t[0]) {
    case 'P': return {c.projective(v), shift};
    case 'I': return {c.injective(v), shift};
    case 'S': return {c.simple(v), shift};
    default: throw InputError("expected P(i), I(i) or S(i), got " + term);
  }
}

}  // namespace

Rep parse_module_json(const AlgebraPtr& a, std::string_view text) {
  try {
    return module_of(a, nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("module JSON: ") + ex.what());
  }
}

std::string module_to_json(const Rep& x) {
  nlohmann::json arrows = nlohmann::json::object();
  for (int g : x.algebra->generators()) {
    const Mat& m = x.action[g];
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const mpq_class& q = m(i, k).value();
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) row.push_back(q.get_num().get_si());
        else row.push_back(m(i, k).str());
      }
      rows.push_back(std::move(row));
    }
    arrows[x.algebra->basis(g).label] = std::move(rows);
  }
  return nlohmann::json{{"dims", x.dims}, {"arrows", arrows}}.dump();
}

ShiftedObject parse_object(ModuleCategory& c, std::string_view text) {
  const std::string s = trim(text);
  ShiftedObject out;
  if (s.empty() || s == "0") return out;
  if (s[0] == '{' || s[0] == '[') {
    try {
      const auto j = nlohmann::json::parse(s);
      const auto add = [&](const nlohmann::json& m, int shift) {
        for (auto id : c.decompose(module_of(c.algebra_ptr(), m))) out.items.push_back({id, shift});
      };
      if (j.is_array()) {
        for (const auto& e : j) add(e.contains("module") ? e.at("module") : e, e.value("shift", 0));
      } else {
        add(j, 0);
      }
    } catch (const nlohmann::json::exception& ex) {
      throw InputError(std::string("object JSON: ") + ex.what());
    }
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto plus = s.find('+', start);
      const std::string term = trim(std::string_view(s).substr(start, plus == std::string::npos ? std::string::npos : plus - start));
      if (term.empty()) throw InputError("empty summand in " + s);
      out.items.push_back(named(c, term));
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
  }
  out.normalize();
  return out;
}

}  // namespace tautilt
