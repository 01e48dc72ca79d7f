#include "gkm/io.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace gkm::io {

using nlohmann::ordered_json;

namespace {

ordered_json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open file: " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

// Collect sqrt-kernels and zeta orders appearing in a literal.
void scan_literal(const std::string& text, long long default_zeta_order,
                  std::set<long long>& rads, long long& zeta_lcm) {
  size_t pos = 0;
  while ((pos = text.find("sqrt(", pos)) != std::string::npos) {
    size_t end = text.find(')', pos);
    if (end == std::string::npos) throw ConfigError("bad sqrt literal: " + text);
    long long m = std::stoll(text.substr(pos + 5, end - pos - 5));
    auto [root, sf] = squarefree_decompose(Int(m));
    long long kernel = sf.convert_to<long long>();
    if (kernel != 1) rads.insert(kernel);
    pos = end;
  }
  pos = 0;
  while ((pos = text.find("zeta", pos)) != std::string::npos) {
    size_t p = pos + 4;
    std::string digits;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) digits += text[p++];
    long long order = digits.empty() ? default_zeta_order : std::stoll(digits);
    zeta_lcm = std::lcm(zeta_lcm, order);
    pos = p;
  }
}

Rational parse_weight(const ordered_json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ConfigError("weights must be strings \"a/b\" or integers");
}

}  // namespace

RawTable load_table_raw(const std::string& path) {
  ordered_json j = read_json(path);
  RawTable t;
  t.order = j.at("order").get<int>();
  t.exponent = j.value("exponent", t.order);
  for (const auto& c : j.at("classes")) {
    t.labels.push_back(c.at("label").get<std::string>());
    t.sizes.push_back(c.at("size").get<int>());
    t.centralizers.push_back(c.at("centralizer").get<int>());
    t.inverse.push_back(c.at("inverse").get<int>());
  }
  long long zl = 1;
  for (const auto& row : j.at("characters")) {
    std::vector<std::string> r;
    for (const auto& v : row) {
      r.push_back(v.get<std::string>());
      scan_literal(r.back(), t.exponent, t.radicands, zl);
    }
    t.chars.push_back(std::move(r));
  }
  t.exponent = std::lcm(t.exponent, zl);
  return t;
}

GroupData instantiate_table(const RawTable& raw, const ContextPtr& ctx) {
  GroupData g;
  g.ctx = ctx;
  g.abelian = false;
  g.order = raw.order;
  g.exponent = raw.exponent;
  g.labels = raw.labels;
  g.sizes = raw.sizes;
  g.centralizers = raw.centralizers;
  g.inverse = raw.inverse;
  g.identity = 0;
  for (const auto& row : raw.chars) {
    std::vector<Scalar> r;
    for (const auto& lit : row) {
      // Bare "zeta" in table literals means the primitive root of order
      // `exponent`; rewrite to the explicit form for the context parser.
      std::string s;
      size_t i = 0;
      while (i < lit.size()) {
        if (lit.compare(i, 4, "zeta") == 0) {
          s += "zeta";
          i += 4;
          if (i >= lit.size() || !std::isdigit(static_cast<unsigned char>(lit[i])))
            s += std::to_string(raw.exponent);
        } else {
          s += lit[i++];
        }
      }
      r.push_back(parse_scalar(ctx, s));
    }
    g.chars.push_back(std::move(r));
  }
  g.dims.clear();
  for (const auto& row : g.chars) {
    Rational d = row[g.identity].rational_value();
    Int num = boost::multiprecision::numerator(d);
    if (boost::multiprecision::denominator(d) != 1 || num <= 0)
      throw MathError("inconsistent character table: chi(e) not a positive integer");
    g.dims.push_back(num.convert_to<int>());
  }
  g.validate();
  return g;
}

GKMTarget load_target(const std::string& path, const std::vector<long long>& extra_radicands) {
  ordered_json j = read_json(path);
  std::filesystem::path base = std::filesystem::path(path).parent_path();

  struct PointSpec {
    bool abelian = true;
    std::vector<int> cyclic;
    RawTable raw;
    std::vector<SectorAction::Axis> axes;
    std::vector<Rational> weights;
  };
  std::vector<PointSpec> specs;

  int r = j.at("dimension").get<int>();
  long long n = 1;
  std::set<long long> rads(extra_radicands.begin(), extra_radicands.end());
  rads.erase(1);

  for (const auto& fp : j.at("fixed_points")) {
    PointSpec ps;
    const auto& grp = fp.at("group");
    if (grp.contains("cyclic")) {
      ps.abelian = true;
      for (const auto& f : grp.at("cyclic")) ps.cyclic.push_back(f.get<int>());
      long long e = 1;
      for (int f : ps.cyclic) e = std::lcm<long long>(e, f);
      n = std::lcm(n, e);
    } else if (grp.contains("table")) {
      ps.abelian = false;
      ps.raw = load_table_raw((base / grp.at("table").get<std::string>()).string());
      n = std::lcm(n, ps.raw.exponent);
      rads.insert(ps.raw.radicands.begin(), ps.raw.radicands.end());
    } else {
      throw ConfigError("fixed point group must be {\"cyclic\": [...]} or {\"table\": path}");
    }
    for (const auto& ax : fp.at("action_chars")) {
      SectorAction::Axis axis;
      if (ax.is_array()) {
        axis.from_table = false;
        for (const auto& e : ax) axis.exps.push_back(e.get<int>());
      } else {
        axis.from_table = true;
        axis.char_index = ax.get<int>();
      }
      ps.axes.push_back(axis);
    }
    for (const auto& w : fp.at("weights")) ps.weights.push_back(parse_weight(w));
    if (static_cast<int>(ps.weights.size()) != r)
      throw ConfigError("each fixed point needs one weight per dimension");
    Rational pw = 1;
    for (const auto& w : ps.weights) {
      if (w == 0) throw ConfigError("zero equivariant weight rejected");
      pw *= w;
    }
    Int num = boost::multiprecision::numerator(pw);
    Int den = boost::multiprecision::denominator(pw);
    auto [root, sf] = squarefree_decompose(num * den);
    long long kernel = sf.convert_to<long long>();
    if (kernel != 1) rads.insert(kernel);
    specs.push_back(std::move(ps));
  }

  GKMTarget t;
  t.dim = r;
  t.ctx = scalar_context(static_cast<int>(n), {rads.begin(), rads.end()});
  for (auto& ps : specs) {
    FixedPoint fp;
    fp.group = ps.abelian ? abelian_group(t.ctx, ps.cyclic) : instantiate_table(ps.raw, t.ctx);
    fp.action.axes = ps.axes;
    fp.action.weights = ps.weights;
    fp.action.validate(fp.group);
    t.points.push_back(std::move(fp));
  }
  return t;
}

GenusZeroFile load_genus_zero_file(const std::string& path) {
  ordered_json j = read_json(path);
  GenusZeroFile f;
  for (const auto& v : j.at("variables")) f.variables.push_back(v.get<std::string>());
  f.n_t = j.at("flat_count").get<int>();
  f.max_degree = j.at("max_degree").get<int>();
  if (j.contains("degree_two"))
    for (const auto& d : j.at("degree_two")) f.degree_two.push_back(d.get<int>());
  if (j.contains("divisor")) {
    f.divisor_direction = j.at("divisor").at("direction").get<int>();
    for (const auto& c : j.at("divisor").at("pairings"))
      f.divisor_pairings.push_back(c.get<std::string>());
  }
  for (const auto& e : j.at("structure_constants")) {
    GenusZeroFile::Entry entry;
    entry.mu = e.at("mu").get<int>();
    entry.nu = e.at("nu").get<int>();
    entry.rho = e.at("rho").get<int>();
    for (const auto& term : e.at("series")) {
      std::vector<int> expv;
      for (const auto& x : term.at("exponents")) expv.push_back(x.get<int>());
      entry.series.push_back({expv, term.at("value").get<std::string>()});
    }
    f.structure_constants.push_back(std::move(entry));
  }
  if (j.contains("s_operator")) {
    for (const auto& mat : j.at("s_operator")) {
      std::vector<GenusZeroFile::SEntry> entries;
      for (const auto& e : mat) {
        GenusZeroFile::SEntry se;
        se.row = e.at("row").get<int>();
        se.col = e.at("col").get<int>();
        for (const auto& term : e.at("series")) {
          std::vector<int> expv;
          for (const auto& x : term.at("exponents")) expv.push_back(x.get<int>());
          se.series.push_back({expv, term.at("value").get<std::string>()});
        }
        entries.push_back(std::move(se));
      }
      f.s_operator.push_back(std::move(entries));
    }
  }
  return f;
}

std::vector<long long> scan_radicands(const GenusZeroFile& file) {
  std::set<long long> rads;
  long long zl = 1;
  for (const auto& e : file.structure_constants)
    for (const auto& [expv, lit] : e.series) scan_literal(lit, 1, rads, zl);
  for (const auto& mat : file.s_operator)
    for (const auto& e : mat)
      for (const auto& [expv, lit] : e.series) scan_literal(lit, 1, rads, zl);
  return {rads.begin(), rads.end()};
}

std::string potential_to_json(const PotentialTable& t) {
  ordered_json j;
  j["g"] = t.g;
  j["k"] = t.k;
  ordered_json entries = ordered_json::array();
  for (const auto& [e, v] : t.value.terms()) {
    ordered_json item;
    item["monomial"] = monomial_str(*t.vt, e);
    item["value"] = v.str();
    entries.push_back(item);
  }
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

std::string potential_to_csv(const PotentialTable& t) {
  std::ostringstream os;
  os << "monomial,value\n";
  for (const auto& [e, v] : t.value.terms())
    os << monomial_str(*t.vt, e) << ",\"" << v.str() << "\"\n";
  return os.str();
}

std::string potential_to_pretty(const PotentialTable& t) {
  std::ostringstream os;
  os << "(1/" << t.k << "!) F_[g=" << t.g << ",k=" << t.k << "]:\n";
  if (t.value.is_zero()) os << "  0\n";
  for (const auto& [e, v] : t.value.terms())
    os << "  " << monomial_str(*t.vt, e) << "  ->  " << v.str() << "\n";
  return os.str();
}

Expo parse_monomial(const VarTablePtr& vt, const std::string& s) {
  Expo e(vt->names.size(), 0);
  if (s == "1") return e;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    if (star == std::string::npos) star = s.size();
    std::string factor = s.substr(pos, star - pos);
    pos = star + 1;
    size_t caret = factor.find('^');
    std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
    int p = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
    auto it = std::find(vt->names.begin(), vt->names.end(), name);
    if (it == vt->names.end()) throw ConfigError("unknown variable in monomial: " + name);
    e[it - vt->names.begin()] += p;
  }
  return e;
}

}  // namespace gkm::io
