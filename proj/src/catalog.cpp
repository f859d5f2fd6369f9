#include "eqknot/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "eqknot/polytools.hpp"

namespace eqknot {

namespace {

const std::vector<std::string> kConstructors{"identity_conj", "negate_conj", "swap_halves"};

Rational param(const ParamMap& p, const std::string& key, const Rational& fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

long integer_param(const ParamMap& p, const std::string& key, long fallback) {
  const Rational v = param(p, key, fallback);
  if (!is_integer(v)) throw DomainError("parameter " + key + " must be an integer");
  if (!v.get_num().fits_slong_p()) throw DomainError("parameter " + key + " is too large");
  return v.get_num().get_si();
}

void reject_unknown(const ParamMap& p, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : p) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw DomainError("unknown parameter " + k);
  }
}

LaurentPoly lin(long a, long b) { return LaurentPoly::t(1) * LaurentPoly(a) + LaurentPoly(b); }

// tau(b1) = (alpha c (mt - (m+1)) + (beta / c)((m+1)t - m)) b1, which sends
// y1 -> c y2 and y2 -> y1 / c for y1 = ((m+1)t - m) b1, y2 = (mt - (m+1)) b1.
KnotSpec genus_one(std::string name, long m, long l, const Rational& c, std::vector<std::pair<std::string, Rational>> params,
                   std::string notes) {
  if (m == 0 || m == -1) throw DomainError("genus-one family needs m not in {0, -1}");
  if (l == 0) throw DomainError("genus-one family needs l != 0");
  if (c == 0) throw DomainError("genus-one family needs c != 0");
  KnotSpec s;
  s.name = std::move(name);
  s.params = std::move(params);
  s.seifert = {{0, m + 1}, {m, l}};
  const PresentedModule mod = PresentedModule::from_seifert(s.seifert);
  Rational alpha(m, 2 * m + 1), beta(-(m + 1), 2 * m + 1);
  alpha.canonicalize();
  beta.canonicalize();
  const LaurentPoly pc = lin(m, -(m + 1)).scaled(alpha * c) + lin(m + 1, -m).scaled(beta / c);
  const ModuleElement b1 = mod.generator(0);
  s.involution = cyclic_involution_matrix(mod, b1, scale(pc, b1));
  s.notes = std::move(notes);
  return s;
}

KnotSpec twist(long a, std::string name) {
  if (a < 1) throw DomainError("twist knot needs a >= 1");
  KnotSpec s;
  s.name = std::move(name);
  if (s.name == "twist_Ka") s.params = {{"a", Rational(a)}};
  s.seifert = {{a, 0}, {1, -a}};
  const PresentedModule mod = PresentedModule::from_seifert(s.seifert);
  const ModuleElement b2 = mod.generator(1);
  s.involution = cyclic_involution_matrix(mod, b2, b2);
  s.notes = "cyclic generator b2 fixed, tau(q) = q(t^-1)";
  return s;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size();
  IntMatrix out(n + k, std::vector<long long>(n + k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[n + i][n + j] = b[i][j];
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !std::isdigit(static_cast<unsigned char>(s.front()));
}

// Splits `s` on `sep`, reporting each piece with its offset.
std::vector<std::pair<std::size_t, std::string_view>> split(std::string_view s, char sep) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(start, s.substr(start, i - start));
      start = i + 1;
    }
  return out;
}

std::size_t first_non_space(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

ParamMap parse_params(std::string_view text, std::size_t line, std::size_t col0) {
  ParamMap out;
  if (trim(text).empty()) return out;
  for (const auto& [off, piece] : split(text, ',')) {
    const std::size_t col = col0 + off + first_non_space(piece);
    const auto eq = piece.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value parameter", line, col);
    const std::string key = trim(piece.substr(0, eq));
    if (!is_identifier(key)) throw ParseError("bad parameter name", line, col);
    const std::string_view val = piece.substr(eq + 1);
    Rational q;
    try {
      q = parse_rational(trim(val));
    } catch (const ParseError&) {
      throw ParseError("bad rational for parameter " + key, line, col0 + off + eq + 1 + first_non_space(val));
    }
    if (!out.emplace(key, q).second) throw ParseError("duplicate parameter " + key, line, col);
  }
  return out;
}

IntMatrix parse_seifert(std::string_view text, std::size_t line, std::size_t col0) {
  IntMatrix m;
  if (trim(text).empty()) return m;
  for (const auto& [roff, row] : split(text, ';')) {
    std::vector<long long> r;
    for (const auto& [eoff, entry] : split(row, ',')) {
      const std::string e = trim(entry);
      const std::size_t col = col0 + roff + eoff + first_non_space(entry);
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(e, &used);
      } catch (const std::exception&) {
        throw ParseError("expected an integer", line, col);
      }
      if (used != e.size()) throw ParseError("expected an integer", line, col + used);
      r.push_back(v);
    }
    m.push_back(std::move(r));
  }
  for (const auto& r : m)
    if (r.size() != m.size()) throw ParseError("seifert matrix must be square", line, col0);
  return m;
}

LambdaMatrix parse_poly_matrix(std::string_view text, std::size_t line, std::size_t col0) {
  std::vector<std::vector<LaurentPoly>> rows;
  for (const auto& [roff, row] : split(text, ';')) {
    std::vector<LaurentPoly> r;
    for (const auto& [eoff, entry] : split(row, ',')) {
      try {
        r.push_back(LaurentPoly::parse(entry));
      } catch (const ParseError& e) {
        throw ParseError("bad polynomial entry", line, col0 + roff + eoff + e.column() - 1);
      }
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw ParseError("involution rows differ in length", line, col0);
  return LambdaMatrix::from_rows(rows);
}

std::string format_params(const std::vector<std::pair<std::string, Rational>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ',';
    out += k + "=" + to_string(v);
  }
  return out;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"unknot", "trefoil", "nine46", "figure_eight", "stevedore", "genus_one_slice",
          "double_twist", "pretzel", "twist_Ka", "swap_double"};
}

KnotSpec builtin(std::string_view name, const ParamMap& p) {
  if (name == "unknot") {
    reject_unknown(p, {});
    return {"unknot", {}, {}, std::string("identity_conj"), "trivial module"};
  }
  if (name == "trefoil") {
    reject_unknown(p, {});
    KnotSpec s{"trefoil", {}, {{-1, 1}, {0, -1}}, std::string(), "cyclic generator b1 fixed, tau(q) = q(t^-1)"};
    const PresentedModule mod = PresentedModule::from_seifert(s.seifert);
    s.involution = cyclic_involution_matrix(mod, mod.generator(0), mod.generator(0));
    return s;
  }
  if (name == "nine46") {
    reject_unknown(p, {});
    return {"nine46", {}, {{0, 2}, {1, 0}}, std::string("swap_halves"), "tau swaps b1 and b2"};
  }
  if (name == "figure_eight") {
    reject_unknown(p, {});
    return twist(1, "figure_eight");
  }
  if (name == "twist_Ka") {
    reject_unknown(p, {"a"});
    if (!p.count("a")) throw DomainError("twist_Ka needs parameter a");
    return twist(integer_param(p, "a", 1), "twist_Ka");
  }
  if (name == "stevedore") {
    reject_unknown(p, {});
    return genus_one("stevedore", 1, 1, 2, {}, "[2,4]+ in the genus-one shape (m,l) = (1,1); c = 2 is tau(b1) = -b1");
  }
  if (name == "genus_one_slice") {
    reject_unknown(p, {"m", "l", "c"});
    const long m = integer_param(p, "m", 1), l = integer_param(p, "l", 1);
    const Rational c = param(p, "c", 1);
    return genus_one("genus_one_slice", m, l, c, {{"m", Rational(m)}, {"l", Rational(l)}, {"c", c}},
                     "tau(y1) = c y2, tau(y2) = y1 / c");
  }
  if (name == "double_twist") {
    reject_unknown(p, {"b", "c"});
    const long b = integer_param(p, "b", 2);
    if (b < 2 || b % 2 != 0) throw DomainError("double_twist needs an even b >= 2");
    const Rational c = param(p, "c", 1);
    return genus_one("double_twist", b / 2, b / 2, c, {{"b", Rational(b)}, {"c", c}},
                     "[b,b+2]+ in the genus-one shape (m,l) = (b/2, b/2)");
  }
  if (name == "pretzel") {
    reject_unknown(p, {"a", "c"});
    const long a = integer_param(p, "a", 3);
    if (a < 3 || a % 2 == 0) throw DomainError("pretzel needs an odd a >= 3");
    const Rational c = param(p, "c", 1);
    return genus_one("pretzel", -(a + 1) / 2, -a, c, {{"a", Rational(a)}, {"c", c}},
                     "P(a,-a,a) in the genus-one shape (m,l) = (-(a+1)/2, -a)");
  }
  if (name == "swap_double") throw DomainError("swap_double takes a knot: use swap_double:<ref>");
  throw DomainError("unknown builtin " + std::string(name));
}

KnotSpec builtin_ref(std::string_view ref) {
  const auto colon = ref.find(':');
  const std::string name = trim(ref.substr(0, colon));
  if (colon == std::string_view::npos) return builtin(name);
  if (name == "swap_double") return swap_double(builtin_ref(ref.substr(colon + 1)));
  return builtin(name, parse_params(ref.substr(colon + 1), 0, colon + 2));
}

KnotSpec swap_double(const KnotSpec& j) {
  IntMatrix at(j.seifert.size(), std::vector<long long>(j.seifert.size()));
  for (std::size_t r = 0; r < at.size(); ++r)
    for (std::size_t c = 0; c < at.size(); ++c) at[r][c] = j.seifert[c][r];
  return {"swap_double", j.params, block_sum(j.seifert, at), std::string("swap_halves"),
          "J = " + j.name + " plus its reverse, halves swapped"};
}

LambdaMatrix involution_matrix(const KnotSpec& spec) {
  const std::size_t n = spec.seifert.size();
  if (const auto* m = std::get_if<LambdaMatrix>(&spec.involution)) return *m;
  const std::string& name = std::get<std::string>(spec.involution);
  if (name == "identity_conj") return LambdaMatrix::identity(n);
  if (name == "negate_conj") return LambdaMatrix::identity(n).map([](const LaurentPoly& p) { return -p; });
  if (name == "swap_halves") {
    if (n % 2 != 0) throw DomainError("swap_halves needs an even number of generators");
    LambdaMatrix m(n, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
      m(i, n / 2 + i) = 1;
      m(n / 2 + i, i) = 1;
    }
    return m;
  }
  throw DomainError("unknown involution constructor " + name);
}

EquivariantTriple assemble_unchecked(const KnotSpec& spec) {
  ModulePtr module;
  try {
    module = make_module(PresentedModule::from_seifert(spec.seifert));
  } catch (const DomainError& e) {
    throw ValidationError("seifert", e.what());
  }
  LambdaMatrix tau;
  try {
    tau = involution_matrix(spec);
  } catch (const DomainError& e) {
    throw ValidationError("involution_shape", e.what());
  }
  if (tau.rows() != module->generators() || tau.cols() != module->generators())
    throw ValidationError("involution_shape", "involution matrix is " + std::to_string(tau.rows()) + "x" +
                                                  std::to_string(tau.cols()) + ", module has " +
                                                  std::to_string(module->generators()) + " generators");
  GramPairing b = gram_from_seifert(spec.seifert, module);
  return make_triple(module, b.gram(), std::move(tau));
}

EquivariantTriple assemble(const KnotSpec& spec) {
  EquivariantTriple t = assemble_unchecked(spec);
  require_valid(t);
  return t;
}

KnotSpec sum_specs(std::span<const KnotSpec> specs) {
  KnotSpec s{"sum", {}, {}, LambdaMatrix(0, 0), "sum of"};
  LambdaMatrix tau(0, 0);
  for (const auto& k : specs) {
    s.seifert = block_sum(s.seifert, k.seifert);
    tau = block_diagonal(tau, involution_matrix(k));
    s.notes += " " + k.name;
    if (!k.params.empty()) s.notes += "(" + format_params(k.params) + ")";
  }
  if (specs.empty()) s.notes = "empty sum";
  s.involution = std::move(tau);
  return s;
}

std::string format_spec(const KnotSpec& spec) {
  if (spec.notes.find('\n') != std::string::npos) throw DomainError("notes must be a single line");
  std::ostringstream out;
  out << "schema=1\n";
  out << "name=" << spec.name << "\n";
  out << "params=" << format_params(spec.params) << "\n";
  out << "seifert=";
  for (std::size_t i = 0; i < spec.seifert.size(); ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < spec.seifert[i].size(); ++j) out << (j ? "," : "") << spec.seifert[i][j];
  }
  out << "\n";
  out << "involution=";
  if (const auto* name = std::get_if<std::string>(&spec.involution))
    out << *name;
  else
    out << to_string(std::get<LambdaMatrix>(spec.involution));
  out << "\n";
  out << "notes=" << spec.notes << "\n";
  return out.str();
}

KnotSpec parse_spec(std::string_view text) {
  KnotSpec s;
  std::map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = end + 1;
    const std::size_t indent = first_non_space(line);
    if (indent == line.size() || line[indent] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value", line_no, indent + 1);
    const std::string key = trim(line.substr(0, eq));
    const std::string_view value = line.substr(eq + 1);
    const std::size_t col0 = eq + 2;  // 1-based column of the first value character
    if (!seen.emplace(key, line_no).second) throw ParseError("duplicate key " + key, line_no, indent + 1);

    if (key == "schema") {
      if (trim(value) != "1") throw ParseError("unsupported schema version", line_no, col0);
    } else if (key == "name") {
      s.name = trim(value);
      if (!is_identifier(s.name)) throw ParseError("name must be an identifier", line_no, col0);
    } else if (key == "params") {
      const ParamMap p = parse_params(value, line_no, col0);
      s.params.clear();
      // keep file order
      for (const auto& [off, piece] : split(value, ','))
        if (!trim(piece).empty()) {
          const std::string k = trim(piece.substr(0, piece.find('=')));
          s.params.emplace_back(k, p.at(k));
        }
    } else if (key == "seifert") {
      s.seifert = parse_seifert(value, line_no, col0);
    } else if (key == "involution") {
      const std::string v = trim(value);
      bool named = false;
      for (const auto& c : kConstructors) named = named || v == c;
      if (named)
        s.involution = v;
      else
        s.involution = parse_poly_matrix(value, line_no, col0);
    } else if (key == "notes") {
      s.notes = trim(value);
    } else {
      throw ParseError("unknown key " + key, line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  for (const char* required : {"schema", "name", "seifert", "involution"})
    if (!seen.count(required)) throw ParseError(std::string("missing key ") + required, line_no + 1, 1);
  return s;
}

KnotSpec load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

void save(const KnotSpec& spec, const std::filesystem::path& path) {
  const std::string text = format_spec(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
  if (!out) throw DomainError("write failed for " + path.string());
}

LaurentPoly twist_ka_polynomial(long a) {
  if (a < 1) throw DomainError("twist knot needs a >= 1");
  const IntMatrix s{{a, 0}, {1, -a}};
  const LambdaMatrix m = to_lambda(s);
  return normalize_alexander(det(m.map([](const LaurentPoly& p) { return LaurentPoly::t(1) * p; }) - m.transpose()));
}

EquivariantTriple twist_ka_cyclic(long a) {
  const LaurentPoly p = twist_ka_polynomial(a);
  LambdaMatrix rel(1, 1);
  rel(0, 0) = p;
  ModulePtr m = make_module(PresentedModule(rel));
  const GramPairing seifert_form = gram_from_seifert({{a, 0}, {1, -a}});
  TorsionMatrix g(1, 1);
  g(0, 0) = seifert_form.gram()(1, 1);
  return make_triple(m, std::move(g), LambdaMatrix::identity(1));
}

}  // namespace eqknot
