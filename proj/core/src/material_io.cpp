#include "micromorph/material_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "micromorph/tensor.hpp"

namespace micromorph {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    out.push_back({number, raw.substr(first, last - first + 1)});
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what);
}

double parse_double(const Line& line, const std::string& token) {
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size() || token.empty())
    fail(line, "expected a number, got '" + token + "'");
  return v;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// One [section] worth of key/value pairs plus an optional raw matrix.
struct Section {
  std::string name;
  Line header;
  std::map<std::string, std::pair<double, Line>> values;
  std::vector<std::vector<double>> matrix_rows;
  bool has_matrix = false;

  bool has(const std::string& k) const { return values.count(k) > 0; }
  double get(const std::string& k) const { return values.at(k).first; }
  double get_or(const std::string& k, double fallback) const {
    return has(k) ? get(k) : fallback;
  }
};

std::vector<Section> read_sections(const std::vector<Line>& lines,
                                   std::map<std::string, int> matrix_dims) {
  std::vector<Section> sections;
  sections.push_back({"", Line{0, ""}, {}, {}, false});
  int rows_pending = 0;
  for (const Line& line : lines) {
    Section& cur = sections.back();
    if (rows_pending > 0) {
      const auto toks = split_ws(line.text);
      const int dim = matrix_dims.at(cur.name);
      if (static_cast<int>(toks.size()) != dim)
        fail(line, "matrix row needs " + std::to_string(dim) + " numbers, got " +
                       std::to_string(toks.size()));
      std::vector<double> row;
      for (const auto& t : toks) row.push_back(parse_double(line, t));
      cur.matrix_rows.push_back(row);
      --rows_pending;
      continue;
    }
    if (line.text.front() == '[') {
      if (line.text.back() != ']') fail(line, "unterminated section header");
      const std::string name = line.text.substr(1, line.text.size() - 2);
      if (matrix_dims.count(name) == 0 && name != "scalars")
        fail(line, "unknown section [" + name + "]");
      for (const auto& s : sections)
        if (s.name == name) fail(line, "duplicate section [" + name + "]");
      sections.push_back({name, line, {}, {}, false});
      continue;
    }
    if (line.text == "matrix") {
      if (cur.name.empty() || matrix_dims.count(cur.name) == 0)
        fail(line, "matrix block outside a matrix-valued section");
      if (cur.has_matrix) fail(line, "second matrix block in one section");
      cur.has_matrix = true;
      rows_pending = matrix_dims.at(cur.name);
      continue;
    }
    const auto eq = line.text.find('=');
    if (eq == std::string::npos)
      fail(line, "expected 'key = value', a [section] or a matrix block");
    std::string key = line.text.substr(0, eq);
    std::string value = line.text.substr(eq + 1);
    const auto trim = [](std::string& s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
    };
    trim(key);
    trim(value);
    if (key.empty() || value.empty()) fail(line, "empty key or value");
    if (cur.name.empty() && key == "convention") {
      // handled by the caller through the synthetic "convention" entry
      if (value != "voigt" && value != "mandel")
        fail(line, "convention must be voigt or mandel");
      cur.values.emplace(key, std::make_pair(value == "mandel" ? 1.0 : 0.0, line));
      continue;
    }
    if (key == "class") {
      for (const auto& [k, v] : cur.values)
        if (k.rfind("class:", 0) == 0) fail(line, "duplicate class line");
      cur.values.emplace("class:" + value, std::make_pair(0.0, line));
      continue;
    }
    if (cur.values.count(key)) fail(line, "duplicate key '" + key + "'");
    cur.values.emplace(key, std::make_pair(parse_double(line, value), line));
  }
  if (rows_pending > 0)
    throw ParseError("unexpected end of input inside a matrix block");
  return sections;
}

std::optional<std::string> class_of(const Section& s) {
  for (const auto& [k, v] : s.values)
    if (k.rfind("class:", 0) == 0) return k.substr(6);
  return std::nullopt;
}

void require_known_keys(const Section& s, std::vector<std::string> known) {
  for (const auto& [k, v] : s.values) {
    if (k.rfind("class:", 0) == 0) continue;
    bool ok = false;
    for (const auto& a : known)
      if (k == a) ok = true;
    if (!ok) fail(v.second, "unknown key '" + k + "' in section [" + s.name + "]");
  }
}

Mat6 as_mat6(const Section& s) {
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m(i, j) = s.matrix_rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

Mat3 as_mat3(const Section& s) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m(i, j) = s.matrix_rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

StiffnessVoigt stiffness_from_section(const Section& s, Notation conv,
                                      double tol,
                                      std::vector<std::string>& warnings) {
  const auto cls = class_of(s);
  StiffnessVoigt from_class;
  bool have_class = false;
  if (cls) {
    have_class = true;
    if (*cls == "isotropic") {
      require_known_keys(s, {"lambda", "mu", "kappa"});
      if (!s.has("mu")) fail(s.header, "isotropic stiffness needs mu");
      if (s.has("lambda") == s.has("kappa"))
        fail(s.header, "isotropic stiffness needs exactly one of lambda, kappa");
      const double mu = s.get("mu");
      const double lambda =
          s.has("lambda") ? s.get("lambda") : s.get("kappa") - 2.0 * mu / 3.0;
      from_class = build_isotropic(lambda, mu, conv);
    } else if (*cls == "cubic") {
      require_known_keys(s, {"kappa", "mu", "mu_star"});
      if (!s.has("kappa") || !s.has("mu") || !s.has("mu_star"))
        fail(s.header, "cubic stiffness needs kappa, mu, mu_star");
      from_class = build_cubic(s.get("kappa"), s.get("mu"), s.get("mu_star"), conv);
    } else if (*cls == "orthotropic") {
      const std::vector<std::string> keys = {"c11", "c22", "c33", "c12", "c13",
                                             "c23", "c44", "c55", "c66"};
      require_known_keys(s, keys);
      OrthotropicParams p;
      for (size_t i = 0; i < keys.size(); ++i) {
        if (!s.has(keys[i]))
          fail(s.header, "orthotropic stiffness needs " + keys[i]);
        p.c[i] = s.get(keys[i]);
      }
      from_class = build_orthotropic(p, conv);
    } else {
      fail(s.header, "unknown stiffness class '" + *cls + "'");
    }
  }
  if (s.has_matrix) {
    if (have_class)
      warnings.push_back("section [" + s.name +
                         "]: raw matrix overrides the class parameters");
    return StiffnessVoigt::checked(as_mat6(s), conv, tol);
  }
  if (!have_class)
    fail(s.header, "section [" + s.name + "] needs a class or a matrix block");
  return from_class;
}

Coupling3 coupling_from_section(const Section& s, double tol,
                                std::vector<std::string>& warnings) {
  const auto cls = class_of(s);
  Coupling3 from_class;
  bool have_class = false;
  if (cls) {
    have_class = true;
    if (*cls == "isotropic" || *cls == "cubic") {
      require_known_keys(s, {"mu_c"});
      if (!s.has("mu_c")) fail(s.header, "isotropic coupling needs mu_c");
      from_class = build_coupling(SymmetryClass::Isotropic, {s.get("mu_c")});
    } else if (*cls == "tetragonal") {
      require_known_keys(s, {"a11", "a33"});
      if (!s.has("a11") || !s.has("a33"))
        fail(s.header, "tetragonal coupling needs a11, a33");
      from_class =
          build_coupling(SymmetryClass::Tetragonal, {s.get("a11"), s.get("a33")});
    } else if (*cls == "orthotropic" || *cls == "orthorhombic") {
      require_known_keys(s, {"a11", "a22", "a33"});
      if (!s.has("a11") || !s.has("a22") || !s.has("a33"))
        fail(s.header, "orthorhombic coupling needs a11, a22, a33");
      from_class = build_coupling(SymmetryClass::Orthotropic,
                                  {s.get("a11"), s.get("a22"), s.get("a33")});
    } else if (*cls == "monoclinic") {
      require_known_keys(s, {"a11", "a22", "a33", "a13"});
      if (!s.has("a11") || !s.has("a22") || !s.has("a33") || !s.has("a13"))
        fail(s.header, "monoclinic coupling needs a11, a22, a33, a13");
      from_class = build_coupling(
          SymmetryClass::Monoclinic,
          {s.get("a11"), s.get("a22"), s.get("a33"), s.get("a13")});
    } else if (*cls == "triclinic") {
      require_known_keys(s, {"a11", "a22", "a33", "a23", "a13", "a12"});
      for (const char* k : {"a11", "a22", "a33", "a23", "a13", "a12"})
        if (!s.has(k)) fail(s.header, std::string("triclinic coupling needs ") + k);
      from_class = build_coupling(
          SymmetryClass::Triclinic,
          {s.get("a11"), s.get("a22"), s.get("a33"), s.get("a23"), s.get("a13"),
           s.get("a12")});
    } else {
      fail(s.header, "unknown coupling class '" + *cls + "'");
    }
  }
  if (s.has_matrix) {
    if (have_class)
      warnings.push_back("section [" + s.name +
                         "]: raw matrix overrides the class parameters");
    return Coupling3::checked(as_mat3(s), tol);
  }
  if (!have_class)
    fail(s.header, "section [" + s.name + "] needs a class or a matrix block");
  return from_class;
}

}  // namespace

MaterialFile parse_material_text(const std::string& text, double tol) {
  const std::map<std::string, int> dims = {
      {"micro", 6}, {"e", 6}, {"macro", 6}, {"coupling", 3},
      {"curvature_sym", 6}, {"curvature_skew", 3}};
  const auto sections = read_sections(significant_lines(text), dims);

  MaterialFile mf;
  for (const auto& s : sections) {
    if (s.name.empty()) {
      for (const auto& [k, v] : s.values) {
        if (k == "convention")
          mf.convention = v.first > 0.5 ? Notation::Mandel : Notation::Voigt;
        else
          fail(v.second, "key '" + k + "' outside any section");
      }
    } else if (s.name == "micro") {
      mf.micro = stiffness_from_section(s, mf.convention, tol, mf.warnings);
    } else if (s.name == "e") {
      mf.e = stiffness_from_section(s, mf.convention, tol, mf.warnings);
    } else if (s.name == "macro") {
      mf.macro = stiffness_from_section(s, mf.convention, tol, mf.warnings);
    } else if (s.name == "coupling") {
      mf.coupling = coupling_from_section(s, tol, mf.warnings);
    } else if (s.name == "curvature_sym") {
      mf.curvature_sym = stiffness_from_section(s, mf.convention, tol, mf.warnings);
    } else if (s.name == "curvature_skew") {
      mf.curvature_skew = coupling_from_section(s, tol, mf.warnings);
    } else if (s.name == "scalars") {
      require_known_keys(
          s, {"mu", "Lc", "rho", "Lc_hat", "eta1", "eta2", "eta3"});
      mf.mu = s.get_or("mu", mf.mu);
      mf.lc = s.get_or("Lc", mf.lc);
      mf.rho = s.get_or("rho", mf.rho);
      mf.lc_hat = s.get_or("Lc_hat", mf.lc_hat);
      mf.eta1 = s.get_or("eta1", mf.eta1);
      mf.eta2 = s.get_or("eta2", mf.eta2);
      mf.eta3 = s.get_or("eta3", mf.eta3);
    }
  }
  return mf;
}

MaterialFile parse_material_file(const std::string& path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_material_text(buf.str(), tol);
}

KinematicState parse_state_text(const std::string& text) {
  const std::map<std::string, int> dims = {
      {"grad_u", 3}, {"p", 3}, {"curl_p", 3}, {"p_dot", 3}};
  const auto sections = read_sections(significant_lines(text), dims);
  KinematicState st;
  for (const auto& s : sections) {
    if (s.name.empty()) {
      if (!s.values.empty())
        throw ParseError("state files have no top-level keys");
      continue;
    }
    if (!s.has_matrix)
      throw ParseError("section [" + s.name + "] needs a matrix block");
    const Mat3 m = as_mat3(s);
    if (s.name == "grad_u") st.grad_u = m;
    if (s.name == "p") st.p = m;
    if (s.name == "curl_p") st.curl_p = m;
    if (s.name == "p_dot") st.p_dot = m;
  }
  return st;
}

KinematicState parse_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

RelaxedMaterial make_relaxed_material(const MaterialFile& mf) {
  if (!mf.micro || !mf.e)
    throw InvalidParameterError(
        "material needs both [micro] and [e] for a constitutive bundle");
  RelaxedMaterial mat;
  mat.c_micro = *mf.micro;
  mat.c_e = *mf.e;
  if (mf.coupling) mat.c_c = *mf.coupling;
  if (mf.curvature_sym) {
    mat.l_e = *mf.curvature_sym;
  } else {
    mat.l_e = StiffnessVoigt::from_upper(vec_norm_weight(mf.convention),
                                         mf.convention);
  }
  if (mf.curvature_skew) {
    mat.l_c = *mf.curvature_skew;
  } else {
    mat.l_c = Coupling3::from_upper(2.0 * Mat3::Identity());
  }
  mat.mu = mf.mu;
  mat.lc = mf.lc;
  mat.inertia.rho = mf.rho;
  mat.inertia.lc_hat = mf.lc_hat;
  mat.inertia.eta1 = mf.eta1;
  mat.inertia.eta2 = mf.eta2;
  mat.inertia.eta3 = mf.eta3;
  return mat;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace micromorph
