// Command line front end: material files in, reports and CSV tables out.
// Exit codes: 0 success, 1 domain validation failure, 2 parse or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "micromorph/dynamics.hpp"
#include "micromorph/homogenize.hpp"
#include "micromorph/material_io.hpp"
#include "micromorph/oned.hpp"

namespace mm = micromorph;

namespace {

enum class OutputMode { Text, Csv };

struct GlobalOptions {
  std::optional<mm::Notation> convention;
  double tol = 1e-9;
  OutputMode output = OutputMode::Text;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mm::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Accumulates either commented text plus material-file payload, or flat
// key,value CSV, depending on the output mode.
class Report {
 public:
  explicit Report(OutputMode mode) : mode_(mode) {
    if (mode_ == OutputMode::Csv) out_ << "key,value\n";
  }

  void comment(const std::string& key, const std::string& value) {
    if (mode_ == OutputMode::Text)
      out_ << "# " << key << ": " << value << "\n";
    else
      out_ << key << "," << value << "\n";
  }
  void comment(const std::string& key, double value) {
    comment(key, mm::format_number(value));
  }

  // A line that is meaningful payload in text mode (parseable where the
  // material format applies) and a key,value row in CSV mode.
  void field(const std::string& key, const std::string& value) {
    if (mode_ == OutputMode::Text)
      out_ << key << ": " << value << "\n";
    else
      out_ << key << "," << value << "\n";
  }
  void field(const std::string& key, double value) {
    field(key, mm::format_number(value));
  }

  template <typename Mat>
  void matrix_section(const std::string& name, const Mat& m) {
    if (mode_ == OutputMode::Text) {
      out_ << "[" << name << "]\nmatrix\n";
      for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
          out_ << (j ? " " : "") << mm::format_number(m(i, j));
        out_ << "\n";
      }
    } else {
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
          out_ << name << "[" << i << "][" << j << "],"
               << mm::format_number(m(i, j)) << "\n";
    }
  }

  void convention_line(mm::Notation n) {
    if (mode_ == OutputMode::Text)
      out_ << "convention = " << mm::to_string(n) << "\n";
    else
      out_ << "convention," << mm::to_string(n) << "\n";
  }

  void raw(const std::string& text) { out_ << text; }

  void emit() const { std::cout << out_.str() << std::flush; }

 private:
  OutputMode mode_;
  std::ostringstream out_;
};

mm::Notation parse_convention_flag(const std::string& s) {
  if (s == "voigt") return mm::Notation::Voigt;
  if (s == "mandel") return mm::Notation::Mandel;
  throw mm::ParseError("convention must be voigt or mandel, got '" + s + "'");
}

std::vector<double> parse_number_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size())
      throw mm::ParseError(std::string(what) + ": expected a number, got '" +
                           item + "'");
    out.push_back(v);
  }
  if (out.empty())
    throw mm::ParseError(std::string(what) + ": empty list");
  return out;
}

mm::Vec3 parse_direction(const std::string& s) {
  const auto v = parse_number_list(s, "direction");
  if (v.size() != 3)
    throw mm::ParseError("direction needs three comma separated numbers");
  return mm::Vec3(v[0], v[1], v[2]);
}

struct LoadedMaterial {
  std::string digest;
  mm::MaterialFile file;
};

LoadedMaterial load_material(const std::string& path, double tol) {
  const std::string bytes = slurp(path);
  return {mm::content_digest(bytes), mm::parse_material_text(bytes, tol)};
}

void echo_warnings(const mm::MaterialFile& mf) {
  for (const auto& w : mf.warnings) std::cerr << "warning: " << w << "\n";
}

void class_parameters(Report& rep, const std::string& prefix,
                      const mm::StiffnessVoigt& cv, mm::SymmetryClass cls) {
  if (cls == mm::SymmetryClass::Isotropic) {
    const mm::IsotropicParams p = mm::isotropic_parameters(cv);
    rep.comment(prefix + "kappa", p.kappa());
    rep.comment(prefix + "mu", p.mu);
  } else if (cls == mm::SymmetryClass::Cubic) {
    const mm::CubicParams p = mm::cubic_parameters(cv);
    rep.comment(prefix + "kappa", p.kappa);
    rep.comment(prefix + "mu", p.mu);
    rep.comment(prefix + "mu_star", p.mu_star);
  }
}

int cmd_validate(const GlobalOptions& opt, const std::string& path) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  Report rep(opt.output);
  rep.comment("command", "validate " + path);
  rep.comment("digest", in.digest);
  rep.comment("convention", mm::to_string(in.file.convention));

  bool valid = true;
  const auto stiffness_role = [&](const char* name,
                                  const std::optional<mm::StiffnessVoigt>& cv,
                                  mm::Definiteness mode) {
    if (!cv) return;
    const std::string tag = std::string(name) + " ";
    const mm::SpdReport spd = mm::check_positive_definite(*cv, mode);
    rep.field(tag + "symmetry", "ok");
    rep.field(tag + "definiteness",
              std::string(mode == mm::Definiteness::Strict ? "strict " : "semi ") +
                  (spd.ok ? "ok" : "FAILED"));
    rep.field(tag + "min eig", spd.min_eig);
    const mm::SymmetryClass cls = mm::classify_stiffness(*cv, opt.tol);
    rep.field(tag + "class", mm::to_string(cls));
    valid = valid && spd.ok;
  };
  stiffness_role("micro", in.file.micro, mm::Definiteness::Strict);
  stiffness_role("e", in.file.e, mm::Definiteness::Strict);
  stiffness_role("macro", in.file.macro, mm::Definiteness::Strict);
  stiffness_role("curvature_sym", in.file.curvature_sym,
                 mm::Definiteness::Semi);

  const auto coupling_role = [&](const char* name,
                                 const std::optional<mm::Coupling3>& cc) {
    if (!cc) return;
    const std::string tag = std::string(name) + " ";
    const mm::SpdReport spd =
        mm::check_positive_definite(*cc, mm::Definiteness::Semi);
    rep.field(tag + "symmetry", "ok");
    rep.field(tag + "definiteness", spd.ok ? "semi ok" : "semi FAILED");
    rep.field(tag + "min eig", spd.min_eig);
    rep.field(tag + "class",
              mm::to_string(mm::classify_coupling(*cc, opt.tol)));
    if (cc->matrix().cwiseAbs().maxCoeff() == 0.0)
      rep.field(tag + "note", "non-redundant (Cc=0)");
    valid = valid && spd.ok;
  };
  coupling_role("coupling", in.file.coupling);
  coupling_role("curvature_skew", in.file.curvature_skew);

  const bool scalars_ok = in.file.mu >= 0.0 && in.file.lc >= 0.0 &&
                          in.file.rho > 0.0 && in.file.lc_hat >= 0.0 &&
                          in.file.eta1 >= 0.0 && in.file.eta2 >= 0.0 &&
                          in.file.eta3 >= 0.0;
  rep.field("scalars domain", scalars_ok ? "ok" : "FAILED");
  valid = valid && scalars_ok;

  rep.field("result", valid ? "valid" : "invalid");
  rep.emit();
  return valid ? 0 : 1;
}

int cmd_classify(const GlobalOptions& opt, const std::string& path) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  Report rep(opt.output);
  rep.comment("command", "classify " + path);
  rep.comment("digest", in.digest);

  bool any = false;
  const auto stiffness = [&](const char* name,
                             const std::optional<mm::StiffnessVoigt>& cv) {
    if (!cv) return;
    any = true;
    const mm::SymmetryClass cls = mm::classify_stiffness(*cv, opt.tol);
    rep.field(std::string(name) + " class", mm::to_string(cls));
    if (cls == mm::SymmetryClass::Isotropic) {
      const mm::IsotropicParams p = mm::isotropic_parameters(*cv);
      rep.field(std::string(name) + " kappa", p.kappa());
      rep.field(std::string(name) + " mu", p.mu);
    } else if (cls == mm::SymmetryClass::Cubic) {
      const mm::CubicParams p = mm::cubic_parameters(*cv);
      rep.field(std::string(name) + " kappa", p.kappa);
      rep.field(std::string(name) + " mu", p.mu);
      rep.field(std::string(name) + " mu_star", p.mu_star);
    }
  };
  stiffness("micro", in.file.micro);
  stiffness("e", in.file.e);
  stiffness("macro", in.file.macro);
  if (in.file.coupling) {
    any = true;
    rep.field("coupling class", mm::to_string(mm::classify_coupling(
                                    *in.file.coupling, opt.tol)));
  }
  if (!any)
    throw mm::InvalidParameterError("no classifiable sections in '" + path + "'");
  rep.emit();
  return 0;
}

int cmd_homogenize(const GlobalOptions& opt, const std::string& path) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  if (!in.file.micro || !in.file.e || in.file.macro)
    throw mm::InvalidParameterError(
        "homogenize needs exactly the sections [micro] and [e]");
  const mm::HomogenizationResult res =
      mm::macro_from_micro_e(*in.file.micro, *in.file.e);
  const mm::Notation conv = opt.convention.value_or(in.file.convention);

  Report rep(opt.output);
  rep.comment("command", "homogenize " + path);
  rep.comment("digest", in.digest);
  rep.convention_line(conv);
  rep.matrix_section("macro", res.macro.converted(conv).matrix());
  const mm::SymmetryClass cls = mm::classify_stiffness(res.macro, opt.tol);
  rep.comment("class", mm::to_string(cls));
  class_parameters(rep, "", res.macro, cls);
  rep.comment("asymmetry", res.asymmetry);
  rep.comment("spd", res.macro_spd.ok ? "ok" : "FAILED");
  rep.comment("harmonic residual", res.harmonic_residual);
  rep.comment("smaller than micro",
              res.smaller_than_micro.ok ? "ok" : "FAILED");
  rep.emit();
  return (res.macro_spd.ok && res.smaller_than_micro.ok) ? 0 : 1;
}

int cmd_invert(const GlobalOptions& opt, const std::string& path) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  if (!in.file.micro || !in.file.macro || in.file.e)
    throw mm::InvalidParameterError(
        "invert needs exactly the sections [micro] and [macro]");
  const mm::StiffnessVoigt e =
      mm::e_from_micro_macro(*in.file.micro, *in.file.macro);
  const mm::Notation conv = opt.convention.value_or(in.file.convention);

  Report rep(opt.output);
  rep.comment("command", "invert " + path);
  rep.comment("digest", in.digest);
  rep.convention_line(conv);
  rep.matrix_section("e", e.converted(conv).matrix());
  const mm::SymmetryClass cls = mm::classify_stiffness(e, opt.tol);
  rep.comment("class", mm::to_string(cls));
  class_parameters(rep, "", e, cls);
  const mm::SpdReport spd =
      mm::check_positive_definite(e, mm::Definiteness::Strict);
  rep.comment("spd", spd.ok ? "ok" : "FAILED");
  rep.emit();
  return spd.ok ? 0 : 1;
}

int cmd_project_coupling(const GlobalOptions& opt, const std::string& path,
                         const std::string& mean) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  if (!in.file.coupling)
    throw mm::InvalidParameterError(
        "project-coupling needs a [coupling] section");
  mm::Coupling3 projected;
  if (mean == "arithm")
    projected = mm::iso_arithm(*in.file.coupling);
  else if (mean == "log")
    projected = mm::iso_log(*in.file.coupling);
  else if (mean == "harm")
    projected = mm::iso_harm(*in.file.coupling);
  else
    throw mm::ParseError("--mean must be arithm, log or harm, got '" + mean +
                         "'");

  Report rep(opt.output);
  rep.comment("command", "project-coupling --mean " + mean + " " + path);
  rep.comment("digest", in.digest);
  rep.matrix_section("coupling", projected.matrix());
  rep.comment("gamma", projected(0, 0));
  rep.emit();
  return 0;
}

int cmd_energy(const GlobalOptions& opt, const std::string& path,
               const std::string& state_path) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  const std::string state_bytes = slurp(state_path);
  const mm::KinematicState state = mm::parse_state_text(state_bytes);
  const mm::RelaxedMaterial mat = mm::make_relaxed_material(in.file);
  mat.validate();

  const mm::EnergyParts parts = mm::relaxed_energy_parts(mat, state);
  const mm::Mat3 stress = mm::relaxed_stress(mat, state);
  const double kinetic = mm::kinetic_density(mat.inertia, state.p_dot);

  Report rep(opt.output);
  rep.comment("command", "energy " + path + " " + state_path);
  rep.comment("digest", in.digest);
  rep.comment("state digest", mm::content_digest(state_bytes));
  rep.field("elastic", parts.elastic);
  rep.field("micro", parts.micro);
  rep.field("rotational", parts.rotational);
  rep.field("curvature", parts.curvature);
  rep.field("total", parts.total());
  rep.field("kinetic", kinetic);
  rep.matrix_section("stress", stress);
  rep.emit();
  return 0;
}

int cmd_dispersion(const GlobalOptions& opt, const std::string& path,
                   const std::string& direction, double kmax, int n) {
  const LoadedMaterial in = load_material(path, opt.tol);
  echo_warnings(in.file);
  const mm::RelaxedMaterial mat = mm::make_relaxed_material(in.file);
  mat.validate();
  const mm::DispersionResult sweep =
      mm::dispersion_sweep(mat, parse_direction(direction), kmax, n);

  std::ostringstream csv;
  csv << "k";
  for (int b = 1; b <= 12; ++b) csv << ",omega_" << b;
  csv << "\n";
  for (std::size_t row = 0; row < sweep.k.size(); ++row) {
    csv << mm::format_number(sweep.k[row]);
    for (double w : sweep.omega[row]) csv << "," << mm::format_number(w);
    csv << "\n";
  }

  // the CSV table is the payload either way; text mode adds the echo lines
  Report rep(OutputMode::Text);
  if (opt.output == OutputMode::Text) {
    rep.comment("command", "dispersion " + path);
    rep.comment("digest", in.digest);
  }
  rep.raw(csv.str());
  rep.emit();
  return 0;
}

int cmd_oned_demo(const GlobalOptions& opt, double mu_e, double mu_micro,
                  double mu, const std::string& lc_list, int cells,
                  const std::string& bc) {
  mm::OneDProblem prob;
  prob.mu_e = mu_e;
  prob.mu_micro = mu_micro;
  prob.mu = mu;
  prob.n_cells = cells;
  if (bc == "natural")
    prob.p_bc = mm::PBoundary::Natural;
  else if (bc == "clamped")
    prob.p_bc = mm::PBoundary::Clamped;
  else
    throw mm::ParseError("--bc must be natural or clamped, got '" + bc + "'");

  const auto rows = mm::lc_sweep(prob, parse_number_list(lc_list, "lc-list"));

  std::ostringstream csv;
  csv << "Lc,mu_eff\n";
  for (const auto& [lc, mu_eff] : rows)
    csv << mm::format_number(lc) << "," << mm::format_number(mu_eff) << "\n";

  Report rep(OutputMode::Text);
  if (opt.output == OutputMode::Text) {
    std::ostringstream echo;
    echo << "oned-demo --mu-e " << mm::format_number(mu_e) << " --mu-micro "
         << mm::format_number(mu_micro) << " --lc-list " << lc_list
         << " --cells " << cells;
    rep.comment("command", echo.str());
  }
  rep.raw(csv.str());
  rep.emit();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anisotropic relaxed micromorphic elasticity toolbox"};
  app.require_subcommand(1);

  std::string convention_flag;
  double tol = 1e-9;
  std::string output_flag = "text";
  app.add_option("--convention", convention_flag,
                 "Convention for printed 6x6 matrices (voigt|mandel); "
                 "defaults to the input file's");
  app.add_option("--tol", tol, "Symmetry and classification tolerance");
  app.add_option("--output", output_flag, "Report format (text|csv)");

  std::string file, state_file, mean = "arithm";
  std::string direction = "0,0,1", lc_list, bc = "natural";
  double kmax = 3.0, mu_e = 1.0, mu_micro = 1.0, mu = 1.0;
  int npoints = 200, cells = 1000;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check symmetry, definiteness and classes of a material file");
  validate->add_option("file", file, "material file")->required();

  CLI::App* homogenize = app.add_subcommand(
      "homogenize", "Effective stiffness from [micro] and [e]");
  homogenize->add_option("file", file, "material file")->required();

  CLI::App* invert = app.add_subcommand(
      "invert", "Relaxation stiffness from [micro] and [macro]");
  invert->add_option("file", file, "material file")->required();

  CLI::App* classify = app.add_subcommand(
      "classify", "Report symmetry classes of the sections present");
  classify->add_option("file", file, "material file")->required();

  CLI::App* project = app.add_subcommand(
      "project-coupling", "Isotropic projection of the rotational coupling");
  project->add_option("file", file, "material file")->required();
  project->add_option("--mean", mean, "arithm|log|harm");

  CLI::App* energy = app.add_subcommand(
      "energy", "Energy split, stress and kinetic density at a state sample");
  energy->add_option("file", file, "material file")->required();
  energy->add_option("state", state_file, "kinematic state file")->required();

  CLI::App* dispersion = app.add_subcommand(
      "dispersion", "Plane wave frequencies along a direction, as CSV");
  dispersion->add_option("file", file, "material file")->required();
  dispersion->add_option("--direction", direction, "comma separated 3-vector");
  dispersion->add_option("--kmax", kmax, "largest wavenumber");
  dispersion->add_option("--n", npoints, "number of samples");

  CLI::App* oned = app.add_subcommand(
      "oned-demo", "Effective modulus of the axial two-field bar, as CSV");
  oned->add_option("--mu-e", mu_e, "elastic shear modulus");
  oned->add_option("--mu-micro", mu_micro, "micro shear modulus");
  oned->add_option("--mu", mu, "curvature shear scale");
  oned->add_option("--lc-list", lc_list, "comma separated lengths")->required();
  oned->add_option("--cells", cells, "grid cells");
  oned->add_option("--bc", bc, "micro distortion end treatment "
                               "(natural|clamped)");

  // let the global flags appear after the subcommand as well
  for (CLI::App* sub : {validate, homogenize, invert, classify, project,
                        energy, dispersion, oned})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    GlobalOptions opt;
    if (!convention_flag.empty())
      opt.convention = parse_convention_flag(convention_flag);
    opt.tol = tol;
    if (output_flag == "csv")
      opt.output = OutputMode::Csv;
    else if (output_flag != "text")
      throw mm::ParseError("--output must be text or csv, got '" +
                           output_flag + "'");

    if (app.got_subcommand(validate)) return cmd_validate(opt, file);
    if (app.got_subcommand(homogenize)) return cmd_homogenize(opt, file);
    if (app.got_subcommand(invert)) return cmd_invert(opt, file);
    if (app.got_subcommand(classify)) return cmd_classify(opt, file);
    if (app.got_subcommand(project))
      return cmd_project_coupling(opt, file, mean);
    if (app.got_subcommand(energy)) return cmd_energy(opt, file, state_file);
    if (app.got_subcommand(dispersion))
      return cmd_dispersion(opt, file, direction, kmax, npoints);
    if (app.got_subcommand(oned))
      return cmd_oned_demo(opt, mu_e, mu_micro, mu, lc_list, cells, bc);
    return 2;
  } catch (const mm::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
