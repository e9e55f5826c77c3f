#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hibi/error.hpp"
#include "hibi/reports.hpp"

namespace {

hibi::LatticeSpec load_spec(const std::string& family, const std::string& input) {
  if (!family.empty() && !input.empty())
    throw hibi::error(hibi::errc::bad_descriptor,
                      "give either --family or an input file, not both");
  if (!family.empty()) return hibi::LatticeSpec::from_family(family);
  if (input.empty())
    throw hibi::error(hibi::errc::bad_descriptor,
                      "no input: give --family or a LatticeSpec JSON file");
  std::ifstream in(input);
  if (!in)
    throw hibi::error(hibi::errc::bad_descriptor, "cannot open '" + input + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw hibi::error(hibi::errc::bad_descriptor,
                      std::string("invalid JSON: ") + e.what());
  }
  return hibi::LatticeSpec::from_json(j);
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    throw hibi::error(hibi::errc::bad_descriptor, "cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial model, cotangent spaces and singular locus of the "
               "toric variety attached to a finite distributive lattice"};
  app.require_subcommand(1);

  std::string family, input, out_path, format = "json", face_json_arg;
  bool with_faces = false, with_singular = false, with_oracle = false;
  std::size_t max_faces = 100000;

  auto add_input_opts = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "LatticeSpec JSON file");
    cmd->add_option("--family", family, "family descriptor: chain:n | boolean:n | grid:AxB | subsets:d,n");
  };

  auto* analyze = app.add_subcommand("analyze", "analyze a lattice");
  add_input_opts(analyze);
  analyze->add_flag("--faces", with_faces, "enumerate faces with cotangent reports");
  analyze->add_flag("--singular", with_singular, "compute the singular locus");
  analyze->add_flag("--oracle", with_oracle, "cross-check every face against the exact Jacobian oracle");
  analyze->add_option("--max-faces", max_faces, "face enumeration cap");
  analyze->add_option("--face", face_json_arg, "JSON list of element names; report this face only");
  analyze->add_option("--format", format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--out", out_path, "write the report to a file instead of stdout");

  auto* dot = app.add_subcommand("export-dot", "emit the Hasse diagram in DOT");
  add_input_opts(dot);
  bool highlight = false;
  dot->add_flag("--highlight-singular", highlight, "mark singular-locus component membership");
  dot->add_option("--max-faces", max_faces, "face enumeration cap");
  dot->add_option("--out", out_path, "write DOT to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    hibi::LatticeSpec spec = load_spec(family, input);
    if (app.got_subcommand(analyze)) {
      hibi::AnalyzeOptions opts;
      opts.faces = with_faces;
      opts.singular = with_singular;
      opts.oracle = with_oracle;
      opts.max_faces = max_faces;
      if (!face_json_arg.empty()) {
        nlohmann::json fj;
        try {
          fj = nlohmann::json::parse(face_json_arg);
        } catch (const nlohmann::json::exception& e) {
          throw hibi::error(hibi::errc::bad_descriptor,
                            std::string("--face expects a JSON list: ") + e.what());
        }
        opts.face = fj.get<std::vector<std::string>>();
      }
      auto rep = hibi::analyze(spec, opts);
      if (format == "text")
        write_out(out_path, hibi::render_text(rep));
      else
        write_out(out_path, rep.dump(2) + "\n");
    } else {
      write_out(out_path, hibi::export_dot(spec, highlight, max_faces));
    }
  } catch (const hibi::error& e) {
    std::cerr << hibi::errc_name(e.code()) << ": " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
